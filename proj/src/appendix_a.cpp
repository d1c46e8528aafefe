#include "mline/appendix_a.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace mline {

const TruncSeries& BmTable::series(int k) {
    auto it = cache_.find(k);
    if (it == cache_.end())
        it = cache_.emplace(k, log1p_over_z_pow(k, 4 * k)).first;
    return it->second;
}

Rat BmTable::bm(int k, int m) {
    if (m < 0 || m > 4 * k)
        throw std::invalid_argument("BmTable::bm: requires 0 <= m <= 4k");
    return series(k).coeff(m);
}

Rat bm_coeff(int k, int m) {
    static std::mutex mu;
    static BmTable table;
    std::lock_guard<std::mutex> lock(mu);
    return table.bm(k, m);
}

bool AppendixAReport::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const LemmaCheck& c) { return c.pass; });
}

namespace {

std::string eq(long v) { return "= " + std::to_string(v); }
std::string ge(long v) { return ">= " + std::to_string(v); }

LemmaCheck check_eq(const std::string& id, const std::string& claim, const Rat& value,
                    long expected) {
    Val2 got = val2(value);
    LemmaCheck c{id, claim, eq(expected), got.str(), false, false};
    c.pass = (got == Val2::of(expected));
    return c;
}

/* Lower bound over an index range; computed column records the binding m. */
LemmaCheck check_range_ge(const std::string& id, const std::string& claim, BmTable& table,
                          int k, int m_lo, int m_hi, long bound) {
    LemmaCheck c{id, claim, ge(bound), "", false, false};
    if (m_lo > m_hi) {
        c.vacuous = true;
        c.pass = true;
        c.computed = "vacuous (empty range)";
        return c;
    }
    Val2 worst = Val2::infinity();
    int worst_m = m_lo;
    for (int m = m_lo; m <= m_hi; ++m) {
        Val2 v = val2(table.bm(k, m));
        if (v < worst) {
            worst = v;
            worst_m = m;
        }
    }
    c.pass = (worst >= Val2::of(bound));
    std::ostringstream os;
    os << "min " << worst.str() << " at m=" << worst_m;
    c.computed = os.str();
    return c;
}

} // namespace

AppendixAReport verify_appendix_a(int k, BmTable& table) {
    if (k < 0)
        throw std::invalid_argument("verify_appendix_a: k must be nonnegative");
    AppendixAReport report;
    report.k = k;
    auto& out = report.results;

    if (k == 0) {
        // Degenerate case of the first lemma: f(z) = ln(1+z)/z, b_0 = 1.
        Val2 got = val2(series_pow(log1p_over_z(0), 1).coeff(0));
        LemmaCheck c{"nu_b_4k", "nu(b_0) = 0 (degenerate k=0)", eq(0), got.str(), false,
                     got == Val2::of(0)};
        out.push_back(c);
        for (const char* id : {"nu_bm_upper_range", "nu_b_4k_minus_2", "nu_b_4k_minus_3",
                               "nu_b_4k_minus_4", "nu_b_diff", "nu_bm_low_sweep"})
            out.push_back({id, "not applicable at k=0", "", "vacuous (empty range)", true, true});
        return report;
    }

    long nu_k = val2_of_positive(k);

    out.push_back(check_eq("nu_b_4k", "nu(b_{4k}) = -4k", table.bm(k, 4 * k), -4L * k));

    out.push_back(check_range_ge("nu_bm_upper_range", "nu(b_m) >= -(4k-2), 1 <= m <= 4k-1",
                                 table, k, 1, 4 * k - 1, -(4L * k - 2)));

    out.push_back(check_eq("nu_b_4k_minus_2", "nu(b_{4k-2}) = nu(k) - (4k-3)",
                           table.bm(k, 4 * k - 2), nu_k - (4L * k - 3)));

    out.push_back(check_eq("nu_b_4k_minus_3", "nu(b_{4k-3}) = nu(k) - (4k-3)",
                           table.bm(k, 4 * k - 3), nu_k - (4L * k - 3)));

    out.push_back(check_eq("nu_b_4k_minus_4", "nu(b_{4k-4}) = nu(k) - (4k-4)",
                           table.bm(k, 4 * k - 4), nu_k - (4L * k - 4)));

    {
        Rat diff = table.bm(k, 4 * k - 2) - table.bm(k, 4 * k - 3);
        if (k % 2 == 0) {
            out.push_back(check_eq("nu_b_diff", "nu(b_{4k-2} - b_{4k-3}) = nu(k) - (4k-4), k even",
                                   diff, nu_k - (4L * k - 4)));
        } else {
            Val2 got = val2(diff);
            long bound = nu_k - (4L * k - 5);
            LemmaCheck c{"nu_b_diff", "nu(b_{4k-2} - b_{4k-3}) >= nu(k) - (4k-5), k odd",
                         ge(bound), got.str(), false, got >= Val2::of(bound)};
            out.push_back(c);
        }
    }

    out.push_back(check_range_ge("nu_bm_low_sweep", "nu(b_m) >= nu(k) - (4k-5), m <= 4k-5",
                                 table, k, 0, 4 * k - 5, nu_k - (4L * k - 5)));

    return report;
}

AppendixAReport verify_appendix_a(int k) {
    BmTable table;
    return verify_appendix_a(k, table);
}

nlohmann::json to_json(const AppendixAReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : report.results)
        rows.push_back({{"k", report.k},
                        {"lemma", c.lemma},
                        {"expected", c.expected},
                        {"computed", c.vacuous ? "vacuous" : c.computed},
                        {"pass", c.pass}});
    return rows;
}

} // namespace mline
