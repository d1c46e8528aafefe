#include "mline/report.hpp"

#include "mline/ahss.hpp"
#include "mline/appendix_a.hpp"
#include "mline/chern.hpp"
#include "mline/dictionary.hpp"
#include "mline/ro_pin2.hpp"
#include "mline/steenrod.hpp"
#include "mline/stems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace mline {

namespace {

std::string key_at(int k, const std::string& what) {
    return "k=" + std::to_string(k) + "/" + what;
}

ReportItem item(std::string key, std::string expected, std::string computed, bool pass,
                std::string citation) {
    return ReportItem{std::move(key), std::move(expected), std::move(computed), pass,
                      std::move(citation)};
}

/* Shards [lo, hi] across jobs; fn(k) returns the items for one parameter.
 * Results are concatenated in ascending k, independent of the job count. */
std::vector<ReportItem> sweep(int lo, int hi, int jobs,
                              const std::function<std::vector<ReportItem>(int)>& fn) {
    if (hi < lo)
        return {};
    size_t count = static_cast<size_t>(hi - lo + 1);
    std::vector<std::vector<ReportItem>> slots(count);
    if (jobs <= 1) {
        for (size_t i = 0; i < count; ++i)
            slots[i] = fn(lo + static_cast<int>(i));
    } else {
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&]() {
                for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    slots[i] = fn(lo + static_cast<int>(i));
            });
        for (auto& t : workers)
            t.join();
    }
    std::vector<ReportItem> out;
    for (auto& s : slots)
        out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return out;
}

std::vector<ReportItem> appendix_a_items(int k) {
    BmTable table;
    AppendixAReport rep = verify_appendix_a(k, table);
    std::vector<ReportItem> out;
    for (const auto& c : rep.results)
        out.push_back(item(key_at(k, c.lemma), c.expected,
                           c.vacuous ? "vacuous" : c.computed, c.pass, c.claimed));
    return out;
}

std::vector<ReportItem> chern_items(int k) {
    std::vector<ReportItem> out;
    BmTable table;
    try {
        SimpleChern sc = solve_simple_chern(k, table);
        Val2 worst = Val2::infinity();
        for (const auto& a : sc.phi.coeffs)
            worst = std::min(worst, val2(a));
        out.push_back(item(key_at(k, "a_i_2locally_integral"), ">= 0", "min " + worst.str(),
                           worst >= Val2::of(0), "a_i in Z_(2)[w]/(w^{4k+1})"));
        out.push_back(item(key_at(k, "nu_d"), "-2", val2(sc.d).str(), val2(sc.d) == Val2::of(-2),
                           "ch(phi) = 2^{4k-2} + d x^{4k}, nu(d) = -2"));
    } catch (const std::exception& e) {
        out.push_back(item(key_at(k, "simple_chern"), "lemma holds", e.what(), false,
                           "ch(phi) = 2^{4k-2} + d x^{4k}"));
    }
    if (k >= 2) {
        try {
            GammaClass g = solve_gamma(k, table);
            out.push_back(item(key_at(k, "nu_c_8k-8"), "-1", val2(g.c8k8).str(),
                               val2(g.c8k8) == Val2::of(-1), "nu(c_{8k-8}) = -1"));
            out.push_back(item(key_at(k, "nu_c_8k-4"), ">= 0", val2(g.c8k4).str(),
                               val2(g.c8k4) >= Val2::of(0), "nu(c_{8k-4}) >= 0"));
            out.push_back(item(key_at(k, "gamma_closed_forms"), "equal", "equal", true,
                               "series residuals match the closed-form c's"));
            long nu_k = val2_of_positive(k);
            if (k % 2 == 0) {
                ChernVector alpha = build_alpha_from(g, k, Rat(1));
                bool constant = alpha.support() == std::vector<int>{0};
                out.push_back(item(key_at(k, "alpha_even_constant"),
                                   "2^" + std::to_string(4L * k - 4 - nu_k),
                                   constant ? alpha.at(0).str() : "nonconstant support",
                                   constant && alpha.at(0) == pow2(4L * k - 4 - nu_k),
                                   "ch(c(alpha_k)) = 2^{4k-4-nu(k)}"));
            } else {
                bool ok = true;
                for (long u = 1; u <= 7; u += 2) {
                    ChernVector a = build_alpha_from(g, k, Rat(u));
                    ok = ok && val2(a.at(4 * k - 2)) == Val2::of(0);
                }
                out.push_back(item(key_at(k, "alpha_odd_nu_d"), "0 for e_unit in {1,3,5,7}",
                                   ok ? "0" : "breach", ok,
                                   "ch(c(alpha_k)) = 2^{4k-4-nu(k)} + d x^{4k-2}, nu(d) = 0"));
            }
        } catch (const std::exception& e) {
            out.push_back(item(key_at(k, "gamma_alpha"), "lemmas hold", e.what(), false,
                               "gamma and alpha_k constructions"));
        }
    }
    return out;
}

std::vector<ReportItem> steenrod_items(int m, int jmax) {
    std::vector<ReportItem> out;
    bool tables_ok = true, adem_ok = true, cells_ok = true;
    std::string detail = "ok";
    for (int j = -m; j <= jmax; ++j) {
        bool cell = cell_exists(m, j);
        int residue = ((j + m) % 4 + 4) % 4;
        if (cell != (j >= -m && residue != 3)) {
            cells_ok = false;
            detail = "cell pattern broken at j=" + std::to_string(j);
            break;
        }
        if (!cell)
            continue;
        try {
            bool s1 = sq_nonzero(1, m, j);
            if (s1 && cell_exists(m, j + 1) && sq_nonzero(1, m, j + 1)) {
                adem_ok = false;
                detail = "Sq1 Sq1 != 0 at j=" + std::to_string(j);
                break;
            }
            sq_nonzero(2, m, j);
        } catch (const std::exception& e) {
            tables_ok = false;
            detail = e.what();
            break;
        }
    }
    bool pass = tables_ok && adem_ok && cells_ok;
    out.push_back(item("m=" + std::to_string(m) + "/sq_tables_and_cells", "computed = tables",
                       pass ? "ok" : detail, pass,
                       "Cartan with w(-m lambda) = (1+q+q^2)^m vs the residue tables"));
    return out;
}

std::vector<ReportItem> ro_items(int k, int degBound) {
    std::vector<ReportItem> out;
    EulerChain chain = euler_reduce(k);
    GammaCoeff expected(Int(1) << (4 * k));
    bool coeff_ok = chain.final.coefficient == expected && chain.final.gammaPower == 2 &&
                    chain.final.bottPower == static_cast<unsigned>(k);
    out.push_back(item(key_at(k, "euler_coefficient"), "2^" + std::to_string(4 * k),
                       chain.final.coefficient.str(), coeff_ok,
                       "gamma(D)^{8k+2} = 2^{4k} (b_{-8D})^k gamma(D)^2"));
    int deg = degBound > 0 ? degBound : 4 * k + 8;
    Mod2AResult r = mod2A_feasible(k, deg);
    if (k == 0) {
        out.push_back(item(key_at(k, "mod2A"), "feasible", r.feasible ? "feasible" : "infeasible",
                           r.feasible, "(A+4)^0 P(A) = 1 has the solution P = 1"));
    } else {
        bool ok = !r.feasible && r.witnessIndex == 2 * k;
        std::ostringstream got;
        got << (r.feasible ? "feasible" : "infeasible, witness A^" + std::to_string(r.witnessIndex));
        out.push_back(item(key_at(k, "mod2A"), "infeasible, witness A^" + std::to_string(2 * k),
                           got.str(), ok, "compare coefficients of A^0 and A^{2k} mod 2A"));
    }
    return out;
}

std::vector<ReportItem> ahss_items(int k) {
    std::vector<ReportItem> out;
    BmTable table;
    try {
        AHSSVerdict v = second_lock(k, table);
        bool ok = v.kind == AHSSVerdict::Kind::NontrivialDifferential &&
                  v.exponent == 4L * k - 1 && v.targetDim == 8L * k - 1;
        out.push_back(item(key_at(k, "second_lock"),
                           "differential 2^" + std::to_string(4 * k - 1) + "[-1] -> [" +
                               std::to_string(8 * k - 1) + "]",
                           v.str(), ok, "2^{4k-1}[-1] -> phi[8k-1]"));
    } catch (const std::exception& e) {
        out.push_back(item(key_at(k, "second_lock"), "differential", e.what(), false,
                           "2^{4k-1}[-1] -> phi[8k-1]"));
    }
    if (k >= 2) {
        try {
            GammaClass g = solve_gamma(k, table);
            FirstLockResult r = first_lock_from(g, k, Rat(1));
            long nu_k = val2_of_positive(k);
            if (k % 2 == 0) {
                bool ok = r.verdict.kind == AHSSVerdict::Kind::PermanentCycle &&
                          r.verdict.exponent == 4L * k - 4 - nu_k;
                out.push_back(item(key_at(k, "first_lock"),
                                   "permanent cycle, exponent " + std::to_string(4 * k - 4 - nu_k),
                                   r.verdict.str(), ok, "2^{4k-4-nu(k)}[-1] is a permanent cycle"));
            } else {
                bool ok = r.verdict.kind == AHSSVerdict::Kind::NontrivialDifferential &&
                          r.targetClass && *r.targetClass == EClassify::FourPh2;
                for (long u = 3; u <= 7 && ok; u += 2) {
                    FirstLockResult ru = first_lock_from(g, k, Rat(u));
                    ok = ru.targetClass && *ru.targetClass == EClassify::FourPh2;
                }
                out.push_back(item(key_at(k, "first_lock"), "differential onto " + four_ph2_alias(),
                                   r.verdict.str() + ", target " +
                                       (r.targetClass ? e_classify_name(*r.targetClass) : "?"),
                                   ok, "nu(e(mu)) = 0 identifies 4{P^{k-1}h_2}"));
            }
        } catch (const std::exception& e) {
            out.push_back(item(key_at(k, "first_lock"), "parity verdict", e.what(), false,
                               "first-lock pipeline"));
        }
    }
    long imj = imj_exponent(k);
    out.push_back(item(key_at(k, "imj_exponent"), std::to_string(4 + val2_of_positive(k)),
                       std::to_string(imj), imj == 4 + val2_of_positive(k),
                       "pi_{8k-1} j'' = Z/2^{4+nu(k)}"));
    return out;
}

std::vector<ReportItem> mahowald_items_p(long p, long qmax_for_p) {
    std::vector<ReportItem> out;
    long bound = main_theorem_bound(p);
    long first_fail = -1;
    for (long q = 1; q <= qmax_for_p; ++q) {
        bool ex = fm_exists(p, q).exists;
        bool thm = q >= bound;
        if (ex != thm) {
            first_fail = q;
            break;
        }
    }
    out.push_back(item("p=" + std::to_string(p) + "/keystone",
                       "fm_exists(p,q) iff q >= " + std::to_string(bound),
                       first_fail < 0 ? "ok" : "mismatch at q=" + std::to_string(first_fail),
                       first_fail < 0, "main theorem vs L via the existence criterion"));
    return out;
}

std::vector<ReportItem> stems_items() {
    std::vector<ReportItem> out;
    for (const auto& name : relation_names()) {
        bool ok = relation_check(name);
        const StemRelation& info = relation_info(name);
        out.push_back(item("relation/" + name, "true", ok ? "true" : "false", ok, info.citation));
    }
    // Internal order consistency of the stored rows.
    bool orders_ok = true;
    std::string detail = "ok";
    for (int n = 0; n <= 20; ++n) {
        const StemGroup& g = stem_group(n);
        long product = 1;
        for (const auto& e : g.generators) {
            if (g.infinite)
                continue;
            if (e.order <= 0 || (g.order % e.order) != 0) {
                orders_ok = false;
                detail = "bad element order in stem " + std::to_string(n);
            }
            product *= e.order;
        }
        if (!g.infinite && g.order != 0 && product != g.order) {
            orders_ok = false;
            detail = "generator orders do not fill stem " + std::to_string(n);
        }
    }
    out.push_back(item("table/order_consistency", "consistent", detail, orders_ok,
                       "element order divides group order"));
    return out;
}

SuiteReport run_single(const std::string& name, const SuiteParams& params);

SuiteReport run_all(const SuiteParams& params) {
    SuiteReport report;
    report.suite = "all";
    report.params = nlohmann::json::object();
    for (const auto& name : kSuiteNames) {
        if (name == "all")
            continue;
        SuiteReport sub = run_single(name, params);
        report.params[name] = sub.params;
        for (auto& it : sub.items) {
            it.key = name + "/" + it.key;
            report.items.push_back(std::move(it));
        }
    }
    return report;
}

SuiteReport run_single(const std::string& name, const SuiteParams& params) {
    SuiteReport report;
    report.suite = name;
    report.params = nlohmann::json::object();
    int jobs = std::max(1, params.jobs);

    if (name == "appendix-a") {
        int kmax = params.kmax >= 0 ? params.kmax : 128;
        report.params["kmax"] = kmax;
        report.items = sweep(1, kmax, jobs, appendix_a_items);
    } else if (name == "chern") {
        int kmax = params.kmax >= 0 ? params.kmax : 64;
        report.params["kmax"] = kmax;
        report.items = sweep(1, kmax, jobs, chern_items);
    } else if (name == "steenrod") {
        int mmax = params.mmax >= 0 ? params.mmax : 63;
        report.params["mmax"] = mmax;
        int jmax = 64;
        report.items = sweep(0, mmax, jobs, [&](int m) { return steenrod_items(m, jmax); });
        PeriodicityResult pr = periodicity_check(std::max(8, mmax));
        report.items.push_back(item("periodicity", "4-periodic",
                                    pr.ok ? "ok"
                                          : "violated at (m=" + std::to_string(pr.m) +
                                                ", j=" + std::to_string(pr.j) + ")",
                                    pr.ok, "X(m) tables are invariant under m -> m+4"));
        bool zk_ok = true;
        for (int k = 1; k <= 64 && zk_ok; ++k)
            zk_ok = zk_middle_structure(k) == (k % 2 == 0 ? ZkMiddle::Split : ZkMiddle::EtaCubeCone);
        report.items.push_back(item("zk_middle_parity", "Split iff k even", zk_ok ? "ok" : "breach",
                                    zk_ok, "Z(k) middle cells via the p_1 twist"));
    } else if (name == "ro") {
        int kmax = params.kmax >= 0 ? params.kmax : 64;
        report.params["kmax"] = kmax;
        report.params["deg-bound"] = params.degBound > 0 ? params.degBound : -1;
        report.items =
            sweep(0, kmax, jobs, [&](int k) { return ro_items(k, params.degBound); });
    } else if (name == "ahss") {
        int kmax = params.kmax >= 0 ? params.kmax : 64;
        report.params["kmax"] = kmax;
        report.items = sweep(1, kmax, jobs, ahss_items);
    } else if (name == "mahowald") {
        long pmax = params.pmax >= 0 ? params.pmax : 512;
        long qmax = params.qmax >= 0 ? params.qmax : 1024;
        report.params["pmax"] = pmax;
        report.params["qmax"] = qmax;
        report.items = sweep(2, static_cast<int>(pmax), jobs, [&](int p) {
            return mahowald_items_p(p, 4L * p + 8);
        });
        bool minv_ok = true;
        std::string minv_detail = "ok";
        for (long q = 4; q <= qmax; ++q) {
            try {
                minv_degree(q);
            } catch (const std::exception& e) {
                minv_ok = false;
                minv_detail = e.what();
                break;
            }
        }
        report.items.push_back(item("minv_table", "16-row table matches", minv_detail, minv_ok,
                                    "Mahowald-invariant degrees, 16-periodic"));
        bool line_ok = true;
        std::string line_detail = "ok";
        // Base values plus the sixteen-row table evaluated at k = 1 and k = 2.
        static const long kBase[4] = {-1, -1, -1, 0};
        static const long kRow[16] = {0, 0, 1, 1, 1, 2, 2, 6, 8, 8, 9, 9, 9, 10, 10, 10};
        try {
            for (long m = 0; m <= 3 && line_ok; ++m)
                line_ok = mahowald_line(m) == kBase[m];
            for (long k16 = 1; k16 <= 2 && line_ok; ++k16)
                for (int r = 0; r < 16 && line_ok; ++r) {
                    long m = 16 * k16 + 4 + r;
                    line_ok = mahowald_line(m) == 16 * k16 + kRow[r];
                    if (!line_ok)
                        line_detail = "mismatch at m=" + std::to_string(m);
                }
        } catch (const std::exception& e) {
            line_ok = false;
            line_detail = e.what();
        }
        report.items.push_back(item("line_theorem_rows", "theorem values at k=1,2", line_detail,
                                    line_ok, "L(0..3) and the sixteen 16-periodic rows"));
    } else if (name == "stems") {
        report.items = stems_items();
    } else {
        throw std::invalid_argument("run_suite: unknown suite " + name);
    }
    return report;
}

} // namespace

const std::vector<std::string> kSuiteNames = {"appendix-a", "chern", "steenrod", "ro",
                                              "ahss",       "mahowald", "stems", "all"};

int SuiteReport::pass_count() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(),
                                          [](const ReportItem& i) { return i.pass; }));
}

int SuiteReport::fail_count() const { return static_cast<int>(items.size()) - pass_count(); }

bool SuiteReport::pass() const { return fail_count() == 0; }

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport report = (name == "all") ? run_all(params) : run_single(name, params);
    report.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["params"] = report.params;
    j["items"] = nlohmann::json::array();
    for (const auto& it : report.items)
        j["items"].push_back({{"key", it.key},
                              {"expected", it.expected},
                              {"computed", it.computed},
                              {"pass", it.pass},
                              {"citation", it.citation}});
    j["pass"] = report.pass();
    return j;
}

std::string to_tsv(const SuiteReport& report) {
    std::ostringstream os;
    os << "key\texpected\tcomputed\tpass\tcitation\n";
    for (const auto& it : report.items)
        os << it.key << '\t' << it.expected << '\t' << it.computed << '\t'
           << (it.pass ? "true" : "false") << '\t' << it.citation << '\n';
    return os.str();
}

} // namespace mline
