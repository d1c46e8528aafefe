#include "mline/ro_pin2.hpp"

#include <sstream>

namespace mline {

ROElem ROElem::from_int(const Int& c) {
    ROElem e;
    e.c1_ = c;
    return e;
}

ROElem ROElem::D() {
    ROElem e;
    e.cD_ = 1;
    return e;
}

ROElem ROElem::A() {
    ROElem e;
    e.mixed_[{1, 0}] = 1;
    return e;
}

ROElem ROElem::B() {
    ROElem e;
    e.mixed_[{0, 1}] = 1;
    return e;
}

void ROElem::add_term(const Int& coeff, unsigned a, unsigned b) {
    if (coeff == 0)
        return;
    if (a == 0 && b == 0) {
        c1_ += coeff;
        return;
    }
    mixed_[{a, b}] += coeff;
}

void ROElem::prune() {
    for (auto it = mixed_.begin(); it != mixed_.end();)
        it = (it->second == 0) ? mixed_.erase(it) : std::next(it);
}

ROElem ROElem::normalize(const std::vector<std::pair<Int, ROMonomial>>& formal) {
    ROElem out;
    // Worklist of monomials still carrying a B-power >= 2.
    std::vector<std::pair<Int, ROMonomial>> work = formal;
    while (!work.empty()) {
        auto [coeff, mono] = work.back();
        work.pop_back();
        if (coeff == 0)
            continue;
        // D^2 = 1; DA = A and DB = B absorb D into any mixed monomial.
        unsigned d = mono.d % 2;
        if (mono.a > 0 || mono.b > 0)
            d = 0;
        if (mono.b >= 2) {
            // B^2 = 4A - 8B
            work.push_back({coeff * 4, {d, mono.a + 1, mono.b - 2}});
            work.push_back({coeff * -8, {d, mono.a, mono.b - 1}});
            continue;
        }
        if (d == 1)
            out.cD_ += coeff;
        else
            out.add_term(coeff, mono.a, mono.b);
    }
    out.prune();
    return out;
}

ROElem ro_normalize(const std::vector<std::pair<Int, ROMonomial>>& formal) {
    return ROElem::normalize(formal);
}

Int ROElem::mixed(unsigned a, unsigned b) const {
    auto it = mixed_.find({a, b});
    return it == mixed_.end() ? Int(0) : it->second;
}

ROElem operator+(const ROElem& x, const ROElem& y) {
    ROElem out = x;
    out.c1_ += y.c1_;
    out.cD_ += y.cD_;
    for (const auto& [key, c] : y.mixed_)
        out.mixed_[key] += c;
    out.prune();
    return out;
}

ROElem operator-(const ROElem& x, const ROElem& y) {
    return x + y.scaled(-1);
}

ROElem ROElem::scaled(const Int& c) const {
    ROElem out;
    out.c1_ = c1_ * c;
    out.cD_ = cD_ * c;
    for (const auto& [key, v] : mixed_)
        out.mixed_[key] = v * c;
    out.prune();
    return out;
}

ROElem operator*(const ROElem& x, const ROElem& y) {
    // Expand over the basis and renormalize; D * D = 1.
    std::vector<std::pair<Int, ROMonomial>> formal;
    auto terms = [](const ROElem& e) {
        std::vector<std::pair<Int, ROMonomial>> t;
        if (e.c1_ != 0)
            t.push_back({e.c1_, {0, 0, 0}});
        if (e.cD_ != 0)
            t.push_back({e.cD_, {1, 0, 0}});
        for (const auto& [key, c] : e.mixed_)
            t.push_back({c, {0, key.first, key.second}});
        return t;
    };
    for (const auto& [cx, mx] : terms(x))
        for (const auto& [cy, my] : terms(y))
            formal.push_back({cx * cy, {mx.d + my.d, mx.a + my.a, mx.b + my.b}});
    return ROElem::normalize(formal);
}

ROElem ro_mul(const ROElem& x, const ROElem& y) { return x * y; }

bool operator==(const ROElem& x, const ROElem& y) {
    return x.c1_ == y.c1_ && x.cD_ == y.cD_ && x.mixed_ == y.mixed_;
}

std::string ROElem::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Int& c, const std::string& mono) {
        if (c == 0)
            return;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Int a = abs(c);
        if (a != 1 || mono.empty())
            os << a.str();
        os << mono;
        first = false;
    };
    emit(c1_, "");
    emit(cD_, "D");
    // Pure A-powers first, then the A^a B terms, each by ascending degree.
    for (unsigned b = 0; b <= 1; ++b)
        for (const auto& [key, c] : mixed_) {
            if (key.second != b)
                continue;
            std::string mono;
            if (key.first > 0)
                mono += key.first == 1 ? "A" : "A^" + std::to_string(key.first);
            if (key.second > 0)
                mono += "B";
            emit(c, mono);
        }
    if (first)
        os << "0";
    return os.str();
}

GammaCoeff GammaCoeff::reduce(const ROElem& e) {
    GammaCoeff out;
    out.int_part_ = e.c1() - e.cD();  // (D+1)gamma = 0, so D acts as -1
    for (const auto& [key, c] : e.mixed_terms()) {
        if (key.second != 0)
            continue;  // B gamma = 0
        if (c % 2 != 0)
            out.a_part_.insert(key.first);  // 2A gamma = 0
    }
    return out;
}

std::string GammaCoeff::str() const {
    std::ostringstream os;
    os << int_part_.str();
    for (unsigned n : a_part_)
        os << " + A^" << n;
    return os.str();
}

std::string EulerExpr::str() const {
    std::ostringstream os;
    os << "(" << coefficient.str() << ")";
    if (bottPower > 0)
        os << " b(-8D)^" << bottPower;
    os << " gamma(D)^" << gammaPower;
    return os.str();
}

EulerChain euler_reduce(int k) {
    if (k < 0)
        throw std::invalid_argument("euler_reduce: k must be nonnegative");
    EulerChain chain;
    ROElem eight_one_minus_d = ROElem::from_int(8) - ROElem::D().scaled(8);

    EulerExpr state;
    state.gammaPower = static_cast<unsigned>(8 * k + 2);
    state.bottPower = 0;
    state.coefficient = GammaCoeff(Int(1));
    chain.steps.push_back(state);

    // gamma^8 b_{8D} = 8(1-D), applied k times; each coefficient is the exact
    // RO-product reduced in the gamma-torsion module, where (1-D) acts as 2.
    ROElem acc = ROElem::one();
    for (int i = 1; i <= k; ++i) {
        acc = acc * eight_one_minus_d;
        state.gammaPower -= 8;
        state.bottPower += 1;
        state.coefficient = GammaCoeff::reduce(acc);
        chain.steps.push_back(state);
    }
    chain.final = state;
    return chain;
}

Mod2AResult mod2A_feasible(int k, int degP) {
    if (k < 0 || degP < 0)
        throw std::invalid_argument("mod2A_feasible: negative argument");
    // Coefficients of (A+4)^{2k}.
    int deg = 2 * k;
    std::vector<Int> w(static_cast<size_t>(deg) + 1);
    {
        Int binom = 1;
        Int four_pow = Int(1) << (2 * deg);  // 4^{2k}
        for (int i = 0; i <= deg; ++i) {
            w[static_cast<size_t>(i)] = binom * four_pow;
            binom = binom * (deg - i) / (i + 1);
            if (four_pow > 1)
                four_pow >>= 2;
        }
    }

    Mod2AResult out;
    // Constant terms must match exactly: membership in 2A Z[A] forces it.
    Int target = Int(1) << (4 * k);
    if (target % w[0] != 0)
        return {false, 0, {}};
    Int p0 = target / w[0];

    // Coefficients of A^j for j >= 1 must be even.  Over F_2 this is a linear
    // system in p_1..p_degP with a known contribution from p_0.
    int rows = deg + degP;
    std::vector<std::vector<char>> mat;  // coefficient bits, one row per j
    std::vector<char> rhs;
    for (int j = 1; j <= rows; ++j) {
        std::vector<char> row(static_cast<size_t>(degP), 0);
        for (int t = 1; t <= degP && t <= j; ++t) {
            int i = j - t;
            if (i <= deg)
                row[static_cast<size_t>(t - 1)] =
                    static_cast<char>(w[static_cast<size_t>(i)] % 2 != 0);
        }
        char b = 0;
        if (j <= deg)
            b = static_cast<char>((w[static_cast<size_t>(j)] * p0) % 2 != 0);
        mat.push_back(std::move(row));
        rhs.push_back(b);
    }

    // Forward elimination in ascending j; the first inconsistent row is the witness.
    std::vector<int> pivot_of_col(static_cast<size_t>(degP), -1);
    for (int j = 0; j < rows; ++j) {
        auto& row = mat[static_cast<size_t>(j)];
        char b = rhs[static_cast<size_t>(j)];
        for (int c = 0; c < degP; ++c) {
            if (!row[static_cast<size_t>(c)])
                continue;
            int p = pivot_of_col[static_cast<size_t>(c)];
            if (p < 0)
                continue;
            const auto& prow = mat[static_cast<size_t>(p)];
            for (int c2 = c; c2 < degP; ++c2)
                row[static_cast<size_t>(c2)] =
                    static_cast<char>(row[static_cast<size_t>(c2)] ^ prow[static_cast<size_t>(c2)]);
            b = static_cast<char>(b ^ rhs[static_cast<size_t>(p)]);
        }
        rhs[static_cast<size_t>(j)] = b;
        int lead = -1;
        for (int c = 0; c < degP; ++c)
            if (row[static_cast<size_t>(c)]) {
                lead = c;
                break;
            }
        if (lead < 0) {
            if (b) {
                out.feasible = false;
                out.witnessIndex = j + 1;  // rows are indexed from A^1
                return out;
            }
            continue;
        }
        pivot_of_col[static_cast<size_t>(lead)] = j;
    }

    // Consistent: back-substitute with free variables zero.
    std::vector<char> p(static_cast<size_t>(degP), 0);
    for (int c = degP - 1; c >= 0; --c) {
        int r = pivot_of_col[static_cast<size_t>(c)];
        if (r < 0)
            continue;
        char v = rhs[static_cast<size_t>(r)];
        const auto& row = mat[static_cast<size_t>(r)];
        for (int c2 = c + 1; c2 < degP; ++c2)
            v = static_cast<char>(v ^ (row[static_cast<size_t>(c2)] & p[static_cast<size_t>(c2)]));
        p[static_cast<size_t>(c)] = v;
    }
    out.feasible = true;
    out.poly.push_back(p0);
    for (int t = 0; t < degP; ++t)
        out.poly.push_back(Int(p[static_cast<size_t>(t)]));
    return out;
}

nlohmann::json ro_report_row(int k, const EulerChain& chain, const Mod2AResult& mod2a) {
    GammaCoeff expected(Int(1) << (4 * k));
    bool pass = chain.final.coefficient == expected && chain.final.gammaPower == 2 &&
                chain.final.bottPower == static_cast<unsigned>(k) &&
                (k == 0 ? mod2a.feasible : (!mod2a.feasible && mod2a.witnessIndex == 2 * k));
    return {{"k", k},
            {"coefficient", chain.final.coefficient.str()},
            {"witnessIndex", mod2a.witnessIndex},
            {"pass", pass}};
}

} // namespace mline
