#include "mline/ahss.hpp"

#include <sstream>

namespace mline {

std::string AHSSVerdict::str() const {
    std::ostringstream os;
    if (kind == Kind::PermanentCycle)
        os << "2^" << exponent << "[-1] permanent cycle";
    else
        os << "2^" << exponent << "[-1] -> [" << targetDim << "] nontrivial differential";
    return os.str();
}

int iota(long m) { return static_cast<int>(((m % 2) + 2) % 2); }

AHSSVerdict decide(long l, const Val2& nu_d, long m) {
    if (l < 0 || m < 1)
        throw std::invalid_argument("decide: requires l >= 0 and m >= 1");
    AHSSVerdict v;
    v.exponent = l;
    if (nu_d >= Val2::of(iota(m))) {
        v.kind = AHSSVerdict::Kind::PermanentCycle;
    } else {
        v.kind = AHSSVerdict::Kind::NontrivialDifferential;
        v.targetDim = 4 * m - 1;
    }
    return v;
}

long imj_exponent(int k) {
    if (k < 1)
        throw std::invalid_argument("imj_exponent: k must be positive");
    return 4 + val2_of_positive(k);
}

EClassify e_classify(const Val2& nu_e) {
    if (nu_e >= Val2::of(1))
        return EClassify::ZeroClass;
    if (nu_e == Val2::of(0))
        return EClassify::FourPh2;
    if (nu_e == Val2::of(-1))
        return EClassify::TwoPh2;
    if (nu_e == Val2::of(-2))
        return EClassify::Ph2;
    throw std::invalid_argument("e_classify: valuation " + nu_e.str() +
                                " outside the classification table");
}

std::string e_classify_name(EClassify c) {
    switch (c) {
    case EClassify::ZeroClass: return "0";
    case EClassify::Ph2: return "{P^{k-1}h_2}";
    case EClassify::TwoPh2: return "2{P^{k-1}h_2}";
    case EClassify::FourPh2: return "{P^{k-1}h_1^3}";  // = 4{P^{k-1}h_2}
    }
    return "?";
}

bool cp_bottom_is_eta(long n) {
    if (n < 1)
        throw std::invalid_argument("cp_bottom_is_eta: n must be positive");
    return n % 2 == 1;
}

AHSSVerdict second_lock(int k, BmTable& table) {
    if (k < 1)
        throw std::invalid_argument("second_lock: k must be positive");
    SimpleChern sc = solve_simple_chern(k, table);

    // Hypothesis (4) for Z = Sigma^{-(8k+2)} CP^{8k+1}_{4k+1}: bottom is C-eta.
    if (!cp_bottom_is_eta(4L * k + 1))
        throw LemmaViolation("second_lock: C-eta bottom hypothesis fails");

    // ch(c(r(phi))) = 2^{4k-1} + 2d x^{4k}; the support is even, so the
    // doubling rule applies directly.
    ChernVector ch;
    ch.k = k;
    ch.coeffs.assign(static_cast<size_t>(4 * k) + 1, Rat(0));
    ch.coeffs[0] = pow2(4L * k - 2);
    ch.coeffs[static_cast<size_t>(4 * k)] = sc.d;
    ChernVector doubled = realify_complexify(ch);

    AHSSVerdict v = decide(4L * k - 1, val2(doubled.at(4 * k)), 2L * k);
    if (v.kind != AHSSVerdict::Kind::NontrivialDifferential || v.targetDim != 8L * k - 1)
        throw LemmaViolation("second_lock: expected a differential onto dimension 8k-1 at k=" +
                             std::to_string(k));
    return v;
}

AHSSVerdict second_lock(int k) {
    BmTable table;
    return second_lock(k, table);
}

FirstLockResult first_lock_from(const GammaClass& gamma, int k, const Rat& e_unit) {
    if (k < 2)
        throw std::invalid_argument("first_lock: requires k >= 2");
    // Hypothesis (4) for Z(k): its skeleton is Sigma^{-(8k+2)} CP^{8k-3}_{4k+1},
    // whose bottom is C-eta; ko-injectivity of the stunted skeleton is the
    // cited lemma and is not re-proved here.
    if (!cp_bottom_is_eta(4L * k + 1))
        throw LemmaViolation("first_lock: C-eta bottom hypothesis fails");
    ChernVector alpha = build_alpha_from(gamma, k, e_unit);
    long nu_k = val2_of_positive(k);
    long l = 4L * k - 4 - nu_k;
    long m = 2L * k - 1;  // top cell of Z(k) is 8k-4 = 4m

    FirstLockResult out;
    if (k % 2 == 0) {
        out.verdict = decide(l, Val2::infinity(), m);
        if (out.verdict.kind != AHSSVerdict::Kind::PermanentCycle)
            throw LemmaViolation("first_lock: even k must give a permanent cycle");
    } else {
        Rat d = alpha.at(4 * k - 2);
        out.verdict = decide(l, val2(d), m);
        if (out.verdict.kind != AHSSVerdict::Kind::NontrivialDifferential)
            throw LemmaViolation("first_lock: odd k must give a differential");
        // e(mu) = d + a with nu(a) >= 1 and nu(d) = 0, so nu(e(mu)) = nu(d).
        out.targetClass = e_classify(val2(d));
        if (*out.targetClass != EClassify::FourPh2)
            throw LemmaViolation("first_lock: odd-k target must classify as {P^{k-1}h_1^3}");
    }
    return out;
}

FirstLockResult first_lock(int k, const Rat& e_unit, BmTable& table) {
    return first_lock_from(solve_gamma(k, table), k, e_unit);
}

FirstLockResult first_lock(int k, const Rat& e_unit) {
    BmTable table;
    return first_lock(k, e_unit, table);
}

nlohmann::json to_json(int k, const AHSSVerdict& v) {
    nlohmann::json j;
    j["k"] = k;
    j["kind"] = v.kind == AHSSVerdict::Kind::PermanentCycle ? "permanent-cycle"
                                                            : "nontrivial-differential";
    j["exponent"] = v.exponent;
    if (v.kind == AHSSVerdict::Kind::NontrivialDifferential)
        j["targetDim"] = v.targetDim;
    return j;
}

nlohmann::json to_json(int k, const FirstLockResult& r) {
    nlohmann::json j = to_json(k, r.verdict);
    if (r.targetClass)
        j["targetClass"] = e_classify_name(*r.targetClass);
    return j;
}

} // namespace mline
