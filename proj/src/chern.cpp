#include "mline/chern.hpp"

#include "mline/series.hpp"
#include "mline/steenrod.hpp"

#include <sstream>

namespace mline {

std::vector<int> ChernVector::support() const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
        if (!coeffs[static_cast<size_t>(j)].is_zero())
            out.push_back(j);
    return out;
}

ChernVector ch_of_kclass(const KClass& kc, int order) {
    if (kc.coeffs.empty())
        throw std::invalid_argument("ch_of_kclass: empty class");
    TruncSeries u = exp_minus_one_over_x(order);
    TruncSeries thom = series_pow(u, static_cast<unsigned long>(4 * kc.k + 1));
    TruncSeries e = exp_minus_one(order);
    // Horner in (e^x - 1).
    TruncSeries poly = TruncSeries::constant(kc.coeffs.back(), order);
    for (int i = static_cast<int>(kc.coeffs.size()) - 2; i >= 0; --i)
        poly = poly * e + TruncSeries::constant(kc.coeffs[static_cast<size_t>(i)], order);
    TruncSeries ch = thom * poly;
    ChernVector out;
    out.k = kc.k;
    out.coeffs = ch.coeffs();
    return out;
}

SimpleChern solve_simple_chern(int k, BmTable& table) {
    if (k < 1)
        throw std::invalid_argument("solve_simple_chern: k must be positive");
    const TruncSeries& f = table.series(k);
    Rat scale = pow2(4L * k - 2);
    SimpleChern out;
    out.phi.k = k;
    out.phi.coeffs.reserve(static_cast<size_t>(4 * k));
    for (int i = 0; i < 4 * k; ++i) {
        Rat ai = scale * f.coeff(i);
        if (val2(ai) < Val2::of(0)) {
            std::ostringstream os;
            os << "solve_simple_chern: a_" << i << " = " << ai.str()
               << " is not 2-locally integral at k=" << k;
            throw LemmaViolation(os.str());
        }
        out.phi.coeffs.push_back(ai);
    }
    // Cancel the z^{4k} coefficient of f(z) (2^{4k-2} + d z^{4k}) exactly.
    out.d = -(scale * f.coeff(4 * k));
    if (val2(out.d) != Val2::of(-2)) {
        std::ostringstream os;
        os << "solve_simple_chern: nu(d) = " << val2(out.d).str() << " != -2 at k=" << k;
        throw LemmaViolation(os.str());
    }
    return out;
}

SimpleChern solve_simple_chern(int k) {
    BmTable table;
    return solve_simple_chern(k, table);
}

ChernVector realify_complexify(const ChernVector& ch) {
    for (int j = 1; j < static_cast<int>(ch.coeffs.size()); j += 2)
        if (!ch.coeffs[static_cast<size_t>(j)].is_zero())
            throw std::invalid_argument(
                "realify_complexify: input has odd x-degree support at j=" + std::to_string(j));
    ChernVector out;
    out.k = ch.k;
    out.coeffs.reserve(ch.coeffs.size());
    for (const auto& c : ch.coeffs)
        out.coeffs.push_back(c * Rat(2));
    return out;
}

GammaClass solve_gamma(int k, BmTable& table) {
    if (k < 2)
        throw std::invalid_argument("solve_gamma: requires k >= 2");
    long nu_k = val2_of_positive(k);
    Rat scale = pow2(4L * k - 5 - nu_k);
    const TruncSeries& f = table.series(k);  // order 4k, b_0..b_{4k}

    GammaClass out;
    out.gamma.k = k;
    out.gamma.coeffs.reserve(static_cast<size_t>(4 * k - 4));
    for (int i = 0; i <= 4 * k - 5; ++i) {
        Rat ai = scale * f.coeff(i);
        if (val2(ai) < Val2::of(0)) {
            std::ostringstream os;
            os << "solve_gamma: a_" << i << " = " << ai.str()
               << " is not 2-locally integral at k=" << k;
            throw LemmaViolation(os.str());
        }
        out.gamma.coeffs.push_back(ai);
    }

    // Residual part of ch(gamma) by exact series arithmetic: with E = e^x - 1,
    //   ch(gamma) = 2^c - 2^c (b_{4k-4} E^{8k-3} + b_{4k-3} E^{8k-2} + b_{4k-2} E^{8k-1}) / x^{4k+1}
    // truncated at x-degree 4k-2.  The subtraction fixes the sign of the c's;
    // every valuation claim is sign independent.
    int order = 8 * k - 1;
    TruncSeries e = exp_minus_one(order);
    TruncSeries p1 = series_pow(e, static_cast<unsigned long>(8 * k - 3));
    TruncSeries p2 = p1 * e;
    TruncSeries p3 = p2 * e;
    TruncSeries residual = p1.scaled(f.coeff(4 * k - 4)) + p2.scaled(f.coeff(4 * k - 3)) +
                           p3.scaled(f.coeff(4 * k - 2));
    residual = residual.shift_down(4 * k + 1).scaled(-scale);

    out.c8k8 = residual.coeff(4 * k - 4);
    out.c8k6 = residual.coeff(4 * k - 3);
    out.c8k4 = residual.coeff(4 * k - 2);

    Rat cf8 = -(scale * f.coeff(4 * k - 4));
    Rat cf4 = -(scale * (Rat((8L * k - 3) * (3L * k - 1), 3) * f.coeff(4 * k - 4) +
                         Rat(4L * k - 1) * f.coeff(4 * k - 3) + f.coeff(4 * k - 2)));
    if (out.c8k8 != cf8)
        throw LemmaViolation("solve_gamma: series residual c_{8k-8} differs from closed form at k=" +
                             std::to_string(k));
    if (out.c8k4 != cf4)
        throw LemmaViolation("solve_gamma: series residual c_{8k-4} differs from closed form at k=" +
                             std::to_string(k));
    if (val2(out.c8k8) != Val2::of(-1))
        throw LemmaViolation("solve_gamma: nu(c_{8k-8}) = " + val2(out.c8k8).str() +
                             " != -1 at k=" + std::to_string(k));
    if (val2(out.c8k4) < Val2::of(0))
        throw LemmaViolation("solve_gamma: nu(c_{8k-4}) = " + val2(out.c8k4).str() +
                             " < 0 at k=" + std::to_string(k));
    return out;
}

GammaClass solve_gamma(int k) {
    BmTable table;
    return solve_gamma(k, table);
}

ChernVector build_alpha_from(const GammaClass& g, int k, const Rat& e_unit) {
    if (k < 2)
        throw std::invalid_argument("build_alpha: requires k >= 2");
    if (val2(e_unit) != Val2::of(0))
        throw std::invalid_argument("build_alpha: e_unit must be a 2-adic unit");
    long nu_k = val2_of_positive(k);

    // ch(c(alpha')) doubles even x-degrees of ch(gamma) and kills the odd one
    // (complex conjugation acts by (-1)^j on H^{2j}).
    size_t top = static_cast<size_t>(4 * k - 2);
    ChernVector alpha_prime;
    alpha_prime.k = k;
    alpha_prime.coeffs.assign(top + 1, Rat(0));
    alpha_prime.coeffs[0] = pow2(4L * k - 4 - nu_k);
    alpha_prime.coeffs[top - 2] = Rat(2) * g.c8k8;
    alpha_prime.coeffs[top] = Rat(2) * g.c8k4;

    // The middle-cell structure of Z(k) selects the correction classes; it is
    // imported from the Thom-spectrum computation, not re-derived from parity.
    bool split = zk_middle_structure(k) == ZkMiddle::Split;

    ChernVector correction;
    correction.k = k;
    correction.coeffs.assign(top + 1, Rat(0));
    if (split) {
        // 2 c_{8k-8} phi_1 + c_{8k-4} phi_2 with ch(c(phi_1)) = x^{4k-4},
        // ch(c(phi_2)) = 2 x^{4k-2}; both multipliers must be 2-locally integral.
        Rat m1 = Rat(2) * g.c8k8;
        Rat m2 = g.c8k4;
        if (val2(m1) < Val2::of(0) || val2(m2) < Val2::of(0))
            throw LemmaViolation("build_alpha: correction multiplier not 2-locally integral");
        correction.coeffs[top - 2] = m1;
        correction.coeffs[top] = m2 * Rat(2);
    } else {
        // 2 c_{8k-8} phi_3 with ch(c(phi_3)) = x^{4k-4} + e x^{4k-2}.
        Rat m3 = Rat(2) * g.c8k8;
        if (val2(m3) < Val2::of(0))
            throw LemmaViolation("build_alpha: correction multiplier not 2-locally integral");
        correction.coeffs[top - 2] = m3;
        correction.coeffs[top] = m3 * e_unit;
    }

    ChernVector out;
    out.k = k;
    out.coeffs.reserve(top + 1);
    for (size_t j = 0; j <= top; ++j)
        out.coeffs.push_back(alpha_prime.coeffs[j] - correction.coeffs[j]);

    if (split) {
        if (out.support() != std::vector<int>{0})
            throw LemmaViolation("build_alpha: even-k alpha has non-constant support at k=" +
                                 std::to_string(k));
    } else {
        if (out.support() != std::vector<int>{0, 4 * k - 2})
            throw LemmaViolation("build_alpha: odd-k alpha has unexpected support at k=" +
                                 std::to_string(k));
        Rat d = out.coeffs[top];
        if (val2(d) != Val2::of(0))
            throw LemmaViolation("build_alpha: nu(d) = " + val2(d).str() +
                                 " != 0 at odd k=" + std::to_string(k));
    }
    return out;
}

ChernVector build_alpha(int k, const Rat& e_unit, BmTable& table) {
    return build_alpha_from(solve_gamma(k, table), k, e_unit);
}

ChernVector build_alpha(int k, const Rat& e_unit) {
    BmTable table;
    return build_alpha(k, e_unit, table);
}

ChernVector psi3(const ChernVector& ch) {
    ChernVector out;
    out.k = ch.k;
    out.coeffs.reserve(ch.coeffs.size());
    Rat p(1);
    for (size_t r = 0; r < ch.coeffs.size(); ++r) {
        out.coeffs.push_back(ch.coeffs[r] * p);
        p *= Rat(3);
    }
    return out;
}

} // namespace mline
