#pragma once

#include "mline/appendix_a.hpp"
#include "mline/rat.hpp"

#include <stdexcept>
#include <vector>

namespace mline {

/* Thrown when a computation contradicts one of the verified lemmas. */
struct LemmaViolation : std::runtime_error {
    explicit LemmaViolation(const std::string& what) : std::runtime_error(what) {}
};

/* Element of k^0 of the ambient stunted projective Thom spectrum, written
 * over the basis U_K * w^i.  Every coefficient must be 2-locally integral. */
struct KClass {
    int k = 0;
    std::vector<Rat> coeffs;  // a_0 .. a_D, index i = power of w
};

/* Rational Chern-character vector over the basis U_H * x^j (index = x-degree j,
 * i.e. cohomological degree 2j relative to the Thom class). */
struct ChernVector {
    int k = 0;
    std::vector<Rat> coeffs;

    Rat at(int j) const {
        return (j >= 0 && j < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(j)]
                                                               : Rat(0);
    }
    /* x-degrees with nonzero coefficient, ascending. */
    std::vector<int> support() const;
};

/* ch(kc) = ((e^x-1)/x)^(4k+1) * sum a_i (e^x-1)^i, exact, truncated at `order`. */
ChernVector ch_of_kclass(const KClass& kc, int order);

struct SimpleChern {
    KClass phi;  // a_i = 2^(4k-2) b_i, 0 <= i <= 4k-1
    Rat d;       // residual x^{4k} coefficient, nu(d) = -2
};

/* Solves ch(phi) = 2^(4k-2) + d x^{4k} on Z = Sigma^{-(8k+2)} CP^{8k+1}_{4k+1}.
 * d is fixed by exact cancellation of the z^{4k} coefficient, d = -2^(4k-2) b_{4k}.
 * Throws LemmaViolation if any a_i is not 2-locally integral or nu(d) != -2. */
SimpleChern solve_simple_chern(int k);
SimpleChern solve_simple_chern(int k, BmTable& table);

/* ch(c(r(phi))) = 2 ch(phi) on even x-degrees.  Rejects odd-degree support. */
ChernVector realify_complexify(const ChernVector& ch);

struct GammaClass {
    KClass gamma;  // a_i = 2^(4k-5-nu(k)) b_i, 0 <= i <= 4k-5
    Rat c8k8;      // coefficient of x^{4k-4}, nu = -1
    Rat c8k6;      // coefficient of x^{4k-3}
    Rat c8k4;      // coefficient of x^{4k-2}, nu >= 0
};

/* Solves ch(gamma) = 2^(4k-5-nu(k)) + c_{8k-8} x^{4k-4} + c_{8k-6} x^{4k-3}
 * + c_{8k-4} x^{4k-2} on Z^{8k-4}.  The residual c's are computed by exact
 * series arithmetic and cross-checked against the closed forms
 *   c_{8k-8} = 2^(4k-5-nu(k)) b_{4k-4}
 *   c_{8k-4} = 2^(4k-5-nu(k)) ((8k-3)(3k-1)/3 b_{4k-4} + (4k-1) b_{4k-3} + b_{4k-2}).
 * Requires k >= 2 (at k = 1 the coefficient range is empty and the constant
 * 2^{-1} is not 2-locally integral).  Throws LemmaViolation on any breach. */
GammaClass solve_gamma(int k);
GammaClass solve_gamma(int k, BmTable& table);

/* ch(c(alpha_k)) on Z(k).  k even: exactly the constant 2^(4k-4-nu(k)).
 * k odd: 2^(4k-4-nu(k)) + d x^{4k-2} with d = 2 c_{8k-4} - 2 c_{8k-8} e_unit
 * and nu(d) = 0.  e_unit must be a 2-adic unit.  Throws on any breach. */
ChernVector build_alpha(int k, const Rat& e_unit = Rat(1));
ChernVector build_alpha(int k, const Rat& e_unit, BmTable& table);
/* Same construction from an already-solved gamma (the expensive step). */
ChernVector build_alpha_from(const GammaClass& g, int k, const Rat& e_unit);

/* Adams operation on Chern characters: multiplies the x^r coefficient by 3^r. */
ChernVector psi3(const ChernVector& ch);

} // namespace mline
