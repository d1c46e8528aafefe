#pragma once

#include "mline/rat.hpp"

#include <vector>

namespace mline {

/* Power series truncated at an explicit order N: coefficients of z^0..z^N.
 *
 * Coefficients are exact rationals.  Internally they are stored as integers
 * over one shared positive denominator with gcd(content, den) = 1, so the
 * schoolbook multiply runs on integers and normalizes once per product.
 * Binary operations truncate to the minimum order of the operands. */
class TruncSeries {
public:
    explicit TruncSeries(int order);
    static TruncSeries constant(const Rat& c, int order);
    static TruncSeries from_coeffs(const std::vector<Rat>& coeffs);

    int order() const { return order_; }
    Rat coeff(int i) const;
    std::vector<Rat> coeffs() const;
    bool is_zero() const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rat& c) const;
    /* Divide by z^s; the s lowest coefficients must vanish.  Order drops by s. */
    TruncSeries shift_down(int s) const;
    TruncSeries truncated(int order) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    void normalize();
    int order_;
    std::vector<Int> num_;
    Int den_;
};

/* base^e truncated at the order of base, by exponentiation-by-squaring. */
TruncSeries series_pow(const TruncSeries& base, unsigned long e);

/* f(g(x)) truncated.  Requires g(0) = 0; evaluated by Horner. */
TruncSeries series_compose_subst(const TruncSeries& f, const TruncSeries& g);

/* ln(1+z)/z = 1 - z/2 + z^2/3 - ... */
TruncSeries log1p_over_z(int order);
/* ln(1+z) = z - z^2/2 + z^3/3 - ...  (constant term 0) */
TruncSeries log1p_series(int order);
/* e^x - 1 = x + x^2/2! + ...  (constant term 0) */
TruncSeries exp_minus_one(int order);
/* (e^x - 1)/x = 1 + x/2! + x^2/3! + ... */
TruncSeries exp_minus_one_over_x(int order);
/* identity series z */
TruncSeries identity_series(int order);

/* (ln(1+z)/z)^(4k+1) truncated; coefficient m is b_m. */
TruncSeries log1p_over_z_pow(int k, int order);

/* Independent oracle for the b_m: the signed multinomial sum over all tuples
 * (c_0, c_1, ...) with sum c_i = 4k+1 and sum i*c_i = m.  Requires m <= 4k. */
Rat bm_multinomial_oracle(int k, int m);

} // namespace mline
