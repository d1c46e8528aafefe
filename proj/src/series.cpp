#include "mline/series.hpp"

#include <algorithm>

namespace mline {

TruncSeries::TruncSeries(int order) : order_(order), den_(1) {
    if (order < 0)
        throw std::invalid_argument("TruncSeries: negative order");
    num_.assign(static_cast<size_t>(order) + 1, Int(0));
}

TruncSeries TruncSeries::constant(const Rat& c, int order) {
    TruncSeries s(order);
    s.num_[0] = c.numerator();
    s.den_ = c.denominator();
    return s;
}

TruncSeries TruncSeries::from_coeffs(const std::vector<Rat>& coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("TruncSeries: empty coefficient list");
    TruncSeries s(static_cast<int>(coeffs.size()) - 1);
    Int den(1);
    for (const auto& c : coeffs)
        den = lcm(den, c.denominator());
    for (size_t i = 0; i < coeffs.size(); ++i)
        s.num_[i] = coeffs[i].numerator() * (den / coeffs[i].denominator());
    s.den_ = den;
    s.normalize();
    return s;
}

void TruncSeries::normalize() {
    Int g = den_;
    for (const auto& x : num_) {
        if (g == 1)
            return;
        if (x != 0)
            g = gcd(g, x);
    }
    if (g > 1) {
        for (auto& x : num_)
            x /= g;
        den_ /= g;
    }
}

Rat TruncSeries::coeff(int i) const {
    if (i < 0 || i > order_)
        throw std::out_of_range("TruncSeries::coeff");
    return Rat(num_[static_cast<size_t>(i)], den_);
}

std::vector<Rat> TruncSeries::coeffs() const {
    std::vector<Rat> out;
    out.reserve(num_.size());
    for (int i = 0; i <= order_; ++i)
        out.push_back(coeff(i));
    return out;
}

bool TruncSeries::is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Int& x) { return x == 0; });
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries out = *this;
    for (auto& x : out.num_)
        x = -x;
    return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncSeries out(n);
    Int g = gcd(a.den_, b.den_);
    Int fa = b.den_ / g;
    Int fb = a.den_ / g;
    out.den_ = a.den_ * fa;
    for (int i = 0; i <= n; ++i)
        out.num_[i] = a.num_[i] * fa + b.num_[i] * fb;
    out.normalize();
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + (-b);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncSeries out(n);
    out.den_ = a.den_ * b.den_;
    for (int i = 0; i <= n; ++i) {
        if (a.num_[i] == 0)
            continue;
        int jmax = n - i;
        for (int j = 0; j <= jmax; ++j) {
            if (b.num_[j] == 0)
                continue;
            out.num_[i + j] += a.num_[i] * b.num_[j];
        }
    }
    out.normalize();
    return out;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries out(order_);
    out.den_ = den_ * c.denominator();
    Int cn = c.numerator();
    for (size_t i = 0; i < num_.size(); ++i)
        out.num_[i] = num_[i] * cn;
    out.normalize();
    return out;
}

TruncSeries TruncSeries::shift_down(int s) const {
    if (s < 0 || s > order_)
        throw std::invalid_argument("TruncSeries::shift_down: bad shift");
    for (int i = 0; i < s; ++i)
        if (num_[static_cast<size_t>(i)] != 0)
            throw std::invalid_argument("TruncSeries::shift_down: nonzero low coefficient");
    TruncSeries out(order_ - s);
    for (int i = 0; i <= order_ - s; ++i)
        out.num_[static_cast<size_t>(i)] = num_[static_cast<size_t>(i + s)];
    out.den_ = den_;
    out.normalize();
    return out;
}

TruncSeries TruncSeries::truncated(int order) const {
    if (order > order_)
        throw std::invalid_argument("TruncSeries::truncated: cannot extend");
    TruncSeries out(order);
    for (int i = 0; i <= order; ++i)
        out.num_[static_cast<size_t>(i)] = num_[static_cast<size_t>(i)];
    out.den_ = den_;
    out.normalize();
    return out;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.den_ == b.den_ && a.num_ == b.num_;
}

TruncSeries series_pow(const TruncSeries& base, unsigned long e) {
    int n = base.order();
    TruncSeries result = TruncSeries::constant(Rat(1), n);
    TruncSeries sq = base;
    while (e) {
        if (e & 1)
            result = result * sq;
        e >>= 1;
        if (e)
            sq = sq * sq;
    }
    return result;
}

TruncSeries series_compose_subst(const TruncSeries& f, const TruncSeries& g) {
    if (!g.coeff(0).is_zero())
        throw std::invalid_argument("series_compose_subst: g(0) != 0");
    int n = std::min(f.order(), g.order());
    TruncSeries gt = g.truncated(n);
    TruncSeries acc = TruncSeries::constant(f.coeff(f.order()), n);
    for (int i = f.order() - 1; i >= 0; --i)
        acc = acc * gt + TruncSeries::constant(f.coeff(i), n);
    return acc;
}

TruncSeries log1p_over_z(int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        c[static_cast<size_t>(i)] = Rat(i % 2 == 0 ? 1 : -1, i + 1);
    return TruncSeries::from_coeffs(c);
}

TruncSeries log1p_series(int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    for (int i = 1; i <= order; ++i)
        c[static_cast<size_t>(i)] = Rat(i % 2 == 1 ? 1 : -1, i);
    return TruncSeries::from_coeffs(c);
}

TruncSeries exp_minus_one(int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    Int fact(1);
    for (int i = 1; i <= order; ++i) {
        fact *= i;
        c[static_cast<size_t>(i)] = Rat(Int(1), fact);
    }
    return TruncSeries::from_coeffs(c);
}

TruncSeries exp_minus_one_over_x(int order) {
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    Int fact(1);
    for (int i = 0; i <= order; ++i) {
        fact *= i + 1;
        c[static_cast<size_t>(i)] = Rat(Int(1), fact);
    }
    return TruncSeries::from_coeffs(c);
}

TruncSeries identity_series(int order) {
    TruncSeries s(order);
    std::vector<Rat> c(static_cast<size_t>(order) + 1);
    if (order >= 1)
        c[1] = Rat(1);
    return TruncSeries::from_coeffs(c);
}

TruncSeries log1p_over_z_pow(int k, int order) {
    if (k < 1)
        throw std::invalid_argument("log1p_over_z_pow: k must be positive");
    if (order < 0)
        throw std::invalid_argument("log1p_over_z_pow: negative order");
    return series_pow(log1p_over_z(order), static_cast<unsigned long>(4 * k + 1));
}

namespace {

Int factorial(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/* Enumerate tuples (c_1, ..., c_m) with sum i*c_i = m and sum c_i <= limit,
 * accumulating the signed multinomial term for each. */
void enumerate_tuples(int m, int next, int remaining_weight, int used_parts, int limit,
                      std::vector<int>& c, const Int& top_factorial, Rat& acc) {
    if (remaining_weight == 0) {
        int c0 = limit - used_parts;
        Int multinomial = top_factorial / factorial(c0);
        Int denom_pow(1);
        int sign = 1;
        for (int i = 1; i <= m; ++i) {
            int ci = c[static_cast<size_t>(i)];
            if (ci == 0)
                continue;
            multinomial /= factorial(ci);
            Int base(i + 1);
            for (int t = 0; t < ci; ++t)
                denom_pow *= base;
            if (i % 2 == 1 && ci % 2 == 1)
                sign = -sign;
        }
        acc += Rat(sign > 0 ? multinomial : -multinomial, denom_pow);
        return;
    }
    if (next > remaining_weight)
        return;
    int max_count = remaining_weight / next;
    for (int count = 0; count <= max_count && used_parts + count <= limit; ++count) {
        c[static_cast<size_t>(next)] = count;
        enumerate_tuples(m, next + 1, remaining_weight - next * count, used_parts + count,
                         limit, c, top_factorial, acc);
    }
    c[static_cast<size_t>(next)] = 0;
}

} // namespace

Rat bm_multinomial_oracle(int k, int m) {
    if (k < 1)
        throw std::invalid_argument("bm_multinomial_oracle: k must be positive");
    if (m < 0 || m > 4 * k)
        throw std::invalid_argument("bm_multinomial_oracle: requires 0 <= m <= 4k");
    int parts = 4 * k + 1;
    std::vector<int> c(static_cast<size_t>(m) + 1, 0);
    Rat acc(0);
    enumerate_tuples(m, 1, m, 0, parts, c, factorial(parts), acc);
    return acc;
}

} // namespace mline
