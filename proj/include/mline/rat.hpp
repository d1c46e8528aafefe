#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace mline {

using Int = boost::multiprecision::mpz_int;

/* Exact rational, always in lowest terms with positive denominator.
 * Zero is 0/1.  The canonical form is maintained by the mpq backend. */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& n, const Int& d) {
        if (d == 0)
            throw std::invalid_argument("Rat: zero denominator");
        v_ = Q(n) / Q(d);
    }
    Rat(long n, long d) : Rat(Int(n), Int(d)) {}

    static Rat parse(const std::string& s);

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero())
            throw std::invalid_argument("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return v_ < 0 ? Rat(-v_) : *this; }

    /* "p" for integers, "p/q" otherwise. */
    std::string str() const;

private:
    using Q = boost::multiprecision::mpq_rational;
    explicit Rat(Q v) : v_(std::move(v)) {}
    Q v_;
};

/* 2^e for any integer e. */
Rat pow2(long e);

/* A 2-adic valuation: an integer or infinity (the valuation of zero).
 * Infinity compares greater than every finite value and absorbs addition. */
class Val2 {
public:
    static Val2 infinity() { return Val2(true, 0); }
    static Val2 of(long v) { return Val2(false, v); }

    bool is_infinite() const { return inf_; }
    long finite() const {
        if (inf_)
            throw std::logic_error("Val2: finite() on infinity");
        return v_;
    }

    friend bool operator==(const Val2& a, const Val2& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Val2& a, const Val2& b) { return !(a == b); }
    friend bool operator<(const Val2& a, const Val2& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Val2& a, const Val2& b) { return a < b || a == b; }
    friend bool operator>(const Val2& a, const Val2& b) { return b < a; }
    friend bool operator>=(const Val2& a, const Val2& b) { return b <= a; }

    friend Val2 operator+(const Val2& a, const Val2& b) {
        if (a.inf_ || b.inf_) return infinity();
        return of(a.v_ + b.v_);
    }

    /* "inf" or the decimal value. */
    std::string str() const;

private:
    Val2(bool inf, long v) : inf_(inf), v_(v) {}
    bool inf_;
    long v_;
};

/* nu(n) for a nonzero integer; Val2::infinity() for zero. */
Val2 val2_int(const Int& n);

/* nu(r) = nu(numerator) - nu(denominator); infinity for zero. */
Val2 val2(const Rat& r);

/* nu(k) of a positive integer as a plain long (convenience for exponent formulas). */
long val2_of_positive(long k);

} // namespace mline
