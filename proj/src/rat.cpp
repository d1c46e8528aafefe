#include "mline/rat.hpp"

namespace mline {

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    return Rat(n, d);
}

std::string Rat::str() const {
    if (is_integer())
        return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Rat pow2(long e) {
    Int p = Int(1) << static_cast<unsigned long>(e < 0 ? -e : e);
    return e >= 0 ? Rat(p) : Rat(Int(1), p);
}

std::string Val2::str() const {
    return inf_ ? "inf" : std::to_string(v_);
}

Val2 val2_int(const Int& n) {
    if (n == 0)
        return Val2::infinity();
    return Val2::of(static_cast<long>(mpz_scan1(n.backend().data(), 0)));
}

Val2 val2(const Rat& r) {
    if (r.is_zero())
        return Val2::infinity();
    return Val2::of(val2_int(r.numerator()).finite() - val2_int(r.denominator()).finite());
}

long val2_of_positive(long k) {
    if (k <= 0)
        throw std::invalid_argument("val2_of_positive: k must be positive");
    long v = 0;
    while ((k & 1) == 0) {
        k >>= 1;
        ++v;
    }
    return v;
}

} // namespace mline
