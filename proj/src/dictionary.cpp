#include "mline/dictionary.hpp"

#include <stdexcept>

namespace mline {

int tau(int r) {
    if (r < 0 || r > 7)
        throw std::invalid_argument("tau: r must be in 0..7");
    if (r <= 1)
        return 0;
    if (r <= 4)
        return 1;
    return 2;
}

long h0(long m) {
    if (m < 4)
        throw std::invalid_argument("h0: m must be >= 4");
    long k = (m - 4) / 8;
    int r = static_cast<int>((m - 4) % 8);
    return 8 * k + tau(r) + 1;
}

std::optional<long> h_walk(long m, long n, std::optional<long> l) {
    if (!(m > n && n >= 0))
        throw std::invalid_argument("h_walk: requires m > n >= 0");
    if (!l.has_value())
        return std::nullopt;
    long cur = *l;
    for (long j = m; j > n; --j) {
        long rem = ((cur + j) % 4 + 4) % 4;
        if (rem == 0 || rem == 3)
            --cur;
    }
    return cur;
}

namespace {

struct LineValue {
    long value;
    const char* route;
};

LineValue mahowald_line_routed(long m) {
    if (m < 0)
        throw std::invalid_argument("mahowald_line: m must be nonnegative");
    if (m <= 2)
        return {-1, "base"};
    if (m == 3)
        return {0, "base"};
    if (m % 8 == 3) {
        long k = (m - 3) / 8;  // k >= 1 here
        if (k % 2 == 1)
            return {8 * k - 2, "8k+3-odd"};
        return {8 * k - 6, "8k+3-even"};
    }
    long k = (m - 4) / 8;
    int r = static_cast<int>((m - 4) % 8);
    return {8 * k + tau(r), "tau"};
}

/* The sixteen explicit rows of the main-line theorem, offsets against 16k. */
constexpr long kThmRowOffset[16] = {
    /* m = 16k+4  */ 0,
    /* m = 16k+5  */ 0,
    /* m = 16k+6  */ 1,
    /* m = 16k+7  */ 1,
    /* m = 16k+8  */ 1,
    /* m = 16k+9  */ 2,
    /* m = 16k+10 */ 2,
    /* m = 16k+11 */ 6,
    /* m = 16k+12 */ 8,
    /* m = 16k+13 */ 8,
    /* m = 16k+14 */ 9,
    /* m = 16k+15 */ 9,
    /* m = 16k+16 */ 9,
    /* m = 16k+17 */ 10,
    /* m = 16k+18 */ 10,
    /* m = 16k+19 */ 10,
};

/* Mahowald-invariant H-degrees, offsets against 8k for q = 16k+1 .. 16k+16. */
constexpr long kMinvRowOffset[16] = {-1, -1, -1, 1, 1, 2, 2, 2, 3, 3, 4, 5, 5, 6, 6, 6};

} // namespace

long mahowald_line(long m) {
    LineValue lv = mahowald_line_routed(m);
    if (m >= 20 && m <= 35) {
        long k = (m - 4) / 16;
        long expected = 16 * k + kThmRowOffset[(m - 4) % 16];
        if (lv.value != expected)
            throw std::logic_error("mahowald_line: closed form disagrees with the theorem row at m=" +
                                   std::to_string(m));
    }
    return lv.value;
}

FMQuery fm_exists(long p, long q) {
    if (p < 1 || q < 0)
        throw std::invalid_argument("fm_exists: requires p >= 1, q >= 0");
    LineValue lv = mahowald_line_routed(q);
    FMQuery out;
    out.p = p;
    out.q = q;
    out.exists = (4 * p - 2 - q <= lv.value);
    out.route = lv.route;
    return out;
}

long main_theorem_bound(long p) {
    if (p < 2)
        throw std::invalid_argument("main_theorem_bound: requires p >= 2");
    switch (p % 8) {
    case 1: case 2: case 5: case 6:
        return 2 * p + 2;
    case 3: case 4: case 7:
        return 2 * p + 3;
    default:  // p = 0 mod 8
        return 2 * p + 4;
    }
}

long minv_degree(long q) {
    if (q < 4)
        throw std::invalid_argument("minv_degree: requires q >= 4");
    long value = (mahowald_line(q) + q + 2) / 4;  // numerator is nonnegative for q >= 4
    long k = (q - 1) / 16;
    long expected = 8 * k + kMinvRowOffset[(q - 1) % 16];
    if (value != expected)
        throw std::logic_error("minv_degree: closed form disagrees with the sixteen-row table at q=" +
                               std::to_string(q));
    return value;
}

GeoVerdict spin_geography(long p, long q) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("spin_geography: negative argument");
    if ((p == 0 && (q == 0 || q == 1)) || (p == 1 && q == 3))
        return {Geography::NotObstructedHere, "exceptional form (S^4, S^2xS^2, K3)"};
    if (p == 0)
        return {Geography::NotObstructedHere, "no E8 summands, no bound applies"};
    if (p == 1) {
        if (q >= 3)
            return {Geography::NotObstructedHere, "meets q >= 2p+1"};
        return {Geography::Obstructed, "violates q >= 2p+1"};
    }
    long bound = main_theorem_bound(p);
    if (q >= bound)
        return {Geography::NotObstructedHere, "meets q >= " + std::to_string(bound)};
    return {Geography::Obstructed, "violates q >= " + std::to_string(bound)};
}

bool b2_sign_check(long b2, long sign, bool exceptional) {
    if (exceptional)
        return true;
    long abs_sign = sign < 0 ? -sign : sign;
    return 8 * b2 >= 10 * abs_sign + 32;
}

} // namespace mline
