#pragma once

#include <optional>
#include <string>

namespace mline {

/* Staircase offset: 0 for r = 0,1; 1 for r = 2,3,4; 2 for r = 5,6,7. */
int tau(int r);

/* First cell above the lower-bound line: h0(4+8k+r) = 8k + tau(r) + 1. */
long h0(long m);

/* Walk from the l-cell of X(m) down to X(n): one step per column, dropping a
 * dimension at each empty cell.  The single step at source column j sends
 * l to l-1 when (l+j) mod 4 is 0 or 3.  Infinity is a fixed point. */
std::optional<long> h_walk(long m, long n, std::optional<long> l);

/* The Mahowald line.  L(0)=L(1)=L(2)=-1, L(3)=0; L(8k+3) is 8k-2 for odd k
 * and 8k-6 for even k >= 2; L(8k+4+r) = 8k + tau(r).  Cross-checked against
 * the sixteen explicit theorem rows for 20 <= m <= 35. */
long mahowald_line(long m);

struct FMQuery {
    long p = 0, q = 0;
    bool exists = false;
    std::string route;  // which rule of the L evaluation decided
};

/* A level-(p,q) class exists iff 4p-2-q <= L(q).  Requires p >= 1. */
FMQuery fm_exists(long p, long q);

/* Smallest q admitting a level-(p,q) class:
 * 2p+2 for p = 1,2,5,6; 2p+3 for p = 3,4,7; 2p+4 for p = 0 (mod 8). */
long main_theorem_bound(long p);

/* max{p : fm_exists(p, q)} = floor((L(q)+q+2)/4); asserted against the
 * sixteen-row Mahowald-invariant table.  Requires q >= 4. */
long minv_degree(long q);

enum class Geography { Obstructed, NotObstructedHere };

struct GeoVerdict {
    Geography verdict = Geography::NotObstructedHere;
    std::string reason;
};

/* Necessary-condition check for 2pE8 + q(0 1;1 0): obstructed when q violates
 * the strongest applicable bound; never claims realizability. */
GeoVerdict spin_geography(long p, long q);

/* b2 >= (10/8)|sign| + 4 unless the manifold is one of the exceptions.
 * Spin forms have sign divisible by 16 (Rokhlin); recorded, not enforced. */
bool b2_sign_check(long b2, long sign, bool exceptional);

} // namespace mline
