#pragma once

#include "mline/stems.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mline {

/* Element of F_2[q, v]/(q^3), |q| = 1, |v| = 4.  Row b holds the bits of
 * q^0 v^b, q^1 v^b, q^2 v^b. */
class F2Poly {
public:
    F2Poly() = default;
    static F2Poly one() { return monomial(0, 0); }
    static F2Poly monomial(int a, int b);

    bool coeff(int a, int b) const;
    void add_monomial(int a, int b);
    bool is_zero() const;

    friend F2Poly operator+(const F2Poly& x, const F2Poly& y);
    friend F2Poly operator*(const F2Poly& x, const F2Poly& y);
    friend bool operator==(const F2Poly& x, const F2Poly& y);

private:
    std::vector<unsigned char> rows_;  // rows_[b] bits 0..2 = q^a v^b
    void trim();
};

/* Low-degree total Stiefel-Whitney data of -m lambda:
 * w(-m lambda) = (1+q+q^2)^m = w0 + w1 q + w2 q^2 mod q^3, 4-periodic in m. */
struct ThomTwist {
    int m = 0;
    bool w0 = true, w1 = false, w2 = false;
    static ThomTwist of(int m);
    F2Poly poly() const;
};

/* H_j X(m) is F_2 exactly when j >= -m and (j+m) mod 4 != 3. */
bool cell_exists(int m, int j);

/* Sq^i (i = 1, 2) on the basis element of H^j X(m), computed by the Cartan
 * formula with the Thom twist and compared against the residue tables of the
 * homology proposition; disagreement throws. */
bool sq_nonzero(int i, int m, int j);

struct AttachFlags {
    bool cell = false;           // H_j X(m) nonzero
    bool two = false;            // 2-attaching j -> j+1  (Sq^1)
    bool eta = false;            // eta-attaching j -> j+2  (Sq^2)
    bool etaSq = false;          // eta^2-attaching j -> j+3 (paper data)
    bool betweenColEta = false;  // X(m+1)^{j+1}_j -> X(m)^{j+1}_j is eta (paper data)
};

AttachFlags attach_flags(int m, int j);

/* The full residue-indexed table, 4-periodic in both arguments. */
struct AttachTable {
    std::array<std::array<AttachFlags, 4>, 4> rows{};  // [m mod 4][j mod 4]
    static AttachTable compute();
    friend bool operator==(const AttachTable&, const AttachTable&) = default;
};

struct PeriodicityResult {
    bool ok = true;
    int m = 0, j = 0;  // first violating pair when !ok
};

/* Verifies 4-periodicity of the tables and cell pattern over the window, and
 * that truncations X(m)^{4n+6-m}_{4n-m} carry the same attach data as the
 * 4-shifted column. */
PeriodicityResult periodicity_check(int window);
PeriodicityResult periodicity_check_against(int window, const AttachTable& table);

/* Attaching map of Thom(HP^1, nH + V): ((2+n) mod 8) nu in the 2-local pi_3. */
StemElem hp_thom_attaching(int n);

enum class ZkMiddle { Split, EtaCubeCone };

/* Z(k)^{8k-4}_{8k-8} is S^{8k-4} v S^{8k-8} for even k and Sigma^{8k-8} C eta^3
 * for odd k; computed from hp_thom_attaching(4k-2) and checked against parity. */
ZkMiddle zk_middle_structure(int k);

struct CellEdge {
    int lower = 0, upper = 0;
    std::string label;  // stem element name; degree = upper - lower - 1
};

struct CellComplexDesc {
    std::vector<int> cells;
    std::vector<CellEdge> edges;
};

/* Cells of X(m) in [a, b] with the 2/eta/eta^2 edges from attach_flags. */
CellComplexDesc build_cell_diagram(int m, int a, int b);

/* The recorded splitting X(8k+3)^{8k-1}_{8k-5} = Sigma^{8k-5} C nu v Sigma^{8k-3} C2,
 * including the nu edge that Sq^1/Sq^2 cannot see. */
CellComplexDesc lock_subquotient_diagram(int k);

std::string diagram_text(const CellComplexDesc& d);
std::string diagram_dot(const CellComplexDesc& d, const std::string& name = "cells");

} // namespace mline
