#include "mline/steenrod.hpp"

#include <sstream>
#include <stdexcept>

namespace mline {

namespace {

int mod4(long v) { return static_cast<int>(((v % 4) + 4) % 4); }

struct LemmaViolationSteenrod : std::logic_error {
    using std::logic_error::logic_error;
};

/* Residue tables of the homology proposition.  is nonzero iff (m mod 4, j mod 4)
 * is listed. */
constexpr bool kSq1Table[4][4] = {
    // j:   0      1      2      3
    {false, true, false, false},   // m = 0
    {false, false, false, true},   // m = 1
    {false, false, false, true},   // m = 2
    {false, true, false, false},   // m = 3
};
constexpr bool kSq2Table[4][4] = {
    {false, false, false, false},  // m = 0
    {false, false, false, true},   // m = 1
    {false, false, true, false},   // m = 2
    {false, false, false, false},  // m = 3
};
/* eta^2-attaching maps, the four listed cases. */
constexpr bool kEtaSqTable[4][4] = {
    {false, false, true, false},   // m = 0, j = 2
    {false, true, false, false},   // m = 1, j = 1
    {false, false, false, true},   // m = 2, j = 3
    {false, false, true, false},   // m = 3, j = 2
};
/* Between-columns eta: X(m+1)^{j+1}_j -> X(m)^{j+1}_j is eta for these residues. */
constexpr bool kBetweenColEtaTable[4][4] = {
    {false, false, true, false},   // m = 0, j = 2
    {false, true, false, false},   // m = 1, j = 1
    {true, false, false, false},   // m = 2, j = 0
    {false, false, false, true},   // m = 3, j = 3
};

/* Sq(q^a) truncated to degree shift <= 2 (Sq^{>=3} unmodeled). */
F2Poly total_sq_of_q_power(int a) {
    F2Poly p;
    switch (a) {
    case 0:
        p.add_monomial(0, 0);
        break;
    case 1:
        p.add_monomial(1, 0);
        p.add_monomial(2, 0);
        break;
    case 2:
        p.add_monomial(2, 0);
        break;
    default:
        throw std::logic_error("total_sq_of_q_power: a out of range");
    }
    return p;
}

bool computed_sq_bit(int i, int m, int j) {
    int a = mod4(static_cast<long>(j) + m);
    if (a == 3)
        throw std::invalid_argument("sq_nonzero: no cell at (m, j)");
    F2Poly t = total_sq_of_q_power(a) * ThomTwist::of(m).poly();
    bool bit = (a + i <= 2) && t.coeff(a + i, 0);
    if (bit && !cell_exists(m, j + i))
        throw LemmaViolationSteenrod("sq_nonzero: computed bit targets a missing cell");
    return bit;
}

} // namespace

F2Poly F2Poly::monomial(int a, int b) {
    F2Poly p;
    p.add_monomial(a, b);
    return p;
}

bool F2Poly::coeff(int a, int b) const {
    if (a < 0 || a > 2 || b < 0 || b >= static_cast<int>(rows_.size()))
        return false;
    return (rows_[static_cast<size_t>(b)] >> a) & 1u;
}

void F2Poly::add_monomial(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("F2Poly: negative exponent");
    if (a > 2)
        return;  // q^3 = 0
    if (b >= static_cast<int>(rows_.size()))
        rows_.resize(static_cast<size_t>(b) + 1, 0);
    rows_[static_cast<size_t>(b)] ^= static_cast<unsigned char>(1u << a);
    trim();
}

bool F2Poly::is_zero() const { return rows_.empty(); }

void F2Poly::trim() {
    while (!rows_.empty() && rows_.back() == 0)
        rows_.pop_back();
}

F2Poly operator+(const F2Poly& x, const F2Poly& y) {
    F2Poly out = x;
    if (y.rows_.size() > out.rows_.size())
        out.rows_.resize(y.rows_.size(), 0);
    for (size_t b = 0; b < y.rows_.size(); ++b)
        out.rows_[b] ^= y.rows_[b];
    out.trim();
    return out;
}

F2Poly operator*(const F2Poly& x, const F2Poly& y) {
    F2Poly out;
    for (size_t bx = 0; bx < x.rows_.size(); ++bx)
        for (int ax = 0; ax <= 2; ++ax) {
            if (!((x.rows_[bx] >> ax) & 1u))
                continue;
            for (size_t by = 0; by < y.rows_.size(); ++by)
                for (int ay = 0; ay <= 2; ++ay)
                    if ((y.rows_[by] >> ay) & 1u)
                        out.add_monomial(ax + ay, static_cast<int>(bx + by));
        }
    return out;
}

bool operator==(const F2Poly& x, const F2Poly& y) { return x.rows_ == y.rows_; }

ThomTwist ThomTwist::of(int m) {
    if (m < 0)
        throw std::invalid_argument("ThomTwist: m must be nonnegative");
    ThomTwist t;
    t.m = m;
    t.w0 = true;
    t.w1 = (m % 2) != 0;
    // (C(m,2) + m) mod 2; 4-periodic in m.
    long c2 = (static_cast<long>(m) * (m - 1)) / 2;
    t.w2 = ((c2 + m) % 2) != 0;
    return t;
}

F2Poly ThomTwist::poly() const {
    F2Poly p;
    if (w0)
        p.add_monomial(0, 0);
    if (w1)
        p.add_monomial(1, 0);
    if (w2)
        p.add_monomial(2, 0);
    return p;
}

bool cell_exists(int m, int j) {
    if (m < 0)
        throw std::invalid_argument("cell_exists: m must be nonnegative");
    return j >= -m && mod4(static_cast<long>(j) + m) != 3;
}

bool sq_nonzero(int i, int m, int j) {
    if (i != 1 && i != 2)
        throw std::invalid_argument("sq_nonzero: i must be 1 or 2");
    if (!cell_exists(m, j))
        throw std::invalid_argument("sq_nonzero: no cell at (m, j)");
    bool computed = computed_sq_bit(i, m, j);
    bool table = (i == 1) ? kSq1Table[m % 4][mod4(j)] : kSq2Table[m % 4][mod4(j)];
    if (computed != table) {
        std::ostringstream os;
        os << "sq_nonzero: computed Sq^" << i << " at (m=" << m << ", j=" << j
           << ") disagrees with the residue table";
        throw LemmaViolationSteenrod(os.str());
    }
    return computed;
}

AttachFlags attach_flags(int m, int j) {
    AttachFlags f;
    f.cell = cell_exists(m, j);
    if (f.cell) {
        f.two = sq_nonzero(1, m, j);
        f.eta = sq_nonzero(2, m, j);
    }
    f.etaSq = f.cell && kEtaSqTable[m % 4][mod4(j)];
    f.betweenColEta = f.cell && kBetweenColEtaTable[m % 4][mod4(j)];
    return f;
}

AttachTable AttachTable::compute() {
    AttachTable t;
    for (int mr = 0; mr < 4; ++mr)
        for (int jr = 0; jr < 4; ++jr) {
            // Representatives far from the bottom cell carry the pure residue data.
            int m = 16 + mr;
            int j = 16 + jr;
            t.rows[static_cast<size_t>(mr)][static_cast<size_t>(jr)] = attach_flags(m, j);
        }
    return t;
}

namespace {

bool flags_equal(const AttachFlags& a, const AttachFlags& b) {
    return a.cell == b.cell && a.two == b.two && a.eta == b.eta && a.etaSq == b.etaSq &&
           a.betweenColEta == b.betweenColEta;
}

} // namespace

PeriodicityResult periodicity_check_against(int window, const AttachTable& table) {
    if (window < 8)
        throw std::invalid_argument("periodicity_check: window must be >= 8");
    // Residue invariance under (m, j) -> (m+4, j), checked against the table.
    for (int m = 0; m <= window; ++m)
        for (int j = 0; j <= window; ++j) {
            AttachFlags here = attach_flags(m, j);
            AttachFlags residue =
                table.rows[static_cast<size_t>(m % 4)][static_cast<size_t>(mod4(j))];
            AttachFlags shifted = attach_flags(m + 4, j);
            if (!flags_equal(here, residue) || !flags_equal(here, shifted))
                return {false, m, j};
        }
    // Truncations X(m)^{4n+6-m}_{4n-m} against the 4-shifted column (cells of
    // the shifted spectrum sit 4 dimensions lower).
    for (int m = 0; m <= window; ++m)
        for (int n = 0; 4 * n - m <= window; ++n) {
            int lo = 4 * n - m;
            for (int j = lo; j <= lo + 6; ++j) {
                AttachFlags here = attach_flags(m, j);
                AttachFlags shifted = attach_flags(m + 4, j - 4);
                if (!flags_equal(here, shifted))
                    return {false, m, j};
            }
        }
    return {true, 0, 0};
}

PeriodicityResult periodicity_check(int window) {
    return periodicity_check_against(window, AttachTable::compute());
}

StemElem hp_thom_attaching(int n) {
    if (n < 0)
        throw std::invalid_argument("hp_thom_attaching: n must be nonnegative");
    // p_1(nH + V) = 4 + 2n; the attaching map is (p_1/2) nu, reduced mod 8.
    int c = (2 + n) % 8;
    StemElem e;
    e.degree = 3;
    e.order = c == 0 ? 1 : 8 / (c & -c);
    if (c == 0)
        e.name = "0";
    else if (c == 1)
        e.name = "nu";
    else if (c == 4)
        e.name = "eta^3";  // 4 nu = eta^3
    else
        e.name = std::to_string(c) + "nu";
    return e;
}

ZkMiddle zk_middle_structure(int k) {
    if (k < 1)
        throw std::invalid_argument("zk_middle_structure: k must be positive");
    StemElem attach = hp_thom_attaching(4 * k - 2);
    ZkMiddle computed;
    if (attach.name == "0")
        computed = ZkMiddle::Split;
    else if (attach.name == "eta^3")
        computed = ZkMiddle::EtaCubeCone;
    else
        throw LemmaViolationSteenrod("zk_middle_structure: unexpected attaching class " +
                                     attach.name);
    ZkMiddle expected = (k % 2 == 0) ? ZkMiddle::Split : ZkMiddle::EtaCubeCone;
    if (computed != expected)
        throw LemmaViolationSteenrod("zk_middle_structure: parity rule violated at k=" +
                                     std::to_string(k));
    return computed;
}

CellComplexDesc build_cell_diagram(int m, int a, int b) {
    if (a > b)
        return {};
    CellComplexDesc d;
    for (int j = a; j <= b; ++j)
        if (cell_exists(m, j))
            d.cells.push_back(j);
    for (int j : d.cells) {
        AttachFlags f = attach_flags(m, j);
        if (f.two && j + 1 <= b && cell_exists(m, j + 1))
            d.edges.push_back({j, j + 1, "2"});
        if (f.eta && j + 2 <= b && cell_exists(m, j + 2))
            d.edges.push_back({j, j + 2, "eta"});
        if (f.etaSq && j + 3 <= b && cell_exists(m, j + 3))
            d.edges.push_back({j, j + 3, "eta^2"});
    }
    return d;
}

CellComplexDesc lock_subquotient_diagram(int k) {
    if (k < 1)
        throw std::invalid_argument("lock_subquotient_diagram: k must be positive");
    int base = 8 * k;
    CellComplexDesc d = build_cell_diagram(8 * k + 3, base - 5, base - 1);
    d.edges.push_back({base - 5, base - 1, "nu"});  // Sq^4 datum, outside the modeled range
    return d;
}

std::string diagram_text(const CellComplexDesc& d) {
    std::ostringstream os;
    os << "cells:";
    for (int c : d.cells)
        os << ' ' << c;
    os << '\n';
    for (const auto& e : d.edges)
        os << e.lower << " -[" << e.label << "]-> " << e.upper << '\n';
    return os.str();
}

std::string diagram_dot(const CellComplexDesc& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (int c : d.cells)
        os << "  c" << c << " [label=\"" << c << "\", shape=circle];\n";
    for (const auto& e : d.edges)
        os << "  c" << e.lower << " -> c" << e.upper << " [label=\"" << e.label << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace mline
