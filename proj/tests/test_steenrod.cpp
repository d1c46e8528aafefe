#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mline/steenrod.hpp"

using namespace mline;

TEST_CASE("cell pattern of X(m)") {
    CHECK(!cell_exists(0, 3));
    CHECK(cell_exists(3, 1));
    CHECK(cell_exists(4, -4));   // Thom-class bottom cell
    CHECK(!cell_exists(4, -5));  // below the bottom cell
    CHECK(cell_exists(0, 0));
    CHECK(!cell_exists(3, 0));
}

TEST_CASE("ThomTwist low-degree Stiefel-Whitney data") {
    // (1+q+q^2)^m mod q^3 cycles with period 4: 1, 1+q+q^2, 1+q^2, 1+q.
    ThomTwist t0 = ThomTwist::of(0);
    CHECK((t0.w0 && !t0.w1 && !t0.w2));
    ThomTwist t1 = ThomTwist::of(1);
    CHECK((t1.w0 && t1.w1 && t1.w2));
    ThomTwist t2 = ThomTwist::of(2);
    CHECK((t2.w0 && !t2.w1 && t2.w2));
    ThomTwist t3 = ThomTwist::of(3);
    CHECK((t3.w0 && t3.w1 && !t3.w2));
    for (int m = 0; m <= 20; ++m) {
        ThomTwist a = ThomTwist::of(m);
        ThomTwist b = ThomTwist::of(m + 4);
        CHECK((a.w0 == b.w0 && a.w1 == b.w1 && a.w2 == b.w2));
    }
}

TEST_CASE("F2Poly respects q^3 = 0") {
    F2Poly q = F2Poly::monomial(1, 0);
    F2Poly q2 = q * q;
    CHECK(q2.coeff(2, 0));
    CHECK((q2 * q).is_zero());
    F2Poly w = F2Poly::monomial(0, 0) + q + q2;
    F2Poly w2 = w * w;
    CHECK(w2.coeff(0, 0));
    CHECK(!w2.coeff(1, 0));
    CHECK(w2.coeff(2, 0));
}

TEST_CASE("sq_nonzero worked examples") {
    CHECK(sq_nonzero(1, 0, 1));
    CHECK(sq_nonzero(2, 1, 3));
    CHECK(!sq_nonzero(2, 0, 0));
    CHECK_THROWS_AS(sq_nonzero(1, 0, 3), std::invalid_argument);  // no cell
}

TEST_CASE("computed Sq bits match the residue tables over the full window") {
    for (int m = 0; m <= 63; ++m)
        for (int j = -m; j <= 64; ++j) {
            if (!cell_exists(m, j))
                continue;
            CAPTURE(m);
            CAPTURE(j);
            CHECK_NOTHROW(sq_nonzero(1, m, j));
            CHECK_NOTHROW(sq_nonzero(2, m, j));
        }
}

TEST_CASE("Sq1 Sq1 = 0 on every basis element") {
    for (int m = 0; m <= 63; ++m)
        for (int j = -m; j <= 64; ++j) {
            if (!cell_exists(m, j) || !cell_exists(m, j + 1))
                continue;
            CHECK(!(sq_nonzero(1, m, j) && sq_nonzero(1, m, j + 1)));
        }
}

TEST_CASE("attach_flags worked examples") {
    CHECK(attach_flags(1, 1).etaSq);
    CHECK(attach_flags(3, 3).betweenColEta);
    AttachFlags f = attach_flags(0, 0);
    CHECK((f.cell && !f.two && !f.eta && !f.etaSq && !f.betweenColEta));
}

TEST_CASE("periodicity holds and a mutated table is detected") {
    CHECK(periodicity_check(8).ok);
    CHECK(periodicity_check(16).ok);
    AttachTable mutated = AttachTable::compute();
    mutated.rows[1][1].etaSq = !mutated.rows[1][1].etaSq;
    PeriodicityResult r = periodicity_check_against(16, mutated);
    CHECK(!r.ok);
    CHECK(r.m % 4 == 1);
    CHECK(((r.j % 4) + 4) % 4 == 1);
}

TEST_CASE("hp_thom_attaching") {
    CHECK(hp_thom_attaching(0).name == "2nu");
    CHECK(hp_thom_attaching(2).name == "eta^3");  // 4nu
    CHECK(hp_thom_attaching(6).name == "0");      // 8nu vanishes 2-locally
    CHECK(hp_thom_attaching(1).name == "3nu");
    CHECK(hp_thom_attaching(2).degree == 3);
    CHECK(hp_thom_attaching(2).order == 2);
}

TEST_CASE("zk_middle_structure parity") {
    CHECK(zk_middle_structure(2) == ZkMiddle::Split);
    CHECK(zk_middle_structure(1) == ZkMiddle::EtaCubeCone);
    CHECK(zk_middle_structure(3) == ZkMiddle::EtaCubeCone);
    for (int k = 1; k <= 64; ++k)
        CHECK(zk_middle_structure(k) == (k % 2 == 0 ? ZkMiddle::Split : ZkMiddle::EtaCubeCone));
}

TEST_CASE("build_cell_diagram") {
    CellComplexDesc d = build_cell_diagram(4, 1, 4);
    CHECK(d.cells == std::vector<int>{1, 2, 4});
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges[0].lower == 1);
    CHECK(d.edges[0].upper == 2);
    CHECK(d.edges[0].label == "2");

    CHECK(build_cell_diagram(5, 3, 1).cells.empty());

    // X(8k+3) on [8k-5, 8k-1]: four cells, one 2-edge, the nu gap unmarked
    for (int k : {1, 2, 5}) {
        int base = 8 * k;
        CellComplexDesc lock = build_cell_diagram(8 * k + 3, base - 5, base - 1);
        CHECK(lock.cells == std::vector<int>{base - 5, base - 3, base - 2, base - 1});
        REQUIRE(lock.edges.size() == 1);
        CHECK(lock.edges[0].lower == base - 3);
        CHECK(lock.edges[0].label == "2");
    }
}

TEST_CASE("edge label degree matches the dimension gap") {
    auto degree_of = [](const std::string& label) {
        if (label == "2") return 0;
        if (label == "eta") return 1;
        if (label == "eta^2") return 2;
        if (label == "nu" || label == "eta^3") return 3;
        return -1;
    };
    for (int m = 0; m <= 12; ++m) {
        CellComplexDesc d = build_cell_diagram(m, -m, 24);
        for (const auto& e : d.edges)
            CHECK(e.upper - e.lower - 1 == degree_of(e.label));
    }
    CellComplexDesc lock = lock_subquotient_diagram(2);
    for (const auto& e : lock.edges)
        CHECK(e.upper - e.lower - 1 == degree_of(e.label));
}

TEST_CASE("lock subquotient records the nu edge") {
    CellComplexDesc d = lock_subquotient_diagram(1);
    bool has_nu = false;
    for (const auto& e : d.edges)
        has_nu = has_nu || (e.label == "nu" && e.lower == 3 && e.upper == 7);
    CHECK(has_nu);
}

TEST_CASE("diagram serialization") {
    CellComplexDesc d = build_cell_diagram(4, 1, 4);
    std::string text = diagram_text(d);
    CHECK(text.find("cells: 1 2 4") != std::string::npos);
    CHECK(text.find("1 -[2]-> 2") != std::string::npos);
    std::string dot = diagram_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("c1 -> c2") != std::string::npos);
}
