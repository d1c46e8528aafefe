#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mline/ro_pin2.hpp"

#include <algorithm>
#include <random>

using namespace mline;

TEST_CASE("normalization of the defining relations") {
    // D^2 -> 1
    ROElem d2 = ro_normalize({{Int(1), {2, 0, 0}}});
    CHECK(d2 == ROElem::one());
    // B^2 -> 4A - 8B
    ROElem b2 = ro_normalize({{Int(1), {0, 0, 2}}});
    CHECK(b2.mixed(1, 0) == 4);
    CHECK(b2.mixed(0, 1) == -8);
    CHECK(b2.c1() == 0);
    // D A B -> A B
    ROElem dab = ro_normalize({{Int(1), {1, 1, 1}}});
    CHECK(dab.mixed(1, 1) == 1);
    CHECK(dab.cD() == 0);
}

TEST_CASE("ro_mul worked examples") {
    ROElem one_plus_d = ROElem::one() + ROElem::D();
    ROElem lhs = ro_mul(one_plus_d, ROElem::A());
    CHECK(lhs == ROElem::A().scaled(2));  // (1+D)A = 2A

    ROElem bb = ro_mul(ROElem::B(), ROElem::B());
    CHECK(bb.mixed(1, 0) == 4);
    CHECK(bb.mixed(0, 1) == -8);

    ROElem x = ROElem::A() + ROElem::D().scaled(3) - ROElem::B();
    CHECK(ro_mul(ROElem::one(), x) == x);
}

namespace {

std::vector<std::pair<Int, ROMonomial>> random_formal(std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> dexp(0, 3);
    std::uniform_int_distribution<unsigned> aexp(0, 3);
    std::uniform_int_distribution<unsigned> bexp(0, 4);
    std::vector<std::pair<Int, ROMonomial>> out;
    for (int t = 0; t < terms; ++t)
        out.push_back({Int(coeff(rng)), {dexp(rng), aexp(rng), bexp(rng)}});
    return out;
}

} // namespace

TEST_CASE("normalization is confluent under term reordering") {
    std::mt19937_64 rng(417);
    for (int trial = 0; trial < 200; ++trial) {
        auto formal = random_formal(rng, 6);
        ROElem a = ro_normalize(formal);
        auto shuffled = formal;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(a == ro_normalize(shuffled));
    }
}

TEST_CASE("product is commutative, associative, and order independent") {
    std::mt19937_64 rng(991);
    for (int trial = 0; trial < 100; ++trial) {
        ROElem x = ro_normalize(random_formal(rng, 4));
        ROElem y = ro_normalize(random_formal(rng, 4));
        ROElem z = ro_normalize(random_formal(rng, 4));
        CHECK(ro_mul(x, y) == ro_mul(y, x));
        CHECK(ro_mul(ro_mul(x, y), z) == ro_mul(x, ro_mul(y, z)));
    }
}

TEST_CASE("gamma-module reduction of the Bott relation coefficient") {
    // A - 2B - 2D + 2 reduces to A + 4 on gamma-torsion.
    ROElem lhs = ROElem::A() - ROElem::B().scaled(2) - ROElem::D().scaled(2) + ROElem::from_int(2);
    ROElem rhs = ROElem::A() + ROElem::from_int(4);
    CHECK(GammaCoeff::reduce(lhs) == GammaCoeff::reduce(rhs));
    CHECK(GammaCoeff::reduce(rhs).int_part() == 4);
    CHECK(GammaCoeff::reduce(rhs).a_part() == std::set<unsigned>{1});
}

TEST_CASE("gamma-module kills B and reduces A-coefficients mod 2") {
    ROElem e = ROElem::B().scaled(7) + ROElem::A().scaled(6) +
               ro_mul(ROElem::A(), ROElem::A()).scaled(3);
    GammaCoeff g = GammaCoeff::reduce(e);
    CHECK(g.int_part() == 0);
    CHECK(g.a_part() == std::set<unsigned>{2});  // 6A even, 3A^2 odd, 7B killed
}

TEST_CASE("euler_reduce worked examples") {
    EulerChain c0 = euler_reduce(0);
    CHECK(c0.final.gammaPower == 2);
    CHECK(c0.final.bottPower == 0);
    CHECK(c0.final.coefficient == GammaCoeff(Int(1)));

    EulerChain c1 = euler_reduce(1);
    CHECK(c1.final.gammaPower == 2);
    CHECK(c1.final.bottPower == 1);
    CHECK(c1.final.coefficient == GammaCoeff(Int(16)));

    EulerChain c2 = euler_reduce(2);
    CHECK(c2.final.coefficient == GammaCoeff(Int(256)));
    CHECK(c2.steps.size() == 3);  // start plus one line per Bott class
    CHECK(c2.steps.front().gammaPower == 18);
}

TEST_CASE("euler_reduce coefficient is exactly 2^{4k} up to k = 64") {
    for (int k = 0; k <= 64; ++k) {
        EulerChain c = euler_reduce(k);
        CAPTURE(k);
        CHECK(c.final.coefficient == GammaCoeff(Int(1) << (4 * k)));
        CHECK(c.final.coefficient.a_part().empty());
        CHECK(c.final.bottPower == static_cast<unsigned>(k));
        CHECK(c.final.gammaPower == 2);
    }
}

TEST_CASE("mod2A worked examples") {
    Mod2AResult r0 = mod2A_feasible(0, 12);
    CHECK(r0.feasible);
    REQUIRE(!r0.poly.empty());
    CHECK(r0.poly[0] == 1);
    for (size_t i = 1; i < r0.poly.size(); ++i)
        CHECK(r0.poly[i] == 0);

    Mod2AResult r1 = mod2A_feasible(1, 10);
    CHECK(!r1.feasible);
    CHECK(r1.witnessIndex == 2);

    Mod2AResult r2 = mod2A_feasible(2, 16);
    CHECK(!r2.feasible);
    CHECK(r2.witnessIndex == 4);
}

TEST_CASE("mod2A infeasible with witness 2k for 1 <= k <= 64") {
    for (int k = 1; k <= 64; ++k) {
        Mod2AResult r = mod2A_feasible(k, 4 * k + 8);
        CAPTURE(k);
        CHECK(!r.feasible);
        CHECK(r.witnessIndex == 2 * k);
    }
}

TEST_CASE("the witness is independent of the degree bound") {
    for (int k = 1; k <= 16; ++k)
        for (int d : {0, 1, 2 * k, 4 * k + 8}) {
            Mod2AResult r = mod2A_feasible(k, d);
            CAPTURE(k);
            CAPTURE(d);
            CHECK(!r.feasible);
            CHECK(r.witnessIndex == 2 * k);
        }
}

TEST_CASE("string forms") {
    CHECK(ROElem::one().str() == "1");
    CHECK((ROElem::A() - ROElem::B().scaled(2)).str() == "A - 2B");
    CHECK(euler_reduce(1).final.str() == "(16) b(-8D)^1 gamma(D)^2");
}

TEST_CASE("report rows serialize as {k, coefficient, witnessIndex, pass}") {
    nlohmann::json row = ro_report_row(2, euler_reduce(2), mod2A_feasible(2, 16));
    CHECK(row["k"] == 2);
    CHECK(row["coefficient"] == "256");
    CHECK(row["witnessIndex"] == 4);
    CHECK(row["pass"] == true);
}
