#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mline/stems.hpp"

using namespace mline;

TEST_CASE("stem_group worked examples") {
    CHECK(stem_group(4).order == 0);
    CHECK(stem_group(5).order == 0);

    const StemGroup& ten = stem_group(10);
    CHECK(ten.order == 2);
    REQUIRE(ten.generators.size() == 1);
    CHECK(ten.generators[0].name == "{Ph_1^2}");

    const StemGroup& three = stem_group(3);
    CHECK(three.order == 8);
    CHECK(three.generators[0].name == "nu");
    CHECK(three.generators[0].order == 8);

    CHECK_THROWS_AS(stem_group(21), std::out_of_range);
    CHECK_THROWS_AS(stem_group(-1), std::out_of_range);
}

TEST_CASE("moore rows") {
    CHECK(moore_group(5).order == 0);
    CHECK(moore_group(6).order == 2);
    CHECK(moore_group(11).order == 4);
    CHECK(moore_group(11).generators.size() == 2);
    CHECK_THROWS_AS(moore_group(7), std::out_of_range);
}

TEST_CASE("relation_check worked examples") {
    CHECK(relation_check("eta_cubed_eq_4nu"));
    CHECK(relation_check("two_annihilates_pi9"));
    CHECK(relation_check("pi11_moore_rank2"));
    CHECK_THROWS_AS(relation_check("no_such_relation"), std::invalid_argument);
}

TEST_CASE("every stored relation evaluates true") {
    for (const auto& name : relation_names()) {
        CAPTURE(name);
        CHECK(relation_check(name));
        CHECK(!relation_info(name).citation.empty());
    }
}

TEST_CASE("element orders divide group orders") {
    for (int n = 0; n <= 20; ++n) {
        const StemGroup& g = stem_group(n);
        if (g.infinite)
            continue;
        for (const auto& e : g.generators) {
            CAPTURE(n);
            CHECK(e.order > 0);
            CHECK(g.order % e.order == 0);
        }
        if (g.order == 0)
            CHECK(g.generators.empty());
    }
}

TEST_CASE("the 4{P^{k-1}h_2} alias") {
    CHECK(four_ph2_alias() == "{P^{k-1}h_1^3}");
    CHECK(relation_check("four_ph2_named_ph1cubed"));
}
