#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mline/rat.hpp"
#include "mline/series.hpp"

#include <random>

using namespace mline;

TEST_CASE("rationals are canonical") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(0, 7).denominator() == 1);
    CHECK(Rat(22, 4).str() == "11/2");
    CHECK(Rat::parse("1069/144") == Rat(1069, 144));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("val2 on small rationals") {
    CHECK(val2(Rat(0)) == Val2::infinity());
    CHECK(val2(Rat(12)) == Val2::of(2));
    CHECK(val2(Rat(1069, 144)) == Val2::of(-4));
    CHECK(val2(Rat(1, 8)) == Val2::of(-3));
    CHECK(val2(Rat(3)) == Val2::of(0));
    CHECK(Val2::infinity().str() == "inf");
    CHECK(Val2::of(-4).str() == "-4");
}

TEST_CASE("val2 ordering and addition treat infinity as absorbing top") {
    CHECK(Val2::infinity() > Val2::of(1000000));
    CHECK(Val2::of(3) + Val2::infinity() == Val2::infinity());
    CHECK(Val2::of(3) + Val2::of(-5) == Val2::of(-2));
    CHECK(Val2::infinity() >= Val2::infinity());
}

namespace {

Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-(1L << 20), 1L << 20);
    std::uniform_int_distribution<long> den(1, 1L << 16);
    return Rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("valuation laws on random rationals") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 2000; ++trial) {
        Rat r = random_rat(rng);
        Rat s = random_rat(rng);
        if (!r.is_zero() && !s.is_zero())
            CHECK(val2(r * s) == Val2::of(val2(r).finite() + val2(s).finite()));
        Val2 sum = val2(r + s);
        Val2 lo = std::min(val2(r), val2(s));
        CHECK(sum >= lo);
        if (val2(r) != val2(s))
            CHECK(sum == lo);
    }
}

TEST_CASE("series basics and truncation to minimum order") {
    TruncSeries a = TruncSeries::from_coeffs({Rat(1), Rat(2), Rat(3)});
    TruncSeries b = TruncSeries::from_coeffs({Rat(1), Rat(1)});
    TruncSeries sum = a + b;
    CHECK(sum.order() == 1);
    CHECK(sum.coeff(0) == Rat(2));
    CHECK(sum.coeff(1) == Rat(3));
    TruncSeries prod = a * a;
    CHECK(prod.coeff(0) == Rat(1));
    CHECK(prod.coeff(1) == Rat(4));
    CHECK(prod.coeff(2) == Rat(10));
    CHECK_THROWS_AS(a.coeff(5), std::out_of_range);
}

TEST_CASE("log1p_over_z_pow worked examples") {
    CHECK(log1p_over_z_pow(1, 0).coeffs() == std::vector<Rat>{Rat(1)});
    TruncSeries s1 = log1p_over_z_pow(1, 1);
    CHECK(s1.coeff(0) == Rat(1));
    CHECK(s1.coeff(1) == Rat(-5, 2));
    CHECK(log1p_over_z_pow(1, 4).coeff(4) == Rat(1069, 144));
}

TEST_CASE("composition requires vanishing constant term") {
    TruncSeries f = identity_series(3);
    TruncSeries g = exp_minus_one(3);
    TruncSeries composed = series_compose_subst(f, g);
    CHECK(composed.coeff(1) == Rat(1));
    CHECK(composed.coeff(2) == Rat(1, 2));
    CHECK(composed.coeff(3) == Rat(1, 6));

    TruncSeries one = TruncSeries::constant(Rat(1), 3);
    CHECK(series_compose_subst(one, g) == TruncSeries::constant(Rat(1), 3));

    TruncSeries zsq = identity_series(3) * identity_series(3);
    TruncSeries sq = series_compose_subst(zsq, g);
    CHECK(sq.coeff(2) == Rat(1));
    CHECK(sq.coeff(3) == Rat(1));
    CHECK(sq.coeff(0).is_zero());

    CHECK_THROWS_AS(series_compose_subst(f, one), std::invalid_argument);
}

TEST_CASE("ln(1+(e^x-1)) is x up to truncation") {
    for (int order : {4, 9, 17}) {
        TruncSeries composed = series_compose_subst(log1p_series(order), exp_minus_one(order));
        CHECK(composed == identity_series(order));
    }
}

TEST_CASE("multinomial oracle worked examples") {
    CHECK(bm_multinomial_oracle(1, 0) == Rat(1));
    CHECK(bm_multinomial_oracle(1, 1) == Rat(-5, 2));
    CHECK(bm_multinomial_oracle(1, 4) == Rat(1069, 144));
    CHECK_THROWS_AS(bm_multinomial_oracle(1, 5), std::invalid_argument);
}

TEST_CASE("oracle equals the series coefficients for k <= 6") {
    for (int k = 1; k <= 6; ++k) {
        int mmax = std::min(24, 4 * k);
        TruncSeries f = log1p_over_z_pow(k, mmax);
        for (int m = 0; m <= mmax; ++m)
            CHECK(f.coeff(m) == bm_multinomial_oracle(k, m));
    }
}

TEST_CASE("series power agrees with repeated multiplication") {
    TruncSeries g = log1p_over_z(6);
    TruncSeries by_mult = TruncSeries::constant(Rat(1), 6);
    for (int i = 0; i < 5; ++i)
        by_mult = by_mult * g;
    CHECK(series_pow(g, 5) == by_mult);
}

TEST_CASE("shift_down divides by powers of z") {
    TruncSeries e = exp_minus_one(5);
    TruncSeries shifted = e.shift_down(1);
    CHECK(shifted.coeff(0) == Rat(1));
    CHECK(shifted.coeff(1) == Rat(1, 2));
    CHECK_THROWS_AS(TruncSeries::constant(Rat(1), 3).shift_down(1), std::invalid_argument);
}
