#include <doctest.h>

#include "fzeta/series.hpp"
#include "test_oracles.hpp"

using namespace fzeta;

TEST_CASE("truncated series arithmetic") {
    Prime p(101);
    TruncSeries one(p, 10);
    one.set(0, Residue(1, p));
    TruncSeries a(p, 10);
    a.set(3, Residue(3, p));
    a.set(5, Residue(5, p));

    CHECK(a * one == a);

    TruncSeries x3(p, 10), x5(p, 10);
    x3.set(3, Residue(1, p));
    x5.set(5, Residue(1, p));
    TruncSeries x8 = x3 * x5;
    for (int w = 0; w <= 10; ++w)
        CHECK(x8.at(w).value() == (w == 8 ? 1u : 0u));

    // (3X^3 + 5X^5)^2 = 9X^6 + 30X^8 + 25X^10
    TruncSeries sq = a * a;
    CHECK(sq.at(6).value() == 9);
    CHECK(sq.at(8).value() == 30);
    CHECK(sq.at(10).value() == 25);
    for (int w : {0, 1, 2, 3, 4, 5, 7, 9}) CHECK(sq.at(w).value() == 0);

    TruncSeries other(Prime(103), 10);
    CHECK_THROWS_AS(a + other, std::invalid_argument);
    TruncSeries shorter(p, 8);
    CHECK_THROWS_AS(a + shorter, std::invalid_argument);
}

TEST_CASE("bracket-weighted depth-one series") {
    EvalContext ctx((Prime(31)));
    const int N = 12;
    TruncSeries f21 = f_series(2, 1, ctx, N);
    for (int n = 0; n <= N; ++n) {
        if (n < 3) {
            CHECK(f21.at(n).value() == 0);
        } else {
            CHECK(f21.at(n) == ctx.residue(n) * ctx.bz(n));
        }
    }
    for (int k = 1; k <= 3; ++k) {
        CHECK(f_series(k, k, ctx, N).is_zero());
        for (int i = 1; i <= 3; ++i)
            CHECK(f_series(k, i, ctx, N) == -f_series(i, k, ctx, N));
    }
    // Even-weight coefficients always vanish.
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= 3; ++i) {
            TruncSeries f = f_series(k, i, ctx, N);
            for (int n = 0; n <= N; n += 2) CHECK(f.at(n).value() == 0);
        }
    CHECK_THROWS_AS(f_series(2, 1, ctx, 30), std::invalid_argument);
}

TEST_CASE("Ohno generating function vanishes in depth one and two") {
    EvalContext ctx((Prime(41)));
    const int N = 12;
    for (int k = 1; k <= 4; ++k)
        CHECK(ohno_series(Index{k}, ctx, N).is_zero());
    for (int s = 2; s <= 5; ++s)
        for (int k1 = 1; k1 < s; ++k1)
            CHECK(ohno_series(Index{k1, s - k1}, ctx, N).is_zero());
    CHECK_THROWS_AS(ohno_series(Index(), ctx, N), std::invalid_argument);
}

TEST_CASE("Ohno series has no support below the base weight") {
    EvalContext ctx((Prime(29)));
    for (const Index& k : {Index{1, 3, 1}, Index{2, 2, 3}, Index{4, 1, 1}}) {
        TruncSeries o = ohno_series(k, ctx, 12);
        for (int w = 0; w < k.weight(); ++w) CHECK(o.at(w).value() == 0);
    }
}

TEST_CASE("depth-three closed form branches") {
    EvalContext ctx((Prime(29)));
    const int N = 10;
    for (int k1 = 1; k1 <= 2; ++k1)
        for (int k3 = 1; k3 <= 2; ++k3) {
            CHECK(main_rhs_series(k1, 2, k3, ctx, N).is_zero());
            CHECK(ohno_series(Index{k1, 2, k3}, ctx, N).is_zero());
        }

    TruncSeries f21 = f_series(2, 1, ctx, N);
    CHECK(main_rhs_series(2, 1, 2, ctx, N) == f21 * f21);

    TruncSeries f12 = f_series(1, 2, ctx, N);
    CHECK(main_rhs_series(1, 3, 1, ctx, N) == -(f12 * f12));
}

TEST_CASE("sum formula sides") {
    EvalContext ctx((Prime(31)));

    auto s103 = sum_formula_sides(1, 0, 3, ctx);
    CHECK(s103.strict_sum ==
          zeta_finite(Index{1, 2}, ZetaMode::Strict, ctx));
    CHECK(s103.strict_sum == ctx.residue(3) * ctx.bz(3));
    CHECK(s103.strict_sum == s103.f_coeff);
    CHECK(s103.star_sum == s103.f_coeff);  // (-1)^{i+j+1} = +1 here

    for (int n = 2; n <= 8; ++n) {
        auto s = sum_formula_sides(0, 0, n, ctx);
        CHECK(s.strict_sum.value() == 0);
        CHECK(s.star_sum.value() == 0);
        CHECK(s.f_coeff.value() == 0);
    }

    auto s114 = sum_formula_sides(1, 1, 4, ctx);
    CHECK(s114.strict_sum == testing::naive_zeta(Index{1, 2, 1},
                                                 ZetaMode::Strict, Prime(31)));
    CHECK(s114.f_coeff.value() == 0);  // F_{2,2} = 0
    CHECK(s114.strict_sum.value() == 0);
}

TEST_CASE("the two halves of the Ohno function match their closed forms") {
    {
        EvalContext ctx((Prime(31)));
        SeriesPair a = lemma_sides(LemmaSide::A, 1, 1, 1, ctx, 6);
        CHECK(a.lhs == a.rhs);
    }
    {
        EvalContext ctx((Prime(41)));
        SeriesPair b = lemma_sides(LemmaSide::B, 2, 1, 2, ctx, 10);
        CHECK(b.lhs == b.rhs);
    }
    {
        EvalContext ctx((Prime(37)));
        const int N = 9;
        for (int k1 = 1; k1 <= 2; ++k1)
            for (int k2 = 1; k2 <= 2; ++k2)
                for (int k3 = 1; k3 <= 2; ++k3) {
                    SeriesPair a = lemma_sides(LemmaSide::A, k1, k2, k3, ctx, N);
                    SeriesPair b = lemma_sides(LemmaSide::B, k1, k2, k3, ctx, N);
                    CHECK(a.lhs == a.rhs);
                    CHECK(b.lhs == b.rhs);
                    // The two halves sum to the Ohno function by definition.
                    CHECK(a.lhs + b.lhs ==
                          ohno_series(Index{k1, k2, k3}, ctx, N));
                }
    }
}

TEST_CASE("telescoping steps") {
    EvalContext ctx((Prime(31)));
    CHECK(u_telescope_check(1, 3, ctx));
    CHECK(u_telescope_check(2, 5, ctx));
    CHECK(u_telescope_check(2, 6, ctx));
    for (int s = 3; s <= 10; ++s)
        for (int k = 1; k < s; ++k) CHECK(u_telescope_check(k, s, ctx));
    CHECK_THROWS_AS(u_telescope_check(3, 3, ctx), std::invalid_argument);
    CHECK_THROWS_AS(u_telescope_check(1, 2, ctx), std::invalid_argument);
}
