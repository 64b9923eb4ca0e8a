#include <doctest.h>

#include <cstdint>

#include "fzeta/words.hpp"

using namespace fzeta;

namespace {

// Deterministic small word-polynomial generator for property checks.
struct Lcg {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
};

WordPoly random_poly(Lcg& rng, int max_terms, int max_degree) {
    WordPoly p;
    const int terms = 1 + static_cast<int>(rng.next() % max_terms);
    for (int t = 0; t < terms; ++t) {
        const int deg = static_cast<int>(rng.next() % (max_degree + 1));
        std::string s;
        for (int i = 0; i < deg; ++i) s += (rng.next() & 1) ? 'y' : 'x';
        const long num = static_cast<long>(rng.next() % 7) - 3;
        const long den = 1 + static_cast<long>(rng.next() % 4);
        p.add(Word(s), make_rational(num, den));
    }
    return p;
}

}  // namespace

TEST_CASE("shuffle basics") {
    Word x("x"), y("y");
    WordPoly xy_yx;
    xy_yx.add(Word("xy"), 1);
    xy_yx.add(Word("yx"), 1);
    CHECK(shuffle(x, y) == xy_yx);

    WordPoly two_yy;
    two_yy.add(Word("yy"), 2);
    CHECK(shuffle(y, y) == two_yy);

    WordPoly mixed;
    mixed.add(Word("xyy"), 2);
    mixed.add(Word("yxy"), 1);
    CHECK(shuffle(Word("xy"), y) == mixed);

    CHECK(shuffle(WordPoly::one(), WordPoly(Word("yx"))) == WordPoly(Word("yx")));
}

TEST_CASE("shuffle is commutative and associative, degree-graded") {
    Lcg rng;
    for (int round = 0; round < 12; ++round) {
        WordPoly a = random_poly(rng, 3, 4);
        WordPoly b = random_poly(rng, 3, 4);
        WordPoly c = random_poly(rng, 2, 3);
        CHECK(shuffle(a, b) == shuffle(b, a));
        CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
    }
    // Homogeneous inputs stay homogeneous of the summed degree.
    WordPoly h = shuffle(Word("xy"), Word("yyx"));
    for (const auto& [w, q] : h.terms()) CHECK(w.degree() == 5);
}

TEST_CASE("word reversal") {
    CHECK(reversed(Word("xy")) == Word("yx"));
    CHECK(reversed(Word("yxy")) == Word("yxy"));
    Lcg rng;
    for (int round = 0; round < 10; ++round) {
        std::string s;
        for (std::uint64_t i = 0, n = rng.next() % 8; i < n; ++i)
            s += (rng.next() & 1) ? 'y' : 'x';
        CHECK(reversed(reversed(Word(s))) == Word(s));
    }
    CHECK_THROWS_AS(Word("xz"), std::invalid_argument);
}

TEST_CASE("p-map") {
    CHECK(p_map(Word("yy")) == Index{1});
    CHECK(p_map(Word("yxyxy")) == Index{2, 2});
    CHECK(p_map(Word("yxxy")) == Index{3});

    // y^{a+1} x y^{b+1} x y^{c+1} -> ({1}^a, 2, {1}^b, 2, {1}^c)
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c) {
                Word w = word_power('y', a + 1) * word_power('x', 1) *
                         word_power('y', b + 1) * word_power('x', 1) *
                         word_power('y', c + 1);
                std::vector<int> parts(static_cast<std::size_t>(a), 1);
                parts.push_back(2);
                parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
                parts.push_back(2);
                parts.insert(parts.end(), static_cast<std::size_t>(c), 1);
                Index expect(parts);
                CHECK(p_map(w) == expect);
                CHECK(w.degree() == static_cast<std::size_t>(expect.weight()) + 1);
            }

    CHECK_THROWS_AS(p_map(Word("y")), std::domain_error);
    CHECK_THROWS_AS(p_map(Word("xy")), std::domain_error);
    CHECK_THROWS_AS(p_map(Word("yx")), std::domain_error);
    CHECK_THROWS_AS(p_map(Word()), std::domain_error);

    // Linearity over polynomials.
    WordPoly poly;
    poly.add(Word("yy"), make_rational(1, 2));
    poly.add(Word("yxy"), -2);
    IndexCombo expect;
    expect.add(Index{1}, make_rational(1, 2));
    expect.add(Index{2}, -2);
    CHECK(p_map(poly) == expect);
}

TEST_CASE("bump polynomial with alternating sign") {
    CHECK(build_p(0, 1, 2, 1) == WordPoly(Word("yxyxy")));

    WordPoly p1 = build_p(1, 1, 1, 1);
    CHECK(p1.size() == 3);
    for (const auto& [w, q] : p1.terms()) CHECK(q == Rational(-1));

    for (int m = 0; m <= 3; ++m)
        for (int l1 = 1; l1 <= 3; ++l1)
            for (int l2 = 1; l2 <= 3; ++l2)
                for (int l3 = 1; l3 <= 3; ++l3) {
                    WordPoly p = build_p(m, l1, l2, l3);
                    CHECK(p.size() ==
                          static_cast<std::size_t>((m + 1) * (m + 2) / 2));
                    for (const auto& [w, q] : p.terms())
                        CHECK(w.degree() ==
                              static_cast<std::size_t>(l1 + l2 + l3 + m + 1));
                }
}

TEST_CASE("bump polynomial with binomial weights") {
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2)
            for (int l3 = 1; l3 <= 3; ++l3)
                CHECK(build_q(0, l1, l2, l3) == build_p(0, l1, l2, l3));

    // l2 = 1 keeps only e2 = 0.
    WordPoly q1 = build_q(1, 2, 1, 1);
    WordPoly expect;
    expect.add(Word("yyyxxy"), 2);   // e=(1,0,0): C(2,1)=2
    expect.add(Word("yyxxyy"), 1);   // e=(0,0,1): C(1,1)=1
    CHECK(q1 == expect);

    // The coefficient of y^{l1+a1} x y^{l2+a2-1} x y^{l3+a3} is the triple
    // binomial product.
    auto coeff_of = [](const WordPoly& p, const Word& w) -> Rational {
        auto it = p.terms().find(w);
        return it == p.terms().end() ? Rational(0) : it->second;
    };
    for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = 0; a2 <= 2; ++a2)
            for (int a3 = 0; a3 <= 2; ++a3) {
                const int l1 = 2, l2 = 3, l3 = 1, m = a1 + a2 + a3;
                Word w = word_power('y', l1 + a1) * word_power('x', 1) *
                         word_power('y', l2 + a2 - 1) * word_power('x', 1) *
                         word_power('y', l3 + a3);
                Rational expect3(binom_exact(l1 + a1 - 1, a1) *
                                 binom_exact(l2 + a2 - 2, a2) *
                                 binom_exact(l3 + a3 - 1, a3));
                CHECK(coeff_of(build_q(m, l1, l2, l3), w) == expect3);
            }
}

TEST_CASE("difference of the two bump polynomials as shuffles") {
    for (int l1 = 1; l1 <= 2; ++l1)
        for (int l2 = 1; l2 <= 2; ++l2)
            for (int l3 = 1; l3 <= 2; ++l3)
                CHECK(pq_difference_shuffles(0, l1, l2, l3) == WordPoly());

    CHECK(pq_difference_shuffles(1, 1, 2, 1) ==
          build_p(1, 1, 2, 1) - build_q(1, 1, 2, 1));
    CHECK(pq_difference_shuffles(2, 2, 1, 2) ==
          build_p(2, 2, 1, 2) - build_q(2, 2, 1, 2));
    CHECK(pq_difference_shuffles(3, 1, 1, 2) ==
          build_p(3, 1, 1, 2) - build_q(3, 1, 1, 2));

    // Full shuffle expansion reproduces the binomial bump polynomial.
    for (int m = 0; m <= 3; ++m)
        for (int l2 : {1, 2, 3})
            CHECK(q_shuffle_expansion(m, 2, l2, 1) == build_q(m, 2, l2, 1));
}
