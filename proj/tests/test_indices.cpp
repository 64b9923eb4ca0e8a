#include <doctest.h>

#include "fzeta/indices.hpp"
#include "test_oracles.hpp"

using namespace fzeta;

TEST_CASE("weight, depth, all_ones") {
    Index k{2, 1, 2};
    CHECK(weight(k) == 5);
    CHECK(depth(k) == 3);
    CHECK(weight(Index()) == 0);
    CHECK(depth(Index()) == 0);
    for (int m = 0; m <= 6; ++m) {
        CHECK(weight(all_ones(m)) == m);
        CHECK(depth(all_ones(m)) == m);
    }
    CHECK(all_ones(3) == Index{1, 1, 1});
    CHECK_THROWS_AS((Index{0, 2}), std::invalid_argument);
}

TEST_CASE("componentwise bump") {
    Index k{2, 1, 2};
    CHECK(oplus(k, std::vector<int>{0, 0, 0}) == k);
    CHECK(oplus(k, std::vector<int>{1, 0, 2}) == Index{3, 1, 4});
    CHECK(oplus(Index{1}, std::vector<int>{5}) == Index{6});
    CHECK_THROWS_AS(oplus(k, std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("bump enumeration is lexicographic and complete") {
    CHECK(enumerate_bumps(3, 0) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(enumerate_bumps(2, 2) ==
          std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(enumerate_bumps(3, 2).size() == 6);  // C(4,2)
    auto bumps = enumerate_bumps(4, 3);
    CHECK(bumps.size() == 20);  // C(6,3)
    for (std::size_t i = 1; i < bumps.size(); ++i) CHECK(bumps[i - 1] < bumps[i]);
}

TEST_CASE("Hoffman dual") {
    CHECK(hoffman_dual(Index{3}) == Index{1, 1, 1});
    CHECK(hoffman_dual(Index{2, 1, 2}) == Index{1, 3, 1});
    CHECK(hoffman_dual(Index{1}) == Index{1});
    CHECK_THROWS_AS(hoffman_dual(Index()), std::invalid_argument);
    for (int w = 1; w <= 10; ++w)
        for (const Index& k : testing::compositions_of(w)) {
            Index d = hoffman_dual(k);
            CHECK(d.weight() == k.weight());
            CHECK(d.depth() == k.weight() - k.depth() + 1);
            CHECK(hoffman_dual(d) == k);
        }
}

TEST_CASE("classical dual index") {
    CHECK(dual_index(Index{2}) == Index{2});
    CHECK(dual_index(Index{1, 2}) == Index{3});
    CHECK(dual_index(Index{2, 1, 2}) == Index{3, 2});
    CHECK(dual_index(Index{1, 1, 2}) == Index{4});
    CHECK_THROWS_AS(dual_index(Index{2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dual_index(Index()), std::invalid_argument);
    for (int w = 2; w <= 10; ++w)
        for (const Index& k : testing::compositions_of(w)) {
            if (!admissible(k)) continue;
            Index d = dual_index(k);
            CHECK(admissible(d));
            CHECK(d.weight() == k.weight());
            CHECK(dual_index(d) == k);
        }
}

TEST_CASE("index shuffle") {
    IndexCombo two_ones;
    two_ones.add(Index{1, 1}, 2);
    CHECK(index_shuffle(Index{1}, Index{1}) == two_ones);

    IndexCombo mix;
    mix.add(Index{2, 1}, 1);
    mix.add(Index{1, 2}, 1);
    CHECK(index_shuffle(Index{2}, Index{1}) == mix);

    IndexCombo deep;
    deep.add(Index{3, 2, 1}, 1);
    deep.add(Index{2, 3, 1}, 1);
    deep.add(Index{2, 1, 3}, 1);
    CHECK(index_shuffle(Index{2, 1}, Index{3}) == deep);

    // Coefficient mass C(r+s, r) at depth r+s and weight |k|+|l|.
    auto mass_check = [](const Index& a, const Index& b, long expect) {
        IndexCombo c = index_shuffle(a, b);
        Rational mass = 0;
        for (const auto& [idx, q] : c.terms()) {
            CHECK(idx.depth() == a.depth() + b.depth());
            CHECK(idx.weight() == a.weight() + b.weight());
            mass += q;
        }
        CHECK(mass == Rational(expect));
    };
    mass_check(Index{2, 1}, Index{1, 3}, 6);        // C(4,2)
    mass_check(Index{1, 1, 1}, Index{2, 2}, 10);    // C(5,3)
    mass_check(Index{4}, Index{1, 1, 1, 1}, 5);     // C(5,1)

    // Unit element.
    CHECK(index_shuffle(Index{2, 1}, Index()) == IndexCombo(Index{2, 1}));
}

TEST_CASE("index text round trip") {
    CHECK(parse_index("(2,1,2)") == Index{2, 1, 2});
    CHECK(parse_index("()") == Index());
    CHECK(parse_index("ones:3") == Index{1, 1, 1});
    CHECK(parse_index("ones:0") == Index());
    CHECK(to_string(Index{2, 1, 2}) == "(2,1,2)");
    CHECK(to_string(Index()) == "()");
    for (int w = 1; w <= 6; ++w)
        for (const Index& k : testing::compositions_of(w))
            CHECK(parse_index(to_string(k)) == k);
    CHECK_THROWS_AS(parse_index("(1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("(0)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("(1,,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("ones:-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_index("1,2"), std::invalid_argument);
}

TEST_CASE("combo rendering is deterministic") {
    IndexCombo c;
    c.add(Index{2, 1}, make_rational(-1, 2));
    c.add(Index{3}, 1);
    c.add(Index{1, 1, 1}, -2);
    CHECK(to_string(c) == "-2*(1,1,1) - 1/2*(2,1) + (3)");
    CHECK(to_string(IndexCombo()) == "0");
}
