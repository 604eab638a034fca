#include <catch2/catch_amalgamated.hpp>

#include "lidstone/multiindex.hpp"

using namespace lidstone;

TEST_CASE("multi-index norm and factorial") {
    CHECK(MultiIndex({1, 1}).norm() == 2);
    CHECK(MultiIndex({0, 0, 0}).norm() == 0);
    CHECK(MultiIndex({2, 3, 4}).norm() == 9);

    CHECK(MultiIndex({2, 3}).factorial() == 12);
    CHECK(MultiIndex({0, 0}).factorial() == 1);
    CHECK(MultiIndex({4}).factorial() == 24);
}

TEST_CASE("multi-index validation") {
    CHECK_THROWS_AS(MultiIndex(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(IndexPair(MultiIndex({1, 1}), 3), std::invalid_argument);
    CHECK_THROWS_AS(IndexPair(MultiIndex({1, 1}), -1), std::invalid_argument);
}

TEST_CASE("index set membership") {
    CHECK(in_index_set(IndexPair(MultiIndex({1, 1}), 0)));       // only |t| even matters at i=0
    CHECK_FALSE(in_index_set(IndexPair(MultiIndex({1, 1}), 1))); // t_1 odd
    CHECK(in_index_set(IndexPair(MultiIndex({0, 2}), 1)));
    CHECK_FALSE(in_index_set(IndexPair(MultiIndex({1, 0}), 0))); // odd norm
}

TEST_CASE("membership properties") {
    // All-even orders are admissible at every point index.
    for (const auto& t : multi_indices_up_to(3, 6)) {
        if (!t.all_even()) continue;
        for (int i = 0; i <= 3; ++i) CHECK(in_index_set(IndexPair(t, i)));
    }
    // Membership is monotone downward in the point index.
    for (const auto& t : multi_indices_up_to(3, 5))
        for (int i = 0; i < 3; ++i)
            if (in_index_set(IndexPair(t, i + 1))) CHECK(in_index_set(IndexPair(t, i)));
    // In two variables the i=1 and i=2 conditions coincide: an even norm
    // with t_1 even forces t_2 even.
    for (const auto& t : multi_indices_up_to(2, 8))
        CHECK(in_index_set(IndexPair(t, 1)) == in_index_set(IndexPair(t, 2)));
}

TEST_CASE("enumeration of the index set") {
    auto tiny = enumerate_index_set(1, 0);
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0] == IndexPair(MultiIndex({0}), 0));
    CHECK(tiny[1] == IndexPair(MultiIndex({0}), 1));

    SECTION("n=2 up to norm 2 matches the hand count") {
        auto pairs = enumerate_index_set(2, 2);
        REQUIRE(pairs.size() == 10);
        // Three pairs at norm 0, then (2,0) for i=0,1,2, (1,1) only at i=0,
        // (0,2) for i=0,1,2.
        CHECK(pairs[3] == IndexPair(MultiIndex({2, 0}), 0));
        CHECK(pairs[6] == IndexPair(MultiIndex({1, 1}), 0));
        CHECK(pairs[7] == IndexPair(MultiIndex({0, 2}), 0));
    }

    SECTION("matches the brute-force filter and is strictly ordered") {
        for (int n = 1; n <= 3; ++n) {
            auto fast = enumerate_index_set(n, 4);
            // Independent double loop over all orders and point indices.
            std::vector<IndexPair> slow;
            for (int m = 0; m <= 4; ++m)
                for (const auto& t : multi_indices_of_norm(n, m))
                    for (int i = 0; i <= n; ++i)
                        if (t.norm() % 2 == 0 && t.prefix_even(i)) slow.emplace_back(t, i);
            REQUIRE(fast.size() == slow.size());
            IndexPairLess less;
            for (std::size_t k = 0; k < fast.size(); ++k) {
                CHECK(fast[k] == slow[k]);
                if (k > 0) CHECK(less(fast[k - 1], fast[k]));  // strict, duplicate-free
            }
        }
    }
}

TEST_CASE("graded-lex order lists leading variable first") {
    auto block = multi_indices_of_norm(2, 2);
    REQUIRE(block.size() == 3);
    CHECK(block[0] == MultiIndex({2, 0}));
    CHECK(block[1] == MultiIndex({1, 1}));
    CHECK(block[2] == MultiIndex({0, 2}));
}
