// Lehmer ranking and bijection plumbing.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "fsg/bijection.hpp"
#include "fsg/rng.hpp"

using namespace fsg;

TEST_CASE("rank endpoints") {
    REQUIRE(rank(Bijection::identity(4)) == 0);
    REQUIRE(rank(Bijection::from_values({3, 2, 1, 0})) == 23);
    REQUIRE(rank(Bijection::identity(1)) == 0);
    REQUIRE(rank(Bijection::from_values({11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0})) == factorial(12) - 1);
}

TEST_CASE("rank and unrank invert each other") {
    for (std::uint64_t i = 0; i < factorial(5); ++i) REQUIRE(rank(unrank(i, 5)) == i);

    CounterRng rng(5150, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> values(8);
        for (int i = 0; i < 8; ++i) values[i] = i;
        for (int i = 7; i > 0; --i) std::swap(values[i], values[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        const Bijection b = Bijection::from_values(values);
        REQUIRE(unrank(rank(b), 8) == b);
    }
}

TEST_CASE("unrank walks lexicographic order") {
    Bijection prev = unrank(0, 4);
    REQUIRE(prev == Bijection::identity(4));
    for (std::uint64_t i = 1; i < factorial(4); ++i) {
        const Bijection cur = unrank(i, 4);
        REQUIRE(prev.to_vector() < cur.to_vector());
        prev = cur;
    }
    REQUIRE_THROWS_AS(unrank(factorial(4), 4), std::invalid_argument);
}

TEST_CASE("bijection validation and primitives") {
    REQUIRE_THROWS_AS(Bijection::from_values({0, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Bijection::from_values({0, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(Bijection::from_values({}), std::invalid_argument);

    Bijection b = Bijection::from_values({2, 0, 1});
    REQUIRE(b.at(0) == 2);
    REQUIRE(b.position_of(1) == 2);
    b.swap_positions(0, 2);
    REQUIRE(b == Bijection::from_values({1, 0, 2}));
    REQUIRE_THROWS_AS(b.at(3), std::out_of_range);
}
