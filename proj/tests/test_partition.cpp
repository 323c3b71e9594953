#include "repsets/partition.hpp"
#include "repsets/genfun.hpp"
#include "repsets/rep_profile.hpp"

#include <doctest.h>

using namespace repsets;

TEST_SUITE("partition") {

TEST_CASE("generator sequences") {
    CHECK(chenlev_generators(1, 30) == CubeGenerators({1, 2, 3, 7, 14, 28}));
    CHECK(chenlev_generators(2, 31) == CubeGenerators({1, 2, 4, 8, 15, 31}));
    CHECK(chenlev_generators(1, 2) == CubeGenerators({1, 2}));
    CHECK_THROWS_AS(chenlev_generators(0, 10), std::invalid_argument);
}

TEST_CASE("small truncation of the level-1 sets") {
    const auto [c, d] = chenlev_sets(1, 8);
    CHECK(c == IntegerSet{0, 3, 4, 5, 8});
    CHECK(d == IntegerSet{1, 2, 3, 6, 7});
    CHECK(set_union(c, d) == IntegerSet::interval(0, 8));
    CHECK(set_intersection(c, d) == IntegerSet{3});
}

TEST_CASE("overlap membership witnesses both parities") {
    // 3 = 1+2 (even count) and 3 alone (odd count); 10 = 3+7 and 1+2+7
    const auto [c, d] = chenlev_sets(1, 12);
    CHECK(c.contains(3));
    CHECK(d.contains(3));
    CHECK(c.contains(10));
    CHECK(d.contains(10));
}

TEST_CASE("prefix cube facts at level 1") {
    const auto parts = cube_parts(CubeGenerators({1, 2, 3}));
    CHECK(set_union(parts.even, parts.odd) == IntegerSet::interval(0, 6));
    CHECK(set_intersection(parts.even, parts.odd) == IntegerSet{3});
}

TEST_CASE("partition verification at levels 1 and 2") {
    for (int l : {1, 2}) {
        const Int bound = 200;
        const auto [c, d] = chenlev_sets(l, bound);
        const auto report = verify_partition(c, d, PartitionSpec::chen_lev(l), bound);
        CAPTURE(l);
        CHECK(report.union_ok);
        CHECK(report.intersection_ok);
        CHECK(report.rep_equal);
        CHECK(report.window_lo == 0);
        CHECK(report.window_hi == bound);
        CHECK(report.all_ok());
    }
}

TEST_CASE("overlap elements form the expected arithmetic progression") {
    for (int l : {1, 2}) {
        const Int bound = 200;
        const auto [c, d] = chenlev_sets(l, bound);
        const auto spec = PartitionSpec::chen_lev(l);
        const auto overlap = set_intersection(c, d);
        REQUIRE_FALSE(overlap.empty());
        CHECK(overlap.min_element() == spec.r);
        for (std::size_t i = 1; i < overlap.size(); ++i)
            CHECK(overlap[i] - overlap[i - 1] == spec.m);
        CHECK(overlap.max_element() + spec.m > bound);
    }
}

TEST_CASE("verification rejects wrong shapes") {
    std::vector<Int> evens, odds;
    for (Int x = 0; x <= 10; ++x) (x % 2 ? odds : evens).push_back(x);
    PartitionSpec degenerate; // r = 0, m = 1: overlap would be all of [0, bound]
    const auto report =
        verify_partition(IntegerSet(evens), IntegerSet(odds), degenerate, 10);
    CHECK(report.union_ok);
    CHECK_FALSE(report.intersection_ok); // empty overlap vs the full interval

    const auto everything = IntegerSet::interval(0, 10);
    const auto self = verify_partition(everything, everything, degenerate, 10);
    CHECK(self.union_ok);
    CHECK(self.intersection_ok); // C n D = [0,10] = 0 + 1*N
    const auto self_wrong =
        verify_partition(everything, everything, PartitionSpec{std::nullopt, 1, 2}, 10);
    CHECK_FALSE(self_wrong.intersection_ok);
}

TEST_CASE("criterion cross-check on truncations: any mismatch sits above the window") {
    const Int bound = 60;
    const auto [c, d] = chenlev_sets(1, bound);
    const bool global_equal = coincidence_criterion(c, d);
    const auto mismatch = first_mismatch(c, d, 2 * bound);
    CHECK(global_equal == !mismatch.has_value());
    if (mismatch) CHECK(*mismatch > bound); // truncation artifact only
    CHECK_FALSE(first_mismatch(c, d, bound).has_value());
}

TEST_CASE("exhaustive overlap scan finds exactly the level-1 truncation at bound 40") {
    const auto found = overlap_partition_scan(40, 8, 2);
    REQUIRE(found.size() == 1);
    CHECK(found[0].r == 3);
    CHECK(found[0].m == 7);
    const auto [c, d] = chenlev_sets(1, 40);
    CHECK(found[0].c == c);
    CHECK(found[0].d == d);

    CHECK_THROWS_AS(overlap_partition_scan(10, 8, 1), std::invalid_argument);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(PartitionSpec::chen_lev(0), std::invalid_argument);
    PartitionSpec bad = PartitionSpec::chen_lev(1);
    bad.r = 4;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    PartitionSpec loose{std::nullopt, 0, 1};
    CHECK_NOTHROW(loose.validate());
}

} // TEST_SUITE
