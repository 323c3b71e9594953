#include "repsets/search.hpp"
#include "repsets/genfun.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace repsets;

namespace {

// naive two-level enumeration: every C containing 0, every D avoiding 0
std::vector<std::pair<IntegerSet, IntegerSet>> brute_force_pairs(Int max_el, std::size_t size) {
    std::vector<std::pair<IntegerSet, IntegerSet>> out;
    std::vector<IntegerSet> with_zero, without_zero;
    std::vector<Int> pick;
    auto walk = [&](auto&& self, Int next, Int lo) -> void {
        if (pick.size() == size) {
            (pick[0] == 0 ? with_zero : without_zero).emplace_back(pick);
            return;
        }
        for (Int x = next; x <= max_el; ++x) {
            pick.push_back(x);
            self(self, x + 1, lo);
            pick.pop_back();
        }
    };
    walk(walk, 0, 0);
    for (const auto& c : with_zero) {
        const auto pc = oracles::strict_pair_counts(c, 2 * max_el);
        for (const auto& d : without_zero)
            if (oracles::strict_pair_counts(d, 2 * max_el) == pc) out.emplace_back(c, d);
    }
    return out;
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("profile kernel equals rep_function on the examples") {
    const IntegerSet a{0, 3};
    CHECK(profile_kernel(to_bitmask(a), 6).counts ==
          rep_function(a, 2, RepVariant::strict, 6).counts);
    CHECK(profile_kernel({}, 5).counts == std::vector<Int>(6, 0));
}

TEST_CASE("profile kernel differential test against the naive loop") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t size = 1 + rng() % 12;
        const auto a = oracles::random_subset(rng, 63, size);
        const Int n_max = static_cast<Int>(rng() % 130);
        CAPTURE(to_string(a));
        CAPTURE(n_max);
        CHECK(profile_kernel(to_bitmask(a), n_max).counts ==
              oracles::strict_pair_counts(a, n_max));
    }
}

TEST_CASE("enumeration at tiny scale matches the two-level oracle") {
    for (const auto& [max_el, size] : std::vector<std::pair<Int, std::size_t>>{
             {3, 2}, {8, 2}, {12, 2}, {7, 4}, {10, 4}, {12, 4}}) {
        const auto expect = brute_force_pairs(max_el, size);
        const auto report = enumerate_coinciding_pairs({max_el, size, 2, false});
        CAPTURE(max_el);
        CAPTURE(size);
        REQUIRE(report.pairs.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) {
            CHECK(report.pairs[i].c == expect[i].first);
            CHECK(report.pairs[i].d == expect[i].second);
        }
    }
}

TEST_CASE("known pairs appear in the enumeration") {
    const auto small = enumerate_coinciding_pairs({3, 2, 1, false});
    REQUIRE(small.pairs.size() == 1);
    CHECK(small.pairs[0].c == IntegerSet{0, 3});
    CHECK(small.pairs[0].d == IntegerSet{1, 2});

    const auto quads = enumerate_coinciding_pairs({7, 4, 1, false});
    REQUIRE(quads.pairs.size() == 2);
    CHECK(quads.pairs[0].c == IntegerSet{0, 3, 4, 5});
    CHECK(quads.pairs[0].d == IntegerSet{1, 2, 3, 6});
    CHECK(quads.pairs[1].c == IntegerSet{0, 3, 5, 6});
    CHECK(quads.pairs[1].d == IntegerSet{1, 2, 4, 7});

    CHECK(enumerate_coinciding_pairs({2, 4, 1, false}).pairs.empty());
}

TEST_CASE("size one: the zero singleton coincides with every positive singleton") {
    const auto report = enumerate_coinciding_pairs({5, 1, 1, false});
    REQUIRE(report.pairs.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(report.pairs[i].c == IntegerSet{0});
        CHECK(report.pairs[i].d == IntegerSet{static_cast<Int>(i) + 1});
        CHECK(report.pairs[i].classification.kind == PairClass::hilbert_pair);
    }
}

TEST_CASE("option validation") {
    CHECK_THROWS_AS(enumerate_coinciding_pairs({10, 3, 1, false}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_coinciding_pairs({100, 8, 1, false}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_coinciding_pairs({10, 0, 1, false}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_coinciding_pairs({10, 4, 0, false}), std::invalid_argument);
    CHECK_NOTHROW(enumerate_coinciding_pairs({10, 3, 1, true}));
}

TEST_CASE("no coinciding pairs at non-power-of-two sizes") {
    for (std::size_t size : {3, 5}) {
        const auto report = enumerate_coinciding_pairs({12, size, 2, true});
        CAPTURE(size);
        CHECK(report.pairs.empty());
    }
}

TEST_CASE("normalization covers translated pairs") {
    // if (C, D) coincide and share no offset, shifting both by the common
    // minimum lands in the enumerator's 0-in-C form
    std::mt19937 rng(9);
    const auto base = enumerate_coinciding_pairs({12, 2, 1, false});
    REQUIRE_FALSE(base.pairs.empty());
    for (const auto& pair : base.pairs) {
        const Int shift = 1 + static_cast<Int>(rng() % 5);
        const auto c = translate(shift, pair.c);
        const auto d = translate(shift, pair.d);
        CHECK(coincidence_criterion(c, d));
        const Int lowest = std::min(c.min_element(), d.min_element());
        CHECK(lowest == shift);
        bool found = false;
        for (const auto& candidate : base.pairs)
            found |= translate(shift, candidate.c) == c && translate(shift, candidate.d) == d;
        CHECK(found);
    }
}

TEST_CASE("shard runs are deterministic and merge to the full report") {
    const SearchOptions opts{20, 4, 1, false};
    const auto whole = enumerate_coinciding_pairs(opts);
    std::vector<std::pair<IntegerSet, IntegerSet>> stitched;
    for (Int key : all_shard_keys(opts)) {
        const auto shard = run_shard(opts, key);
        const auto again = run_shard(opts, key);
        CHECK(shard.pairs == again.pairs);
        stitched.insert(stitched.end(), shard.pairs.begin(), shard.pairs.end());
    }
    std::sort(stitched.begin(), stitched.end(),
              [](const auto& a, const auto& b) {
                  return a.first.values() != b.first.values()
                             ? a.first.values() < b.first.values()
                             : a.second.values() < b.second.values();
              });
    REQUIRE(stitched.size() == whole.pairs.size());
    for (std::size_t i = 0; i < stitched.size(); ++i) {
        CHECK(stitched[i].first == whole.pairs[i].c);
        CHECK(stitched[i].second == whole.pairs[i].d);
    }
}

TEST_CASE("thread count does not change the report") {
    const auto lone = enumerate_coinciding_pairs({24, 4, 1, false});
    const auto pooled = enumerate_coinciding_pairs({24, 4, 4, false});
    REQUIRE(lone.pairs.size() == pooled.pairs.size());
    for (std::size_t i = 0; i < lone.pairs.size(); ++i) {
        CHECK(lone.pairs[i].c == pooled.pairs[i].c);
        CHECK(lone.pairs[i].d == pooled.pairs[i].d);
    }
}

TEST_CASE("audit verdict summarizes the classification") {
    const auto verdict = classification_audit({20, 4, 2, false});
    CHECK(verdict.reverified);
    CHECK(verdict.pair_count == verdict.report.pairs.size());
    CHECK(verdict.pair_count > 0);
    CHECK(verdict.all_hilbert);
    CHECK(verdict.non_hilbert_count == 0);
    for (const auto& pair : verdict.report.pairs) {
        CHECK(pair.classification.kind == PairClass::hilbert_pair);
        REQUIRE(pair.classification.generators.has_value());
        // generators drawn from D, halves reproduce the pair
        for (Int g : *pair.classification.generators) CHECK(pair.d.contains(g));
    }
}

} // TEST_SUITE
