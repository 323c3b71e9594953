#include "repsets/cube.hpp"
#include "repsets/genfun.hpp"
#include "repsets/rep_profile.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace repsets;

namespace {

// independent route: plain mask enumeration, no Gray code
CubeParts parts_by_mask(const std::vector<Int>& gens, std::optional<Int> bound) {
    std::vector<Int> even, odd;
    for (std::uint32_t mask = 0; mask < (1u << gens.size()); ++mask) {
        Int sum = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1u) sum += gens[i];
        if (bound && sum > *bound) continue;
        (std::popcount(mask) % 2 ? odd : even).push_back(sum);
    }
    return {IntegerSet(even), IntegerSet(odd)};
}

std::vector<Int> random_superincreasing(std::mt19937& rng, std::size_t length) {
    std::vector<Int> gens;
    Int sum = 0;
    for (std::size_t i = 0; i < length; ++i) {
        const Int next = sum + 1 + static_cast<Int>(rng() % 4);
        gens.push_back(next);
        sum += next;
    }
    return gens;
}

} // namespace

TEST_SUITE("cube") {

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(CubeGenerators({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(CubeGenerators({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CubeGenerators({3, 1}), std::invalid_argument);
    CHECK(CubeGenerators({1, 2, 4}).size() == 3);
}

TEST_CASE("cube parts on the reference examples") {
    auto parts = cube_parts(CubeGenerators({1, 2}));
    CHECK(parts.even == IntegerSet{0, 3});
    CHECK(parts.odd == IntegerSet{1, 2});

    parts = cube_parts(CubeGenerators({1, 2, 4}));
    CHECK(parts.even == IntegerSet{0, 3, 5, 6});
    CHECK(parts.odd == IntegerSet{1, 2, 4, 7});

    parts = cube_parts(CubeGenerators({1, 4, 16}));
    CHECK(parts.even == IntegerSet{0, 5, 17, 20});
    CHECK(parts.odd == IntegerSet{1, 4, 16, 21});

    parts = cube_parts(CubeGenerators{});
    CHECK(parts.even == IntegerSet{0});
    CHECK(parts.odd == IntegerSet{});
}

TEST_CASE("cube parts agree with plain mask enumeration, with and without bound") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> gens;
        Int v = 0;
        const std::size_t len = 1 + trial % 8;
        for (std::size_t i = 0; i < len; ++i) {
            v += 1 + static_cast<Int>(rng() % 6);
            gens.push_back(v);
        }
        const std::optional<Int> bound =
            (trial % 3 == 0) ? std::optional<Int>(v) : std::nullopt;
        const auto expect = parts_by_mask(gens, bound);
        const auto got = cube_parts(CubeGenerators(gens), bound);
        CHECK(got.even == expect.even);
        CHECK(got.odd == expect.odd);
    }
}

TEST_CASE("bounded sweep path handles long generator lists") {
    // 30 generators forces the non-enumerative path
    std::vector<Int> gens;
    for (Int i = 1; i <= 30; ++i) gens.push_back(i);
    const auto got = cube_parts(CubeGenerators(gens), 12);
    std::vector<Int> head(gens.begin(), gens.begin() + 12);
    const auto expect = parts_by_mask(head, 12);
    CHECK(got.even == expect.even);
    CHECK(got.odd == expect.odd);
    CHECK_THROWS_AS(cube_parts(CubeGenerators(gens)), std::invalid_argument);
}

TEST_CASE("half non-degeneracy") {
    CHECK(is_half_nondegenerate(CubeGenerators({1, 2, 4})));
    CHECK(is_half_nondegenerate(CubeGenerators({1, 2, 3})));
    CHECK_FALSE(is_half_nondegenerate(CubeGenerators({1, 2, 3, 6})));

    const auto witness = half_degeneracy_witness(CubeGenerators({1, 2, 3, 6}));
    REQUIRE(witness.has_value());
    CHECK(witness->first != witness->second);
    Int sum_first = 0, sum_second = 0;
    for (Int x : witness->first) sum_first += x;
    for (Int x : witness->second) sum_second += x;
    CHECK(sum_first == witness->sum);
    CHECK(sum_second == witness->sum);
    CHECK(witness->first.size() % 2 == witness->second.size() % 2);
}

TEST_CASE("cube halves share their pair profile") {
    CHECK(verify_half_coincidence(CubeGenerators({1, 4, 16}), 40));
    CHECK(verify_half_coincidence(CubeGenerators({7}), 20));
    CHECK(verify_half_coincidence(CubeGenerators({1, 2, 3}), 12));
    CHECK_THROWS_AS(verify_half_coincidence(CubeGenerators({1, 2, 3, 6}), 20),
                    std::invalid_argument);

    // the halves of H(1,2,3) both have profile 1 on {3,4,5,7,8,9}
    const auto parts = cube_parts(CubeGenerators({1, 2, 3}));
    const auto profile = rep_function(parts.even, 2, RepVariant::strict, 12);
    for (Int n : {3, 4, 5, 7, 8, 9}) CHECK(profile.at(n) == 1);
}

TEST_CASE("product identities") {
    CHECK(product_identities(CubeGenerators({1, 2})));
    CHECK(product_identities(CubeGenerators({1})));
    CHECK(product_identities(CubeGenerators({1, 4, 16})));
    CHECK(product_identities(CubeGenerators({1, 2, 3})));    // 3 in both halves
    CHECK(product_identities(CubeGenerators({1, 2, 3, 6}))); // degenerate, multiset route
}

TEST_CASE("randomized superincreasing cubes satisfy the coincidence theorem") {
    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = random_superincreasing(rng, 3 + trial % 10);
        CubeGenerators g(gens);
        REQUIRE(is_half_nondegenerate(g)); // superincreasing: all subset sums distinct
        Int top = 0;
        for (Int x : gens) top += x;
        CHECK(verify_half_coincidence(g, 2 * top));
        CHECK(product_identities(g));
        const auto parts = cube_parts(g);
        CHECK(parts.even.size() + parts.odd.size() == (std::size_t(1) << gens.size()));
        CHECK(coincidence_criterion(parts.even, parts.odd));
    }
}

TEST_CASE("rule truncation") {
    CHECK(truncate_rule(pow2_rule(), 10) == CubeGenerators({1, 2, 4, 8}));
    CHECK(truncate_rule(pow2_rule(), 0) == CubeGenerators{});

    const std::vector<Int> stutter{1, 1, 2};
    CHECK_THROWS_AS(truncate_rule([&stutter](std::size_t k) { return stutter[k % 3]; }, 10),
                    std::invalid_argument);
}

TEST_CASE("parts of a truncated rule match parts of the full cube under the same bound") {
    for (Int bound : {5, 10, 31, 100}) {
        const auto truncated = cube_parts(truncate_rule(pow2_rule(), bound), bound);
        std::vector<Int> full;
        for (Int v = 1; v <= 4096; v *= 2) full.push_back(v);
        const auto wide = cube_parts(CubeGenerators(full), bound);
        CHECK(truncated.even == wide.even);
        CHECK(truncated.odd == wide.odd);
    }
}

} // TEST_SUITE
