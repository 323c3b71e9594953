#pragma once

#include "repsets/integer_set.hpp"
#include "repsets/rep_profile.hpp"
#include "repsets/structure.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace repsets {

struct SearchOptions {
    Int max_element = 24;
    std::size_t size = 4;
    int jobs = 1;
    /// Lifts the power-of-two size restriction (diagnostic mode).
    bool any_size = false;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t profile_prunes = 0;
    std::uint64_t capacity_prunes = 0;
    double wall_seconds = 0.0;
};

struct ClassifiedPair {
    IntegerSet c;
    IntegerSet d;
    Classification classification;
};

struct SearchReport {
    Int max_element = 0;
    std::size_t size = 0;
    std::vector<ClassifiedPair> pairs; // lexicographic on (C, D), no duplicates
    SearchStats stats;
};

/// One completed shard of the enumeration; shards are keyed by the
/// second-smallest element of C and are independent units of work.
struct ShardResult {
    Int shard_key = 0;
    std::vector<std::pair<IntegerSet, IntegerSet>> pairs;
    SearchStats stats;
};

/// Exhaustively enumerates all pairs (C, D) of distinct size-`size`
/// subsets of [0, max_element] with 0 in C, 0 not in D and identical
/// strict pair profiles. Every reported pair is re-verified through the
/// polynomial criterion and classified. Sizes must be powers of two
/// unless any_size is set; max_element is capped per size.
SearchReport enumerate_coinciding_pairs(const SearchOptions& opts);

/// Per-shard variant driving checkpoint/resume: runs only the shards in
/// `shard_keys`, invoking on_shard after each. all_shard_keys(opts)
/// lists the full key range.
std::vector<Int> all_shard_keys(const SearchOptions& opts);
ShardResult run_shard(const SearchOptions& opts, Int shard_key);

struct AuditVerdict {
    bool all_hilbert = false;
    std::size_t pair_count = 0;
    std::size_t non_hilbert_count = 0;
    bool reverified = false; // every pair passed the polynomial criterion
    SearchReport report;
};

/// Enumeration plus per-pair classification summarized into a verdict;
/// emits the evidence, asserts nothing beyond it.
AuditVerdict classification_audit(const SearchOptions& opts);

/// Word-parallel strict pair profile of the set encoded in `bits`
/// (bit i = membership of i). Identical output to
/// rep_function(A, 2, strict, n_max).
RepProfile profile_kernel(const std::vector<std::uint64_t>& bits, Int n_max);

std::vector<std::uint64_t> to_bitmask(const IntegerSet& a);

} // namespace repsets
