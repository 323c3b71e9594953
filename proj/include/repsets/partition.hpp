#pragma once

#include "repsets/cube.hpp"
#include "repsets/integer_set.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace repsets {

/// Target overlap class r + m*N of a partition-with-overlap of N.
/// Chen-Lev instances carry their level l and satisfy r = 2^(2l) - 1,
/// m = 2^(2l+1) - 1.
struct PartitionSpec {
    std::optional<int> l;
    Int r = 0;
    Int m = 1;

    static PartitionSpec chen_lev(int l);
    void validate() const; // m >= 1, r >= 0; Chen-Lev instances must match their l
};

/// Generator sequence 1, 2, 4, ..., 2^(2l-1), 2^(2l)-1, then
/// (2^(2l+1)-1) * 2^j for j = 0, 1, ..., truncated at bound. l >= 1.
CubeGenerators chenlev_generators(int l, Int bound);

/// Even and odd cube parts of the above, intersected with [0, bound].
std::pair<IntegerSet, IntegerSet> chenlev_sets(int l, Int bound);

struct PartitionReport {
    bool union_ok = false;        // C u D == [0, bound]
    bool intersection_ok = false; // C n D == (r + m*N) n [0, bound]
    bool rep_equal = false;       // strict pair profiles agree on [0, window_hi]
    Int window_lo = 0;
    Int window_hi = 0;

    bool all_ok() const { return union_ok && intersection_ok && rep_equal; }
};

/// Checks the partition claims for truncations C, D of [0, bound].
/// Pair sums n <= bound involve only elements <= n, so the profile
/// window is the full [0, bound].
PartitionReport verify_partition(const IntegerSet& c, const IntegerSet& d,
                                 const PartitionSpec& spec, Int bound);

struct OverlapCandidate {
    Int r = 0;
    Int m = 0;
    IntegerSet c;
    IntegerSet d;
};

/// Exhaustive scan over configurations C u D = [0, bound],
/// C n D = (r + m*N) n [0, bound] for some r < m <= max_m, with equal
/// strict pair profiles on [0, bound]. Branch-and-bound over membership
/// assignments in increasing n; mirror images are canonicalized by
/// placing the first non-overlap integer in C. Requires bound >= 2*max_m.
std::vector<OverlapCandidate> overlap_partition_scan(Int bound, Int max_m, int jobs = 1);

} // namespace repsets
