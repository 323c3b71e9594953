#include "repsets/search.hpp"

#include "repsets/genfun.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace repsets {

namespace {

Int ceiling_for(std::size_t size) {
    if (size <= 2) return 4096;
    if (size <= 4) return 512;
    if (size <= 8) return 64;
    return 48;
}

void validate(const SearchOptions& opts) {
    if (opts.size == 0) throw std::invalid_argument("search: size must be >= 1");
    if (opts.size > 16) throw std::invalid_argument("search: size capped at 16");
    if (!opts.any_size && !std::has_single_bit(opts.size))
        throw std::invalid_argument(
            "search: size must be a power of two (coinciding pairs have power-of-two "
            "cardinality); pass any_size to probe other sizes");
    if (opts.max_element < 0) throw std::invalid_argument("search: negative max_element");
    if (opts.max_element > ceiling_for(opts.size))
        throw std::invalid_argument("search: max_element exceeds the ceiling " +
                                    std::to_string(ceiling_for(opts.size)) +
                                    " configured for size " + std::to_string(opts.size));
    if (opts.jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");
}

// Membership of both C and D is decided position by position. At each
// position t every pair summing to t is already fixed except (0, t)
// itself, so the profile-equality check at t forces t's membership in C
// outright; only membership in D branches. Sums above max_element are
// frozen once both sets are full and are checked in one sweep.
struct CoSolver {
    Int max_el;
    std::size_t size;
    std::vector<Int> rc, rd; // pair-sum counts over [0, 2*max_el]
    std::vector<Int> c, d;   // ascending
    std::vector<std::pair<IntegerSet, IntegerSet>> found;
    SearchStats stats;

    explicit CoSolver(Int max_element, std::size_t set_size)
        : max_el(max_element), size(set_size),
          rc(static_cast<std::size_t>(2 * max_element) + 1, 0),
          rd(static_cast<std::size_t>(2 * max_element) + 1, 0) {
        c.push_back(0);
    }

    void add(std::vector<Int>& set, std::vector<Int>& profile, Int x) {
        for (Int e : set) ++profile[static_cast<std::size_t>(e + x)];
        set.push_back(x);
    }

    void remove(std::vector<Int>& set, std::vector<Int>& profile) {
        const Int x = set.back();
        set.pop_back();
        for (Int e : set) --profile[static_cast<std::size_t>(e + x)];
    }

    bool frozen_tail_equal(Int from) const {
        for (std::size_t u = static_cast<std::size_t>(from); u < rc.size(); ++u)
            if (rc[u] != rd[u]) return false;
        return true;
    }

    void emit() {
        found.emplace_back(IntegerSet(c), IntegerSet(d));
    }

    void dfs(Int t) {
        ++stats.nodes;
        if (c.size() == size && d.size() == size) {
            if (frozen_tail_equal(t)) emit();
            else ++stats.profile_prunes;
            return;
        }
        if (t > max_el) return; // capacity unreachable
        // remaining positions must be able to complete both sets
        const Int remaining = max_el - t + 1;
        if (static_cast<Int>(size - c.size()) > remaining ||
            static_cast<Int>(size - d.size()) > remaining) {
            ++stats.capacity_prunes;
            return;
        }
        const Int diff = rd[static_cast<std::size_t>(t)] - rc[static_cast<std::size_t>(t)];
        if (diff < 0 || diff > 1) {
            ++stats.profile_prunes;
            return;
        }
        const bool in_c = diff == 1;
        if (in_c && c.size() == size) {
            ++stats.capacity_prunes;
            return;
        }
        if (in_c) add(c, rc, t);
        dfs_d_branch(t);
        if (in_c) remove(c, rc);
    }

    void dfs_d_branch(Int t) {
        dfs(t + 1); // t not in D
        if (d.size() < size) {
            add(d, rd, t);
            dfs(t + 1); // t in D
            remove(d, rd);
        }
    }
};

ShardResult run_shard_impl(const SearchOptions& opts, Int key) {
    ShardResult result;
    result.shard_key = key;
    const auto start = std::chrono::steady_clock::now();
    if (opts.size == 1) {
        // no pair sums at all: {0} coincides with every positive singleton
        for (Int x = 1; x <= opts.max_element; ++x)
            result.pairs.emplace_back(IntegerSet{0}, IntegerSet{x});
    } else {
        // key = c2 = d1 + d2, the two smallest elements of D
        for (Int d1 = 1; 2 * d1 < key; ++d1) {
            const Int d2 = key - d1;
            if (d2 > opts.max_element) continue;
            CoSolver solver(opts.max_element, opts.size);
            solver.add(solver.d, solver.rd, d1);
            solver.add(solver.d, solver.rd, d2);
            // positions below d2 carry no D pair sums, so no C elements
            // are forced there and (within this shard) no further D
            // elements may precede d2; resume the position scan there
            solver.dfs(d2 + 1);
            result.pairs.insert(result.pairs.end(), solver.found.begin(), solver.found.end());
            result.stats.nodes += solver.stats.nodes;
            result.stats.profile_prunes += solver.stats.profile_prunes;
            result.stats.capacity_prunes += solver.stats.capacity_prunes;
        }
    }
    result.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace

std::vector<Int> all_shard_keys(const SearchOptions& opts) {
    validate(opts);
    if (opts.size == 1) return {0};
    std::vector<Int> keys;
    for (Int key = 3; key <= opts.max_element; ++key) keys.push_back(key);
    return keys;
}

ShardResult run_shard(const SearchOptions& opts, Int shard_key) {
    validate(opts);
    return run_shard_impl(opts, shard_key);
}

SearchReport enumerate_coinciding_pairs(const SearchOptions& opts) {
    validate(opts);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Int> keys = all_shard_keys(opts);
    std::vector<ShardResult> shards(keys.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= keys.size()) return;
            shards[i] = run_shard_impl(opts, keys[i]);
        }
    };
    const int jobs = std::min<int>(opts.jobs, static_cast<int>(std::max<std::size_t>(keys.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchReport report;
    report.max_element = opts.max_element;
    report.size = opts.size;
    for (const ShardResult& shard : shards) {
        for (const auto& [c, d] : shard.pairs) {
            if (!coincidence_criterion(c, d))
                throw std::logic_error("search: reported pair fails the polynomial criterion");
            report.pairs.push_back({c, d, classify_pair(c, d)});
        }
        report.stats.nodes += shard.stats.nodes;
        report.stats.profile_prunes += shard.stats.profile_prunes;
        report.stats.capacity_prunes += shard.stats.capacity_prunes;
    }
    std::sort(report.pairs.begin(), report.pairs.end(),
              [](const ClassifiedPair& a, const ClassifiedPair& b) {
                  if (a.c.values() != b.c.values()) return a.c.values() < b.c.values();
                  return a.d.values() < b.d.values();
              });
    report.pairs.erase(std::unique(report.pairs.begin(), report.pairs.end(),
                                   [](const ClassifiedPair& a, const ClassifiedPair& b) {
                                       return a.c == b.c && a.d == b.d;
                                   }),
                       report.pairs.end());
    report.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

AuditVerdict classification_audit(const SearchOptions& opts) {
    AuditVerdict verdict;
    verdict.report = enumerate_coinciding_pairs(opts);
    verdict.pair_count = verdict.report.pairs.size();
    verdict.reverified = true; // enumerate throws otherwise
    for (const ClassifiedPair& pair : verdict.report.pairs)
        if (pair.classification.kind != PairClass::hilbert_pair) ++verdict.non_hilbert_count;
    verdict.all_hilbert = verdict.non_hilbert_count == 0;
    return verdict;
}

std::vector<std::uint64_t> to_bitmask(const IntegerSet& a) {
    if (a.empty()) return {};
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(a.max_element()) / 64 + 1, 0);
    for (Int x : a) bits[static_cast<std::size_t>(x) / 64] |= std::uint64_t(1) << (x % 64);
    return bits;
}

RepProfile profile_kernel(const std::vector<std::uint64_t>& bits, Int n_max) {
    if (n_max < 0) throw std::invalid_argument("profile_kernel: negative bound");
    RepProfile profile{2, RepVariant::strict, n_max,
                       std::vector<Int>(static_cast<std::size_t>(n_max) + 1, 0)};
    Int top = -1;
    for (std::size_t w = bits.size(); w-- > 0;) {
        if (bits[w]) {
            top = static_cast<Int>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits[w])));
            break;
        }
    }
    if (top < 0) return profile;

    // reversed window: bit i of rev == bit (top - i) of bits
    const std::size_t words = static_cast<std::size_t>(top) / 64 + 1;
    std::vector<std::uint64_t> rev(words, 0);
    for (Int i = 0; i <= top; ++i)
        if (bits[static_cast<std::size_t>(top - i) / 64] >> ((top - i) % 64) & 1u)
            rev[static_cast<std::size_t>(i) / 64] |= std::uint64_t(1) << (i % 64);

    // bit j of (rev shifted by k) == rev[j - k]; ordered count of n is
    // popcount(bits & shift(rev, n - top))
    std::vector<std::uint64_t> shifted(words);
    const Int n_hi = std::min(n_max, 2 * top);
    for (Int n = 0; n <= n_hi; ++n) {
        const Int k = n - top;
        const Int word_shift = k >= 0 ? k / 64 : -((-k + 63) / 64);
        const int bit_shift = static_cast<int>(k - word_shift * 64); // in [0, 63]
        for (std::size_t j = 0; j < words; ++j) {
            const Int src = static_cast<Int>(j) - word_shift;
            std::uint64_t low = 0, high = 0;
            if (src >= 0 && src < static_cast<Int>(words)) low = rev[static_cast<std::size_t>(src)];
            if (bit_shift && src - 1 >= 0 && src - 1 < static_cast<Int>(words))
                high = rev[static_cast<std::size_t>(src - 1)];
            shifted[j] = bit_shift ? (low << bit_shift) | (high >> (64 - bit_shift)) : low;
        }
        Int ordered = 0;
        for (std::size_t j = 0; j < words; ++j)
            ordered += std::popcount(bits[j] & shifted[j]);
        const bool diagonal =
            n % 2 == 0 && static_cast<std::size_t>(n) / 128 < bits.size() &&
            (bits[static_cast<std::size_t>(n / 2) / 64] >> ((n / 2) % 64) & 1u);
        profile.counts[static_cast<std::size_t>(n)] = (ordered - (diagonal ? 1 : 0)) / 2;
    }
    return profile;
}

} // namespace repsets
