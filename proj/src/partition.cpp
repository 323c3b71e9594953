#include "repsets/partition.hpp"

#include "repsets/rep_profile.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace repsets {

PartitionSpec PartitionSpec::chen_lev(int l) {
    if (l < 1 || l > 29) throw std::invalid_argument("PartitionSpec: l must be in [1, 29]");
    PartitionSpec spec;
    spec.l = l;
    spec.r = (Int(1) << (2 * l)) - 1;
    spec.m = (Int(1) << (2 * l + 1)) - 1;
    return spec;
}

void PartitionSpec::validate() const {
    if (m < 1) throw std::invalid_argument("PartitionSpec: m must be >= 1");
    if (r < 0) throw std::invalid_argument("PartitionSpec: r must be >= 0");
    if (l) {
        const PartitionSpec expect = chen_lev(*l);
        if (r != expect.r || m != expect.m)
            throw std::invalid_argument("PartitionSpec: (r, m) inconsistent with level l");
    }
}

CubeGenerators chenlev_generators(int l, Int bound) {
    if (l < 1 || l > 29) throw std::invalid_argument("chenlev_generators: l must be in [1, 29]");
    std::vector<Int> gens;
    for (int i = 0; i < 2 * l; ++i) {
        const Int v = Int(1) << i;
        if (v <= bound) gens.push_back(v);
    }
    const Int head = (Int(1) << (2 * l)) - 1;
    if (head <= bound) gens.push_back(head);
    const Int period = (Int(1) << (2 * l + 1)) - 1;
    for (Int v = period; v <= bound; v *= 2) gens.push_back(v);
    return CubeGenerators(std::move(gens));
}

std::pair<IntegerSet, IntegerSet> chenlev_sets(int l, Int bound) {
    const CubeParts parts = cube_parts(chenlev_generators(l, bound), bound);
    return {parts.even, parts.odd};
}

PartitionReport verify_partition(const IntegerSet& c, const IntegerSet& d,
                                 const PartitionSpec& spec, Int bound) {
    spec.validate();
    PartitionReport report;
    report.window_lo = 0;
    report.window_hi = bound;
    report.union_ok = set_union(c, d) == IntegerSet::interval(0, bound);
    IntegerSet overlap_class =
        spec.r > bound ? IntegerSet{} : translate(spec.r, dilate_naturals(spec.m, bound - spec.r));
    report.intersection_ok = set_intersection(c, d) == overlap_class;
    report.rep_equal = !first_mismatch(c, d, bound).has_value();
    return report;
}

namespace {

// DFS over membership assignments of 0..bound: overlap positions go to
// both sets, every other position to exactly one side. Position t is
// final once assigned (0 is in neither set's complement trick here:
// no element pairs with itself), so profile equality is enforced on the
// fly and the window never extends past `bound`.
struct OverlapScanner {
    Int bound;
    const std::vector<char>& overlap; // overlap[t]: t belongs to both
    std::vector<Int> rc, rd;
    std::vector<Int> c, d;
    std::vector<std::pair<IntegerSet, IntegerSet>> found;

    OverlapScanner(Int b, const std::vector<char>& ov)
        : bound(b), overlap(ov), rc(static_cast<std::size_t>(b) + 1, 0),
          rd(static_cast<std::size_t>(b) + 1, 0) {}

    void add(std::vector<Int>& set, std::vector<Int>& profile, Int x) {
        for (Int e : set) {
            const Int s = e + x;
            if (s <= bound) ++profile[static_cast<std::size_t>(s)];
        }
        set.push_back(x);
    }

    void remove(std::vector<Int>& set, std::vector<Int>& profile) {
        const Int x = set.back();
        set.pop_back();
        for (Int e : set) {
            const Int s = e + x;
            if (s <= bound) --profile[static_cast<std::size_t>(s)];
        }
    }

    bool position_ok(Int t) const {
        return rc[static_cast<std::size_t>(t)] == rd[static_cast<std::size_t>(t)];
    }

    void dfs(Int t, bool mirror_fixed) {
        if (t > bound) {
            found.emplace_back(IntegerSet(c), IntegerSet(d));
            return;
        }
        if (overlap[static_cast<std::size_t>(t)]) {
            add(c, rc, t);
            add(d, rd, t);
            if (position_ok(t)) dfs(t + 1, mirror_fixed);
            remove(d, rd);
            remove(c, rc);
            return;
        }
        // exactly one side; the first free choice is pinned to C so that
        // mirrored assignments are not reported twice
        add(c, rc, t);
        if (position_ok(t)) dfs(t + 1, true);
        remove(c, rc);
        if (mirror_fixed) {
            add(d, rd, t);
            if (position_ok(t)) dfs(t + 1, true);
            remove(d, rd);
        }
    }
};

} // namespace

std::vector<OverlapCandidate> overlap_partition_scan(Int bound, Int max_m, int jobs) {
    if (max_m < 2) throw std::invalid_argument("overlap_partition_scan: max_m must be >= 2");
    if (bound < 2 * max_m)
        throw std::invalid_argument("overlap_partition_scan: bound must be >= 2*max_m");
    if (jobs < 1) throw std::invalid_argument("overlap_partition_scan: jobs must be >= 1");

    std::vector<std::pair<Int, Int>> configs; // (m, r)
    for (Int m = 2; m <= max_m; ++m)
        for (Int r = 0; r < m; ++r) configs.emplace_back(m, r);

    std::vector<std::vector<OverlapCandidate>> per_config(configs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) return;
            const auto [m, r] = configs[i];
            std::vector<char> overlap(static_cast<std::size_t>(bound) + 1, 0);
            for (Int x = r; x <= bound; x += m) overlap[static_cast<std::size_t>(x)] = 1;
            OverlapScanner scanner(bound, overlap);
            scanner.dfs(0, false);
            for (auto& [c, d] : scanner.found)
                per_config[i].push_back({r, m, std::move(c), std::move(d)});
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<OverlapCandidate> out;
    for (auto& chunk : per_config)
        for (auto& cand : chunk) out.push_back(std::move(cand));
    return out;
}

} // namespace repsets
