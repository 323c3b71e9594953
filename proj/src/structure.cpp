#include "repsets/structure.hpp"

#include "repsets/genfun.hpp"
#include "repsets/rep_profile.hpp"

#include <algorithm>
#include <bit>

namespace repsets {

const char* to_string(PairClass c) {
    switch (c) {
        case PairClass::hilbert_pair: return "hilbert_pair";
        case PairClass::non_hilbert: return "non_hilbert";
        case PairClass::not_attempted: return "not_attempted";
    }
    return "?";
}

ConditionReport check_conditions(const IntegerSet& d) {
    if (d.empty() || !std::has_single_bit(d.size()))
        throw std::invalid_argument("check_conditions: |D| must be a power of two");
    if (d.min_element() < 1)
        throw std::invalid_argument("check_conditions: elements must be >= 1");
    const int n = std::countr_zero(d.size());
    auto at = [&d](std::size_t index1) { return d[index1 - 1]; }; // 1-based
    for (int k = 0; k < n; ++k) {
        const std::size_t base = std::size_t(1) << k;
        if (at(base + 1) < 4 * at(base))
            return {false, ConditionViolation{ConditionViolation::Kind::gap, k}};
    }
    // d_1 + d_2 + d_3 + d_5 + ... + d_{2^{k-1}+1}
    Int prefix = at(1) + (n >= 1 ? at(2) : 0);
    for (int k = 2; k <= n; ++k) {
        prefix += at((std::size_t(1) << (k - 1)) + 1);
        if (at(std::size_t(1) << k) > prefix)
            return {false, ConditionViolation{ConditionViolation::Kind::sum, k}};
    }
    return {true, std::nullopt};
}

Decomposition decompose(const IntegerSet& d) {
    const ConditionReport report = check_conditions(d);
    if (!report.ok)
        throw std::invalid_argument("decompose: gap/sum conditions do not hold");
    const int n = std::countr_zero(d.size());
    std::vector<Int> gens;
    gens.push_back(d[0]);
    if (n >= 1) gens.push_back(d[1]);
    for (int j = 1; j <= n - 1; ++j) gens.push_back(d[(std::size_t(1) << j)]); // d_{2^j + 1}
    CubeGenerators generators(std::move(gens));
    const CubeParts parts = cube_parts(generators);
    if (parts.odd != d) {
        // some element witnesses the symmetric difference
        for (std::size_t i = 0; i < std::max(parts.odd.size(), d.size()); ++i) {
            Int w;
            if (i >= parts.odd.size()) w = d[i];
            else if (i >= d.size()) w = parts.odd[i];
            else if (parts.odd[i] != d[i]) w = std::min(parts.odd[i], d[i]);
            else continue;
            throw hypothesis_error("decompose: D is not the odd part of the implied cube", w);
        }
    }
    return {std::move(generators), parts.even};
}

namespace detail {

namespace {

struct ProfileSolver {
    const std::vector<Int>& target;
    std::size_t size;
    Int max_element;
    std::size_t max_solutions;
    std::vector<Int> current;        // profile of `partial`
    std::vector<Int> partial;        // ascending
    std::vector<IntegerSet> found;

    bool done() const { return found.size() >= max_solutions; }

    Int target_at(Int n) const {
        return n < static_cast<Int>(target.size()) ? target[static_cast<std::size_t>(n)] : 0;
    }

    // Adds x, updating the pair-sum profile; returns false (after full
    // rollback of the profile, not the element) on any overshoot.
    bool push(Int x) {
        bool ok = true;
        for (Int c : partial) {
            const Int s = c + x;
            if (s >= static_cast<Int>(target.size()) ||
                ++current[static_cast<std::size_t>(s)] > target[static_cast<std::size_t>(s)]) {
                if (s < static_cast<Int>(target.size()))
                    --current[static_cast<std::size_t>(s)];
                ok = false;
                // roll back the increments already applied
                for (Int c2 : partial) {
                    if (c2 == c) break;
                    --current[static_cast<std::size_t>(c2 + x)];
                }
                break;
            }
        }
        if (ok) partial.push_back(x);
        return ok;
    }

    void pop() {
        const Int x = partial.back();
        partial.pop_back();
        for (Int c : partial) --current[static_cast<std::size_t>(c + x)];
    }

    std::optional<Int> first_deficit() const {
        for (std::size_t n = 0; n < target.size(); ++n)
            if (current[n] < target[n]) return static_cast<Int>(n);
        return std::nullopt;
    }

    void dfs() {
        if (done()) return;
        const std::optional<Int> deficit = first_deficit();
        if (partial.size() == size) {
            if (!deficit) found.emplace_back(partial);
            return;
        }
        if (!deficit) return; // further elements would only overshoot
        const Int n = *deficit;
        if (partial.empty()) {
            // the first support value must be the sum of the two smallest
            // elements; branch on the smaller one
            for (Int x = 1; 2 * x < n && !done(); ++x) {
                if (x > max_element) break;
                if (!push(x)) continue; // no pairs yet, cannot fail, kept for symmetry
                dfs();
                pop();
            }
            return;
        }
        // some existing element must pair with the next one to reach n
        const Int top = partial.back();
        for (std::size_t i = partial.size(); i-- > 0 && !done();) {
            const Int x = n - partial[i]; // descending c -> ascending x
            if (x <= top) continue;
            if (x > max_element) continue;
            if (!push(x)) continue;
            dfs();
            pop();
        }
    }
};

} // namespace

std::vector<IntegerSet> solve_profile(const std::vector<Int>& target, std::size_t size,
                                      Int max_element, bool anchor_zero,
                                      std::size_t max_solutions) {
    Int total = 0;
    for (Int v : target) total += v;
    const Int pairs_needed = static_cast<Int>(size) * (static_cast<Int>(size) - 1) / 2;
    if (total != pairs_needed) return {}; // mass mismatch: no candidate can fit
    ProfileSolver solver{target, size, max_element, max_solutions, // NOLINT
                         std::vector<Int>(target.size(), 0),
                         {},
                         {}};
    if (anchor_zero) {
        if (size == 0) return {};
        solver.partial.push_back(0);
    } else if (size == 0) {
        return {IntegerSet{}};
    } else if (size == 1) {
        std::vector<IntegerSet> singles;
        for (Int x = 1; x <= max_element && singles.size() < max_solutions; ++x)
            singles.push_back(IntegerSet{x});
        return singles;
    }
    solver.dfs();
    std::sort(solver.found.begin(), solver.found.end(),
              [](const IntegerSet& a, const IntegerSet& b) { return a.values() < b.values(); });
    solver.found.erase(std::unique(solver.found.begin(), solver.found.end()), solver.found.end());
    return solver.found;
}

} // namespace detail

std::vector<IntegerSet> solve_coinciding(const IntegerSet& d, std::size_t max_solutions,
                                         Int n_max) {
    if (d.empty()) throw std::invalid_argument("solve_coinciding: D must be nonempty");
    if (d.min_element() < 1) throw std::invalid_argument("solve_coinciding: min(D) must be >= 1");
    if (n_max < 2 * d.max_element())
        throw std::invalid_argument("solve_coinciding: n_max must be >= 2*max(D)");
    const RepProfile rd = rep_function(d, 2, RepVariant::strict, 2 * n_max);
    return detail::solve_profile(rd.counts, d.size(), n_max, /*anchor_zero=*/true,
                                 max_solutions);
}

Classification classify_pair(const IntegerSet& c, const IntegerSet& d) {
    if (c == d || c.empty() || !c.contains(0))
        throw std::invalid_argument("classify_pair: need 0 in C and C != D");
    if (!coincidence_criterion(c, d))
        throw std::invalid_argument("classify_pair: profiles do not coincide");
    if (c.size() > 16) return {PairClass::not_attempted, std::nullopt};
    if (c.size() != d.size() || !std::has_single_bit(c.size()))
        return {PairClass::non_hilbert, std::nullopt};
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(c.size())) + 1;
    std::vector<Int> pool;
    for (Int x : d)
        if (x >= 1) pool.push_back(x);
    if (pool.size() < k) return {PairClass::non_hilbert, std::nullopt};
    // walk index combinations in lexicographic order
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Int> gens;
        gens.reserve(k);
        for (std::size_t i : idx) gens.push_back(pool[i]);
        CubeGenerators candidate(std::move(gens));
        if (is_half_nondegenerate(candidate)) {
            const CubeParts parts = cube_parts(candidate);
            if (parts.even == c && parts.odd == d)
                return {PairClass::hilbert_pair, std::move(candidate)};
        }
        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + pool.size() - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return {PairClass::non_hilbert, std::nullopt};
        }
    }
}

SolverDiagnostics frontier_diagnostics(const IntegerSet& c1, const IntegerSet& c2n,
                                       const IntegerSet& d1, const IntegerSet& d2n) {
    Int window = 0;
    auto bump = [&window](Int v) { window = std::max(window, v); };
    if (!c1.empty() && !c2n.empty()) bump(c1.max_element() + c2n.max_element());
    if (!d1.empty() && !d2n.empty()) bump(d1.max_element() + d2n.max_element());
    if (!c2n.empty()) bump(2 * c2n.max_element());
    if (!d2n.empty()) bump(2 * d2n.max_element());

    const RepProfile cross_c = rep_sumset(c1, c2n, window);
    const RepProfile cross_d = rep_sumset(d1, d2n, window);
    const RepProfile inner_c = rep_function(c2n, 2, RepVariant::strict, window);
    const RepProfile inner_d = rep_function(d2n, 2, RepVariant::strict, window);

    SolverDiagnostics diag;
    for (Int n = 0; n <= window; ++n) {
        const Int cc = cross_c.at(n), cd = cross_d.at(n);
        if (!diag.p && cc > cd) diag.p = n;
        if (!diag.q && cc < cd) diag.q = n;
        const Int ic = inner_c.at(n), id = inner_d.at(n);
        if (!diag.t && ic > id) diag.t = n;
        if (!diag.s && ic < id) diag.s = n;
    }
    return diag;
}

} // namespace repsets
