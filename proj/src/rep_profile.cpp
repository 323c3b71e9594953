#include "repsets/rep_profile.hpp"

#include <algorithm>

namespace repsets {

const char* to_string(RepVariant v) {
    switch (v) {
        case RepVariant::ordered: return "ordered";
        case RepVariant::non_decreasing: return "non-decreasing";
        case RepVariant::strict: return "strict";
    }
    return "?";
}

std::optional<RepVariant> parse_variant(const std::string& name) {
    if (name == "ordered") return RepVariant::ordered;
    if (name == "non-decreasing" || name == "nondecreasing") return RepVariant::non_decreasing;
    if (name == "strict") return RepVariant::strict;
    return std::nullopt;
}

namespace {

std::vector<Int> elements_within(const IntegerSet& a, Int n_max) {
    std::vector<Int> v;
    for (Int x : a) {
        if (x > n_max) break;
        v.push_back(x);
    }
    return v;
}

void strict_pairs(const std::vector<Int>& a, std::vector<Int>& counts, Int n_max) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            Int s = a[i] + a[j];
            if (s > n_max) break; // a sorted: later j only larger
            ++counts[static_cast<std::size_t>(s)];
        }
    }
}

// Number of k-term sums == n, tabulated by dynamic programming.
// ordered:       dp layer k = previous layer convolved with the set
// non_decreasing: element loop outside, ascending updates (reuse allowed)
// strict:        element loop outside, descending updates (0/1 per element)
std::vector<Int> dp_counts(const std::vector<Int>& a, int h, RepVariant variant, Int n_max) {
    const std::size_t w = static_cast<std::size_t>(n_max) + 1;
    if (variant == RepVariant::ordered) {
        std::vector<Int> layer(w, 0);
        for (Int x : a) ++layer[static_cast<std::size_t>(x)];
        for (int k = 2; k <= h; ++k) {
            std::vector<Int> next(w, 0);
            for (Int x : a)
                for (std::size_t n = static_cast<std::size_t>(x); n < w; ++n)
                    if (layer[n - static_cast<std::size_t>(x)] != 0)
                        next[n] += layer[n - static_cast<std::size_t>(x)];
            layer.swap(next);
        }
        return layer;
    }
    // dp[k][n], flattened; dp[0][0] = 1
    std::vector<std::vector<Int>> dp(static_cast<std::size_t>(h) + 1, std::vector<Int>(w, 0));
    dp[0][0] = 1;
    for (Int x : a) {
        const std::size_t xs = static_cast<std::size_t>(x);
        if (variant == RepVariant::non_decreasing) {
            for (int k = 1; k <= h; ++k)
                for (std::size_t n = xs; n < w; ++n)
                    dp[static_cast<std::size_t>(k)][n] += dp[static_cast<std::size_t>(k) - 1][n - xs];
        } else { // strict
            for (int k = h; k >= 1; --k)
                for (std::size_t n = w; n-- > xs;)
                    dp[static_cast<std::size_t>(k)][n] += dp[static_cast<std::size_t>(k) - 1][n - xs];
        }
    }
    return dp[static_cast<std::size_t>(h)];
}

} // namespace

RepProfile rep_function(const IntegerSet& a, int h, RepVariant variant, Int n_max) {
    if (h < 2) throw std::invalid_argument("rep_function: arity must be >= 2");
    if (n_max < 0) throw std::invalid_argument("rep_function: negative bound");
    RepProfile profile{h, variant, n_max, std::vector<Int>(static_cast<std::size_t>(n_max) + 1, 0)};
    const std::vector<Int> elems = elements_within(a, n_max);
    if (elems.empty()) return profile;
    if (h == 2 && variant == RepVariant::strict) {
        strict_pairs(elems, profile.counts, n_max);
        return profile;
    }
    profile.counts = dp_counts(elems, h, variant, n_max);
    return profile;
}

RepProfile rep_sumset(const IntegerSet& a, const IntegerSet& b, Int n_max) {
    if (n_max < 0) throw std::invalid_argument("rep_sumset: negative bound");
    RepProfile profile{2, RepVariant::ordered, n_max,
                       std::vector<Int>(static_cast<std::size_t>(n_max) + 1, 0)};
    for (Int x : a) {
        if (x > n_max) break;
        for (Int y : b) {
            if (x + y > n_max) break;
            ++profile.counts[static_cast<std::size_t>(x + y)];
        }
    }
    return profile;
}

std::optional<Int> first_mismatch(const IntegerSet& c, const IntegerSet& d, Int n_max) {
    RepProfile rc = rep_function(c, 2, RepVariant::strict, n_max);
    RepProfile rd = rep_function(d, 2, RepVariant::strict, n_max);
    for (Int n = 0; n <= n_max; ++n)
        if (rc.counts[static_cast<std::size_t>(n)] != rd.counts[static_cast<std::size_t>(n)])
            return n;
    return std::nullopt;
}

std::optional<Int> eventual_coincidence_scan(const IntegerSet& c, const IntegerSet& d,
                                             RepVariant variant, Int n_max) {
    // A sum n <= n_max only involves elements <= n, so the profiles of
    // the truncations are exact on the whole window.
    const Int window_hi = n_max;
    if (window_hi < 0) return 0;
    RepProfile rc = rep_function(c, 2, variant, window_hi);
    RepProfile rd = rep_function(d, 2, variant, window_hi);
    Int threshold = 0;
    for (Int n = window_hi; n >= 0; --n) {
        if (rc.counts[static_cast<std::size_t>(n)] != rd.counts[static_cast<std::size_t>(n)]) {
            if (n == window_hi) return std::nullopt; // still disagreeing at the top
            threshold = n + 1;
            break;
        }
    }
    return threshold;
}

} // namespace repsets
