#pragma once

#include "repsets/integer_set.hpp"

#include <optional>
#include <vector>

namespace repsets {

/// Tuple-ordering constraint for an h-fold representation count.
///   ordered:        all h-tuples
///   non_decreasing: a_1 <= a_2 <= ... <= a_h
///   strict:         a_1 <  a_2 <  ... <  a_h
enum class RepVariant { ordered, non_decreasing, strict };

const char* to_string(RepVariant v);
std::optional<RepVariant> parse_variant(const std::string& name);

/// Dense table of representation counts on [0, n_max].
struct RepProfile {
    int h = 2;
    RepVariant variant = RepVariant::strict;
    Int n_max = 0;
    std::vector<Int> counts; // counts[n] for n in [0, n_max]

    Int at(Int n) const { return (n >= 0 && n <= n_max) ? counts[static_cast<std::size_t>(n)] : 0; }
    bool operator==(const RepProfile&) const = default;
};

/// Number of h-term representations of each n <= n_max from A under the
/// variant's ordering constraint. h must be >= 2.
RepProfile rep_function(const IntegerSet& a, int h, RepVariant variant, Int n_max);

/// counts[n] = |{(a,b) : a in A, b in B, a+b = n}| for n <= n_max.
RepProfile rep_sumset(const IntegerSet& a, const IntegerSet& b, Int n_max);

/// Smallest n <= n_max where the strict pair profiles of C and D differ,
/// or nullopt if they agree on the whole window.
std::optional<Int> first_mismatch(const IntegerSet& c, const IntegerSet& d, Int n_max);

/// Smallest n0 such that the h=2 profiles of C and D agree on
/// [n0, n_max], or nullopt if they still differ at n_max itself. Sums
/// n <= n_max only involve elements <= n, so truncations valid up to
/// n_max give exact profiles on the whole window.
std::optional<Int> eventual_coincidence_scan(const IntegerSet& c, const IntegerSet& d,
                                             RepVariant variant, Int n_max);

} // namespace repsets
