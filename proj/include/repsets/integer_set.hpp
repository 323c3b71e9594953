#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace repsets {

using Int = std::int64_t;

/// Finite set of nonnegative integers, stored strictly increasing.
/// Immutable after construction; all free functions below return new sets.
class IntegerSet {
public:
    IntegerSet() = default;

    /// Sorts and deduplicates; rejects negative values.
    explicit IntegerSet(std::vector<Int> values);

    IntegerSet(std::initializer_list<Int> values)
        : IntegerSet(std::vector<Int>(values)) {}

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static IntegerSet interval(Int lo, Int hi);

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    bool contains(Int x) const;

    /// Both require a nonempty set.
    Int min_element() const;
    Int max_element() const;

    Int operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Int>& values() const { return elems_; }

    std::vector<Int>::const_iterator begin() const { return elems_.begin(); }
    std::vector<Int>::const_iterator end() const { return elems_.end(); }

    bool operator==(const IntegerSet&) const = default;

private:
    std::vector<Int> elems_;
};

/// {a + b : a in A, b in B}
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

/// {b + a : a in A}
IntegerSet translate(Int b, const IntegerSet& a);

/// Multiples of q in [0, bound]. q must be >= 1.
IntegerSet dilate_naturals(Int q, Int bound);

IntegerSet set_union(const IntegerSet& a, const IntegerSet& b);
IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b);

/// Comma-separated decimal rendering, e.g. "0,3,5,6". Empty set -> "".
std::string to_string(const IntegerSet& s);

/// Parses "0,3,5,6" (also accepts whitespace separation). Throws on
/// negative or malformed input.
IntegerSet parse_integer_set(const std::string& text);

} // namespace repsets
