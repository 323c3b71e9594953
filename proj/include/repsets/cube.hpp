#pragma once

#include "repsets/integer_set.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace repsets {

/// Strictly increasing positive generators h1 < h2 < ... of a Hilbert
/// cube (the set of all subset sums).
class CubeGenerators {
public:
    CubeGenerators() = default;
    explicit CubeGenerators(std::vector<Int> generators);

    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    Int operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Int>& values() const { return gens_; }

    std::vector<Int>::const_iterator begin() const { return gens_.begin(); }
    std::vector<Int>::const_iterator end() const { return gens_.end(); }

    bool operator==(const CubeGenerators&) const = default;

private:
    std::vector<Int> gens_;
};

struct CubeParts {
    IntegerSet even; // subset sums with an even number of terms
    IntegerSet odd;  // subset sums with an odd number of terms
};

/// Even/odd parts of the cube, optionally intersected with [0, bound].
/// Without a bound the generator count is capped at 25 (full 2^k
/// enumeration); with a bound larger generator lists are handled by a
/// parity subset-sum sweep.
CubeParts cube_parts(const CubeGenerators& g, std::optional<Int> bound = std::nullopt);

/// Two distinct generator subsets of equal parity with the same sum,
/// reported as sorted lists of generator values.
struct CollisionWitness {
    std::vector<Int> first;
    std::vector<Int> second;
    Int sum = 0;
};

/// nullopt when no two equal-parity coefficient vectors share a sum
/// (the cube is half non-degenerate); otherwise one colliding pair.
std::optional<CollisionWitness> half_degeneracy_witness(const CubeGenerators& g);

bool is_half_nondegenerate(const CubeGenerators& g);

/// For a half non-degenerate cube, checks that the even and odd parts
/// have identical strict pair profiles on [0, n_max]. Degenerate input
/// is rejected with invalid_argument.
bool verify_half_coincidence(const CubeGenerators& g, Int n_max);

/// Checks the two exact polynomial identities tying the cube's signed
/// and unsigned subset-sum polynomials to the products over generators:
///   prod (1 - z^h_i) = E(z) - O(z)   and   prod (1 + z^h_i) = E(z) + O(z)
/// where E and O count even/odd subset sums with multiplicity.
bool product_identities(const CubeGenerators& g);

/// rule(k) is the k-th generator (0-based). Generators are consumed
/// while <= bound; output that is not strictly increasing positive is
/// rejected with invalid_argument.
using GeneratorRule = std::function<Int(std::size_t)>;
CubeGenerators truncate_rule(const GeneratorRule& rule, Int bound);

/// 1, 2, 4, 8, ...
GeneratorRule pow2_rule();

} // namespace repsets
