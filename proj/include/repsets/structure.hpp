#pragma once

#include "repsets/cube.hpp"
#include "repsets/integer_set.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace repsets {

/// Which of the two condition families failed, and at which index k.
struct ConditionViolation {
    enum class Kind { gap, sum };
    Kind kind = Kind::gap;
    int k = 0;
};

struct ConditionReport {
    bool ok = false;
    std::optional<ConditionViolation> violation;
};

/// Checks the gap conditions d_{2^k+1} >= 4 d_{2^k} (k = 0..n-1) and the
/// sum conditions d_{2^k} <= d_1 + d_2 + d_3 + d_5 + ... + d_{2^{k-1}+1}
/// (k = 2..n) on a set of size 2^n with min >= 1.
ConditionReport check_conditions(const IntegerSet& d);

/// Thrown by decompose when the conditions hold but D is not the odd
/// part of the implied cube; carries one element of the symmetric
/// difference as witness.
class hypothesis_error : public std::runtime_error {
public:
    hypothesis_error(const std::string& what, Int witness)
        : std::runtime_error(what), witness_(witness) {}
    Int witness() const { return witness_; }

private:
    Int witness_;
};

struct Decomposition {
    CubeGenerators generators; // d_1, d_2, d_3, d_5, ..., d_{2^{n-1}+1}
    IntegerSet even_part;      // the recovered C
};

/// Extracts the distinguished generator subsequence of D and returns it
/// with C = H0. Verifies H1(generators) == D exactly; throws
/// hypothesis_error with a witness element otherwise.
Decomposition decompose(const IntegerSet& d);

/// All C with 0 in C, |C| = |D|, max(C) <= n_max and strict pair profile
/// equal to D's on [0, n_max], by forced-extension backtracking.
/// Results are lexicographically sorted and truncated at max_solutions.
std::vector<IntegerSet> solve_coinciding(const IntegerSet& d, std::size_t max_solutions,
                                         Int n_max);

enum class PairClass { hilbert_pair, non_hilbert, not_attempted };

struct Classification {
    PairClass kind = PairClass::non_hilbert;
    std::optional<CubeGenerators> generators; // set for hilbert_pair
};

const char* to_string(PairClass c);

/// For a verified coinciding pair (0 in C, C != D, profiles equal),
/// searches generator subsets of D for a half non-degenerate cube with
/// C = H0 and D = H1. Sizes above 16 are not attempted.
Classification classify_pair(const IntegerSet& c, const IntegerSet& d);

/// First-discrepancy positions between the frontier sumset profiles of
/// the proof split (absent = the profiles never disagree in that
/// direction):
///   p: R_{C1+C2n} > R_{D1+D2n}     q: R_{C1+C2n} < R_{D1+D2n}
///   t: R_{C2n}    > R_{D2n}        s: R_{C2n}    < R_{D2n}
/// where R_{X} on the second row is the strict pair profile of X.
struct SolverDiagnostics {
    std::optional<Int> p, q, t, s;
};

SolverDiagnostics frontier_diagnostics(const IntegerSet& c1, const IntegerSet& c2n,
                                       const IntegerSet& d1, const IntegerSet& d2n);

namespace detail {

/// Shared forced-extension core: all sets S with the given size, all
/// elements in [0, max_element], anchored at 0 when anchor_zero (else
/// min(S) >= 1), whose strict pair profile equals `target` wherever
/// both are defined (target is implicitly zero beyond its last entry).
std::vector<IntegerSet> solve_profile(const std::vector<Int>& target, std::size_t size,
                                      Int max_element, bool anchor_zero,
                                      std::size_t max_solutions);

} // namespace detail

} // namespace repsets
