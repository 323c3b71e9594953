#pragma once

#include "repsets/integer_set.hpp"
#include "repsets/polynomial.hpp"

#include <utility>

namespace repsets {

/// Exact factorization of a set-difference polynomial at the unit root:
/// (z - 1)^multiplicity * quotient reproduces it exactly and the
/// quotient does not vanish at 1.
struct MultiplicityCertificate {
    int multiplicity = 0;
    IntPolynomial quotient;
};

/// Eventually periodic pair description: finite exceptional parts F_C,
/// F_D inside [0, M*n0 - 1] plus the common residue classes T modulo M
/// from the n0-th period onward.
struct NathansonSpec {
    IntegerSet f_c;
    IntegerSet f_d;
    IntegerSet t;
    Int m = 1;
    Int n0 = 1;
    int h = 2;

    /// Throws invalid_argument when the containment or positivity
    /// constraints fail.
    void validate() const;
};

/// True iff C(z)^2 - D(z)^2 = C(z^2) - D(z^2) holds exactly, which is
/// equivalent to the strict pair profiles of C and D agreeing for all n.
bool coincidence_criterion(const IntegerSet& c, const IntegerSet& d);

/// Certificate for the exact power of (z - 1) dividing C(z) - D(z).
/// Requires C != D.
MultiplicityCertificate unit_root_multiplicity(const IntegerSet& c, const IntegerSet& d);

/// Materializes the spec's pair of sets, truncated to [0, bound].
std::pair<IntegerSet, IntegerSet> nathanson_build(const NathansonSpec& spec, Int bound);

/// True iff (1 - z^M)^(h-1) exactly divides (F_C(z) - F_D(z)) * T(z)^(h-1).
bool divisibility_check(const NathansonSpec& spec);

} // namespace repsets
