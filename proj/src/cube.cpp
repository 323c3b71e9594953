#include "repsets/cube.hpp"

#include "repsets/polynomial.hpp"
#include "repsets/rep_profile.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace repsets {

namespace {

constexpr std::size_t kEnumerationCap = 25; // 2^k subset walk beyond this is refused

std::vector<Int> mask_to_values(const std::vector<Int>& gens, std::uint32_t mask) {
    std::vector<Int> v;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask >> i & 1u) v.push_back(gens[i]);
    return v;
}

} // namespace

CubeGenerators::CubeGenerators(std::vector<Int> generators) : gens_(std::move(generators)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i] < 1)
            throw std::invalid_argument("CubeGenerators: generators must be positive");
        if (i > 0 && gens_[i] <= gens_[i - 1])
            throw std::invalid_argument("CubeGenerators: generators must be strictly increasing");
    }
}

CubeParts cube_parts(const CubeGenerators& g, std::optional<Int> bound) {
    std::vector<Int> gens;
    for (Int h : g) {
        if (bound && h > *bound) continue; // cannot occur in any sum <= bound
        gens.push_back(h);
    }
    if (gens.size() <= kEnumerationCap) {
        // Gray-code walk: one generator toggled per step.
        std::vector<Int> even, odd;
        even.push_back(0);
        Int sum = 0;
        int parity = 0;
        const std::uint64_t total = std::uint64_t(1) << gens.size();
        for (std::uint64_t i = 1; i < total; ++i) {
            const int bit = std::countr_zero(i);
            const std::uint64_t gray = i ^ (i >> 1);
            sum += (gray >> bit & 1u) ? gens[static_cast<std::size_t>(bit)]
                                      : -gens[static_cast<std::size_t>(bit)];
            parity ^= 1;
            if (bound && sum > *bound) continue;
            (parity ? odd : even).push_back(sum);
        }
        return {IntegerSet(std::move(even)), IntegerSet(std::move(odd))};
    }
    if (!bound)
        throw std::invalid_argument("cube_parts: bound required beyond 25 generators");
    // Parity-split subset-sum sweep over [0, bound].
    const std::size_t width = static_cast<std::size_t>(*bound) + 1;
    std::vector<char> even(width, 0), odd(width, 0);
    even[0] = 1;
    for (Int h : gens) {
        std::vector<char> ne = even, no = odd;
        for (std::size_t s = width; s-- > static_cast<std::size_t>(h);) {
            if (odd[s - static_cast<std::size_t>(h)]) ne[s] = 1;
            if (even[s - static_cast<std::size_t>(h)]) no[s] = 1;
        }
        even.swap(ne);
        odd.swap(no);
    }
    std::vector<Int> e, o;
    for (std::size_t s = 0; s < width; ++s) {
        if (even[s]) e.push_back(static_cast<Int>(s));
        if (odd[s]) o.push_back(static_cast<Int>(s));
    }
    return {IntegerSet(std::move(e)), IntegerSet(std::move(o))};
}

std::optional<CollisionWitness> half_degeneracy_witness(const CubeGenerators& g) {
    if (g.size() > kEnumerationCap)
        throw std::invalid_argument("half_degeneracy_witness: too many generators to enumerate");
    const std::vector<Int>& gens = g.values();
    // sum -> first subset mask seen, per parity
    std::unordered_map<Int, std::array<std::optional<std::uint32_t>, 2>> seen;
    seen.reserve(std::size_t(1) << gens.size());
    Int sum = 0;
    int parity = 0;
    std::uint32_t mask = 0;
    const std::uint64_t total = std::uint64_t(1) << gens.size();
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i) {
            const int bit = std::countr_zero(i);
            mask = static_cast<std::uint32_t>(i ^ (i >> 1));
            sum += (mask >> bit & 1u) ? gens[static_cast<std::size_t>(bit)]
                                      : -gens[static_cast<std::size_t>(bit)];
            parity ^= 1;
        }
        auto& slot = seen[sum][static_cast<std::size_t>(parity)];
        if (slot) {
            return CollisionWitness{mask_to_values(gens, *slot), mask_to_values(gens, mask), sum};
        }
        slot = mask;
    }
    return std::nullopt;
}

bool is_half_nondegenerate(const CubeGenerators& g) {
    return !half_degeneracy_witness(g).has_value();
}

bool verify_half_coincidence(const CubeGenerators& g, Int n_max) {
    if (!is_half_nondegenerate(g))
        throw std::invalid_argument("verify_half_coincidence: cube is not half non-degenerate");
    const CubeParts parts = cube_parts(g, n_max);
    return !first_mismatch(parts.even, parts.odd, n_max).has_value();
}

bool product_identities(const CubeGenerators& g) {
    if (g.size() > kEnumerationCap)
        throw std::invalid_argument("product_identities: too many generators to enumerate");
    // Subset-sum polynomials with multiplicity, split by parity.
    Int top = 0;
    for (Int h : g) top += h;
    std::vector<Coeff> even(static_cast<std::size_t>(top) + 1, Coeff(0));
    std::vector<Coeff> odd(static_cast<std::size_t>(top) + 1, Coeff(0));
    const std::vector<Int>& gens = g.values();
    Int sum = 0;
    int parity = 0;
    const std::uint64_t total = std::uint64_t(1) << gens.size();
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i) {
            const int bit = std::countr_zero(i);
            const std::uint64_t gray = i ^ (i >> 1);
            sum += (gray >> bit & 1u) ? gens[static_cast<std::size_t>(bit)]
                                      : -gens[static_cast<std::size_t>(bit)];
            parity ^= 1;
        }
        (parity ? odd : even)[static_cast<std::size_t>(sum)] += 1;
    }
    const IntPolynomial e{std::vector<Coeff>(even)};
    const IntPolynomial o{std::vector<Coeff>(odd)};
    IntPolynomial prod_minus = IntPolynomial::one();
    IntPolynomial prod_plus = IntPolynomial::one();
    for (Int h : g) {
        const IntPolynomial zh = IntPolynomial::monomial(1, static_cast<int>(h));
        prod_minus = prod_minus * (IntPolynomial::one() - zh);
        prod_plus = prod_plus * (IntPolynomial::one() + zh);
    }
    return prod_minus == e - o && prod_plus == e + o;
}

CubeGenerators truncate_rule(const GeneratorRule& rule, Int bound) {
    std::vector<Int> gens;
    Int prev = 0;
    for (std::size_t k = 0;; ++k) {
        const Int value = rule(k);
        if (value <= prev)
            throw std::invalid_argument("truncate_rule: rule output not strictly increasing");
        if (value > bound) break;
        gens.push_back(value);
        prev = value;
    }
    return CubeGenerators(std::move(gens));
}

GeneratorRule pow2_rule() {
    return [](std::size_t k) { return Int(1) << k; };
}

} // namespace repsets
