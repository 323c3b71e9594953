#include "repsets/genfun.hpp"

#include <algorithm>

namespace repsets {

void NathansonSpec::validate() const {
    if (m < 1) throw std::invalid_argument("NathansonSpec: M must be positive");
    if (n0 < 1) throw std::invalid_argument("NathansonSpec: n0 must be positive");
    if (h < 2) throw std::invalid_argument("NathansonSpec: arity must be >= 2");
    const Int fin_hi = m * n0 - 1;
    for (const IntegerSet* f : {&f_c, &f_d})
        if (!f->empty() && f->max_element() > fin_hi)
            throw std::invalid_argument("NathansonSpec: F_C u F_D must lie in [0, M*n0 - 1]");
    if (!t.empty() && t.max_element() > m - 1)
        throw std::invalid_argument("NathansonSpec: T must lie in [0, M - 1]");
}

bool coincidence_criterion(const IntegerSet& c, const IntegerSet& d) {
    const IntPolynomial pc = IntPolynomial::from_set(c);
    const IntPolynomial pd = IntPolynomial::from_set(d);
    return pc * pc - pd * pd == pc.substitute_square() - pd.substitute_square();
}

MultiplicityCertificate unit_root_multiplicity(const IntegerSet& c, const IntegerSet& d) {
    if (c == d)
        throw std::invalid_argument("unit_root_multiplicity: sets must differ");
    IntPolynomial diff = IntPolynomial::from_set(c) - IntPolynomial::from_set(d);
    const IntPolynomial z_minus_1({Coeff(-1), Coeff(1)});
    int multiplicity = 0;
    while (diff.at_one() == 0) {
        auto [quotient, remainder] = diff.divmod(z_minus_1);
        diff = std::move(quotient);
        ++multiplicity;
    }
    return {multiplicity, std::move(diff)};
}

std::pair<IntegerSet, IntegerSet> nathanson_build(const NathansonSpec& spec, Int bound) {
    spec.validate();
    std::vector<Int> periodic;
    for (Int l = spec.n0; l * spec.m <= bound; ++l)
        for (Int t : spec.t)
            if (l * spec.m + t <= bound) periodic.push_back(l * spec.m + t);
    auto clip = [bound](const IntegerSet& s) {
        std::vector<Int> v;
        for (Int x : s) {
            if (x > bound) break;
            v.push_back(x);
        }
        return v;
    };
    std::vector<Int> c = clip(spec.f_c), d = clip(spec.f_d);
    c.insert(c.end(), periodic.begin(), periodic.end());
    d.insert(d.end(), periodic.begin(), periodic.end());
    return {IntegerSet(std::move(c)), IntegerSet(std::move(d))};
}

bool divisibility_check(const NathansonSpec& spec) {
    spec.validate();
    const IntPolynomial num =
        IntPolynomial::from_set(spec.f_c) - IntPolynomial::from_set(spec.f_d);
    if (num.is_zero()) return true;
    IntPolynomial t_pow = IntPolynomial::one();
    IntPolynomial den = IntPolynomial::one();
    const IntPolynomial t_poly = IntPolynomial::from_set(spec.t);
    IntPolynomial cyclotomic_block =
        IntPolynomial::one() - IntPolynomial::monomial(1, static_cast<int>(spec.m));
    for (int i = 0; i < spec.h - 1; ++i) {
        t_pow = t_pow * t_poly;
        den = den * cyclotomic_block;
    }
    return (num * t_pow).divisible_by(den);
}

} // namespace repsets
