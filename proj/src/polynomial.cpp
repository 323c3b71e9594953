#include "repsets/polynomial.hpp"

#include <sstream>

namespace repsets {

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({Coeff(1)}); }

IntPolynomial IntPolynomial::monomial(Coeff c, int exp) {
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    if (c == 0) return zero();
    std::vector<Coeff> v(static_cast<std::size_t>(exp) + 1, Coeff(0));
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_set(const IntegerSet& a) {
    if (a.empty()) return zero();
    std::vector<Coeff> v(static_cast<std::size_t>(a.max_element()) + 1, Coeff(0));
    for (Int x : a) v[static_cast<std::size_t>(x)] = 1;
    return IntPolynomial(std::move(v));
}

Coeff IntPolynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Coeff> v(std::max(coeffs_.size(), o.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Coeff> v(std::max(coeffs_.size(), o.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Coeff> v(coeffs_);
    for (Coeff& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Coeff> v(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::substitute_square() const {
    if (is_zero()) return zero();
    std::vector<Coeff> v(2 * coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

Coeff IntPolynomial::evaluate(const Coeff& x) const {
    Coeff acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

IntPolynomial::DivMod IntPolynomial::divmod(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    const Coeff& lead = divisor.coeffs_.back();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("divmod: divisor leading coefficient must be +-1");
    std::vector<Coeff> rem(coeffs_);
    const int dd = divisor.degree();
    if (degree() < dd) return {zero(), *this};
    std::vector<Coeff> quo(coeffs_.size() - divisor.coeffs_.size() + 1, Coeff(0));
    for (std::size_t i = rem.size(); i-- > divisor.coeffs_.size() - 1;) {
        if (rem[i] == 0) continue;
        const std::size_t shift = i - (divisor.coeffs_.size() - 1);
        Coeff factor = rem[i] / lead; // exact: lead is a unit
        quo[shift] = factor;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[shift + j] -= factor * divisor.coeffs_[j];
    }
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
    if (is_zero()) return true;
    if (divisor.is_zero()) return false;
    return divmod(divisor).remainder.is_zero();
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Coeff& c = coeffs_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Coeff mag = neg ? Coeff(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << " ";
            out << "z^" << i;
        }
    }
    return out.str();
}

} // namespace repsets
