#pragma once

#include "repsets/integer_set.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace repsets {

using Coeff = boost::multiprecision::cpp_int;

/// Exact integer-coefficient polynomial. Coefficient index = exponent;
/// trailing zeros are normalized away, so the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Coeff> coeffs);

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial one();
    /// c * z^exp
    static IntPolynomial monomial(Coeff c, int exp);
    /// Sum of z^a over a in A.
    static IntPolynomial from_set(const IntegerSet& a);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff coeff(int k) const;
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial&) const = default;

    /// p(z) -> p(z^2)
    IntPolynomial substitute_square() const;

    Coeff evaluate(const Coeff& x) const;
    Coeff at_one() const { return evaluate(1); }

    struct DivMod;
    /// Exact long division. The divisor's leading coefficient must be
    /// +1 or -1 (keeps everything in Z); otherwise invalid_argument.
    DivMod divmod(const IntPolynomial& divisor) const;
    bool divisible_by(const IntPolynomial& divisor) const;

    /// Sparse ascending-exponent rendering, e.g. "1 - z^1 - z^2 + z^3".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Coeff> coeffs_;
};

struct IntPolynomial::DivMod {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

} // namespace repsets
