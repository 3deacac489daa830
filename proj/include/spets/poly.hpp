#pragma once

#include <string>
#include <vector>

namespace spets {

// Polynomial in one variable X with exact 64-bit integer coefficients and
// non-negative exponents.  All operations are exact; overflow and inexact
// division throw rather than silently producing a wrong value.
class Poly {
public:
    Poly() = default;                              // the zero polynomial
    explicit Poly(std::vector<long long> coeffs);  // coeffs[k] = coefficient of X^k

    static Poly zero();
    static Poly one();
    static Poly constant(long long c);
    static Poly monomial(long long coeff, long long exponent);
    static Poly x_power_minus_one(long long k);  // X^k - 1, k >= 1

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const;     // degree; -1 for the zero polynomial
    long long valuation() const;  // smallest exponent with nonzero coefficient; throws on zero
    long long coeff(long long k) const;
    const std::vector<long long>& coeffs() const { return coeffs_; }
    long long leading_coeff() const;
    long long value_at_one() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    bool operator==(const Poly& other) const = default;

    // Quotient of an exact division; throws std::domain_error if the divisor
    // is zero or the remainder is nonzero.
    Poly divided_exactly_by(const Poly& divisor) const;

    // Divides every coefficient by s; throws std::domain_error unless every
    // coefficient is a multiple of s.
    Poly divided_exactly_by_scalar(long long s) const;

    // Substitutes X -> X^k (k >= 1).
    Poly composed_with_x_power(long long k) const;

    // Ascending-exponent rendering: "0", "1 + X", "X + X^3", "2X^2 - X^5".
    std::string str() const;

private:
    std::vector<long long> coeffs_;
    void trim();
};

}  // namespace spets
