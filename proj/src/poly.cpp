#include "spets/poly.hpp"

#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

Poly::Poly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::zero() { return Poly(); }

Poly Poly::one() { return constant(1); }

Poly Poly::constant(long long c) { return Poly(std::vector<long long>{c}); }

Poly Poly::monomial(long long coeff, long long exponent) {
    if (exponent < 0) throw std::domain_error("monomial exponent must be non-negative");
    std::vector<long long> v(static_cast<size_t>(exponent) + 1, 0);
    v.back() = coeff;
    return Poly(std::move(v));
}

Poly Poly::x_power_minus_one(long long k) {
    if (k < 1) throw std::domain_error("X^k - 1 requires k >= 1");
    std::vector<long long> v(static_cast<size_t>(k) + 1, 0);
    v.front() = -1;
    v.back() = 1;
    return Poly(std::move(v));
}

long long Poly::degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

long long Poly::valuation() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<long long>(k);
    throw std::domain_error("valuation of the zero polynomial");
}

long long Poly::coeff(long long k) const {
    if (k < 0 || k >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

long long Poly::leading_coeff() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

long long Poly::value_at_one() const {
    long long s = 0;
    for (long long c : coeffs_) s = checked_add(s, c);
    return s;
}

Poly Poly::operator+(const Poly& other) const {
    Poly r = *this;
    r += other;
    return r;
}

Poly Poly::operator-(const Poly& other) const {
    Poly r = *this;
    r -= other;
    return r;
}

Poly& Poly::operator+=(const Poly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], -other.coeffs_[k]);
    trim();
    return *this;
}

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) return Poly();
    std::vector<long long> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) {
    *this = *this * other;
    return *this;
}

Poly Poly::divided_exactly_by(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return Poly();
    if (degree() < divisor.degree())
        throw std::domain_error("inexact polynomial division (degree too small)");
    std::vector<long long> rem = coeffs_;
    std::vector<long long> quot(coeffs_.size() - divisor.coeffs_.size() + 1, 0);
    long long lead = divisor.leading_coeff();
    for (long long k = static_cast<long long>(quot.size()) - 1; k >= 0; --k) {
        long long top = rem[static_cast<size_t>(k) + divisor.coeffs_.size() - 1];
        if (top % lead != 0)
            throw std::domain_error("inexact polynomial division (leading coefficient)");
        long long q = top / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[static_cast<size_t>(k) + j] =
                checked_add(rem[static_cast<size_t>(k) + j], -checked_mul(q, divisor.coeffs_[j]));
    }
    for (long long c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division (nonzero remainder)");
    return Poly(std::move(quot));
}

Poly Poly::divided_exactly_by_scalar(long long s) const {
    if (s == 0) throw std::domain_error("division by zero scalar");
    std::vector<long long> out = coeffs_;
    for (long long& c : out) {
        if (c % s != 0) throw std::domain_error("inexact scalar division of polynomial");
        c /= s;
    }
    return Poly(std::move(out));
}

Poly Poly::composed_with_x_power(long long k) const {
    if (k < 1) throw std::domain_error("substitution X -> X^k requires k >= 1");
    if (is_zero()) return Poly();
    std::vector<long long> out((coeffs_.size() - 1) * static_cast<size_t>(k) + 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<size_t>(k)] = coeffs_[i];
    return Poly(std::move(out));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        long long c = coeffs_[k];
        if (c == 0) continue;
        long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += "X";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace spets
