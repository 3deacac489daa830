#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace spets {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Coefficients (ascending) of the m-th cyclotomic polynomial.
std::vector<long long> cyclotomic_polynomial(long long m);

// Euler totient.
long long totient(long long m);

// Smallest prime factor; 1 for m = 1.
long long smallest_prime_factor(long long m);

// true iff m = p^a for a prime p and a >= 1.
bool is_prime_power(long long m);

// An element of the cyclotomic field Q(zeta_m): phi(m) rational coordinates
// in the power basis 1, zeta, ..., zeta^{phi(m)-1}, canonically reduced
// modulo the m-th cyclotomic polynomial. The power basis is an integral
// basis, so integrality is visible on the coordinates.
class CycNum {
public:
    CycNum() = default;  // zero with conductor 1

    static CycNum zero(long long conductor);
    static CycNum one(long long conductor);
    static CycNum from_rational(const Rational& r, long long conductor);
    static CycNum zeta_power(long long exponent, long long conductor);  // zeta^exponent
    // From ascending power-basis coordinates (length at most phi(conductor)).
    static CycNum from_coeffs(std::vector<Rational> coeffs, long long conductor);

    long long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integral() const;  // lies in Z[zeta]
    bool is_rational() const;
    Rational rational_value() const;  // throws std::domain_error unless rational

    CycNum conjugated() const;  // zeta -> zeta^{-1}
    CycNum inverse() const;     // throws std::domain_error on zero

    // Same value viewed in Q(zeta_M); requires conductor() | M.
    CycNum embedded(long long target_conductor) const;

    // Mixed-conductor operands are first embedded into the lcm conductor.
    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    bool operator==(const CycNum& o) const;

    std::string str() const;  // "1/2 - z^2" with z the root of unity

private:
    CycNum(long long conductor, std::vector<Rational> reduced);

    long long conductor_ = 1;
    std::vector<Rational> coeffs_ = {Rational(0)};
};

// Image of an integral element under the ring map zeta -> 1 into Z/p,
// given as a residue in [0, p). Requires is_integral(). For conductor p^a
// the kernel of this map is exactly the ideal (1 - zeta), which is how
// (1 - zeta)-divisibility is decided.
long long residue_at_one_mod(const CycNum& x, long long p);

}  // namespace spets
