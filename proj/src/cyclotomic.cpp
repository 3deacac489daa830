#include "spets/cyclotomic.hpp"

#include <numeric>
#include <map>
#include <sstream>
#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

namespace {

// Exact division of integer polynomials (ascending coefficients) by a monic
// divisor; throws if the remainder is nonzero.
std::vector<long long> divide_monic_exactly(std::vector<long long> num,
                                            const std::vector<long long>& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("divisor must be monic");
    if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (size_t k = quot.size(); k-- > 0;) {
        long long c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < den.size(); ++i)
            num[k + i] = checked_add(num[k + i], checked_mul(-c, den[i]));
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(long long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
    // X^m - 1 divided by the product of the cyclotomic polynomials of the
    // proper divisors of m.
    std::vector<long long> num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    std::vector<long long> den = {1};
    for (long long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<long long> phi_d = cyclotomic_polynomial(d);
        std::vector<long long> prod(den.size() + phi_d.size() - 1, 0);
        for (size_t i = 0; i < den.size(); ++i)
            for (size_t j = 0; j < phi_d.size(); ++j)
                prod[i + j] = checked_add(prod[i + j], checked_mul(den[i], phi_d[j]));
        den = std::move(prod);
    }
    return divide_monic_exactly(std::move(num), den);
}

long long totient(long long m) {
    if (m < 1) throw std::invalid_argument("totient: m must be >= 1");
    long long result = m;
    long long rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        result -= result / p;
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

long long smallest_prime_factor(long long m) {
    if (m < 1) throw std::invalid_argument("smallest_prime_factor: m must be >= 1");
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) return p;
    return m == 1 ? 1 : m;
}

bool is_prime_power(long long m) {
    if (m < 2) return false;
    long long p = smallest_prime_factor(m);
    while (m % p == 0) m /= p;
    return m == 1;
}

CycNum::CycNum(long long conductor, std::vector<Rational> reduced)
    : conductor_(conductor), coeffs_(std::move(reduced)) {}

CycNum CycNum::zero(long long conductor) {
    if (conductor < 1) throw std::invalid_argument("CycNum: conductor must be >= 1");
    return CycNum(conductor, std::vector<Rational>(static_cast<size_t>(totient(conductor)),
                                                   Rational(0)));
}

CycNum CycNum::one(long long conductor) { return from_rational(Rational(1), conductor); }

CycNum CycNum::from_rational(const Rational& r, long long conductor) {
    CycNum x = zero(conductor);
    x.coeffs_[0] = r;
    return x;
}

CycNum CycNum::from_coeffs(std::vector<Rational> coeffs, long long conductor) {
    CycNum x = zero(conductor);
    if (coeffs.size() > x.coeffs_.size())
        throw std::invalid_argument("CycNum::from_coeffs: too many coordinates");
    for (size_t i = 0; i < coeffs.size(); ++i) x.coeffs_[i] = std::move(coeffs[i]);
    return x;
}

CycNum CycNum::zeta_power(long long exponent, long long conductor) {
    CycNum x = zero(conductor);
    long long k = ((exponent % conductor) + conductor) % conductor;
    size_t deg = x.coeffs_.size();
    if (static_cast<size_t>(k) < deg) {
        x.coeffs_[static_cast<size_t>(k)] = 1;
        return x;
    }
    // Reduce X^k modulo the cyclotomic polynomial by repeated substitution
    // of the leading relation zeta^deg = -(phi_0 + phi_1 zeta + ...).
    std::vector<long long> phi = cyclotomic_polynomial(conductor);
    std::vector<Rational> acc(static_cast<size_t>(k) + 1, Rational(0));
    acc[static_cast<size_t>(k)] = 1;
    for (size_t d = acc.size(); d-- > deg;) {
        Rational c = acc[d];
        if (c == 0) continue;
        acc[d] = 0;
        for (size_t i = 0; i < deg; ++i) acc[d - deg + i] -= c * phi[i];
    }
    acc.resize(deg);
    x.coeffs_ = std::move(acc);
    return x;
}

bool CycNum::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_integral() const {
    for (const Rational& c : coeffs_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum: not a rational number");
    return coeffs_[0];
}

CycNum CycNum::conjugated() const {
    CycNum result = zero(conductor_);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        CycNum term = zeta_power(-(static_cast<long long>(j)), conductor_);
        for (size_t i = 0; i < result.coeffs_.size(); ++i)
            result.coeffs_[i] += coeffs_[j] * term.coeffs_[i];
    }
    return result;
}

CycNum CycNum::embedded(long long target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0)
        throw std::invalid_argument("CycNum: embedding target must be a multiple of the conductor");
    long long stride = target / conductor_;
    CycNum result = zero(target);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        CycNum term = zeta_power(static_cast<long long>(j) * stride, target);
        for (size_t i = 0; i < result.coeffs_.size(); ++i)
            result.coeffs_[i] += coeffs_[j] * term.coeffs_[i];
    }
    return result;
}

namespace {
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }
}  // namespace

CycNum CycNum::operator-() const {
    CycNum result = *this;
    for (Rational& c : result.coeffs_) c = -c;
    return result;
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (conductor_ != o.conductor_) {
        long long m = lcm_ll(conductor_, o.conductor_);
        return embedded(m) + o.embedded(m);
    }
    CycNum result = *this;
    for (size_t i = 0; i < result.coeffs_.size(); ++i) result.coeffs_[i] += o.coeffs_[i];
    return result;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

bool CycNum::operator==(const CycNum& o) const { return (*this - o).is_zero(); }

CycNum CycNum::operator*(const CycNum& o) const {
    if (conductor_ != o.conductor_) {
        long long m = lcm_ll(conductor_, o.conductor_);
        return embedded(m) * o.embedded(m);
    }
    size_t deg = coeffs_.size();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (size_t i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<long long> phi = cyclotomic_polynomial(conductor_);
    for (size_t d = prod.size(); d-- > deg;) {
        Rational c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (size_t i = 0; i < deg; ++i) prod[d - deg + i] -= c * phi[i];
    }
    prod.resize(deg);
    return CycNum(conductor_, std::move(prod));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    if (is_rational()) return from_rational(Rational(1) / coeffs_[0], conductor_);
    // Extended Euclid over Q[X] for (this, Phi_m). Phi_m is irreducible, so
    // the gcd with any nonzero element of smaller degree is a constant g and
    // the Bezout coefficient u satisfies u * this = g modulo Phi_m.
    using QPoly = std::vector<Rational>;
    auto trim = [](QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto divmod = [&](QPoly a, const QPoly& b) {
        QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
        while (a.size() >= b.size() && !a.empty()) {
            Rational c = a.back() / b.back();
            size_t shift = a.size() - b.size();
            q[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
            trim(a);
        }
        return std::pair(q, a);
    };
    std::vector<long long> phi_int = cyclotomic_polynomial(conductor_);
    QPoly r0(phi_int.begin(), phi_int.end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly u0 = {Rational(0)}, u1 = {Rational(1)};
    trim(u0);
    while (r1.size() > 1) {
        auto [q, r2] = divmod(r0, r1);
        // u2 = u0 - q * u1
        QPoly qu(q.size() + u1.size() - 1, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) qu[i + j] += q[i] * u1[j];
        }
        QPoly u2 = u0;
        u2.resize(std::max(u2.size(), qu.size()), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw std::logic_error("CycNum: zero divisor against an irreducible modulus");
    Rational g = r1[0];
    CycNum result = zero(conductor_);
    for (size_t i = 0; i < u1.size() && i < result.coeffs_.size(); ++i)
        result.coeffs_[i] = u1[i] / g;
    if (u1.size() > result.coeffs_.size())
        throw std::logic_error("CycNum: Bezout coefficient exceeds basis degree");
    return result;
}

std::string CycNum::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = abs_c == 1;
        if (i == 0 || !unit) out << abs_c.str();
        if (i > 0) {
            if (!unit) out << "*";
            out << "z";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

long long residue_at_one_mod(const CycNum& x, long long p) {
    if (p < 2) throw std::invalid_argument("residue_at_one_mod: p must be >= 2");
    if (!x.is_integral()) throw std::domain_error("residue_at_one_mod: element not integral");
    BigInt sum = 0;
    for (const Rational& c : x.coeffs()) sum += boost::multiprecision::numerator(c);
    BigInt r = sum % p;
    if (r < 0) r += p;
    return r.convert_to<long long>();
}

}  // namespace spets
