#include "spets/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spets/numeric.hpp"
#include "spets/partition.hpp"

namespace spets {

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

// Memoized Murnaghan-Nakayama on (descending parts, remaining cycle list).
using MnKey = std::pair<std::vector<long long>, std::vector<long long>>;

long long mn_recurse(std::vector<long long> lambda, std::vector<long long> mu,
                     std::map<MnKey, long long>& memo) {
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (lambda.empty()) return mu.empty() ? 1 : 0;
    if (mu.empty()) return 0;
    MnKey key{lambda, mu};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    long long k = mu.back();
    std::vector<long long> rest(mu.begin(), mu.end() - 1);
    // First-column beta numbers: distinct, descending.
    size_t m = lambda.size();
    std::vector<long long> beta(m);
    for (size_t i = 0; i < m; ++i) beta[i] = lambda[i] + static_cast<long long>(m - 1 - i);
    long long total = 0;
    for (size_t i = 0; i < m; ++i) {
        long long target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        long long height = 0;
        for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<long long> nl(m);
        for (size_t j = 0; j < m; ++j) nl[j] = nb[j] - static_cast<long long>(m - 1 - j);
        long long sign = height % 2 == 0 ? 1 : -1;
        total = checked_add(total, checked_mul(sign, mn_recurse(nl, rest, memo)));
    }
    memo[key] = total;
    return total;
}

std::map<MnKey, long long>& mn_memo() {
    static std::map<MnKey, long long> memo;
    return memo;
}

// Multiply two truncated series (coefficients 0..bound).
std::vector<CycNum> series_mul(const std::vector<CycNum>& a, const std::vector<CycNum>& b,
                               long long bound, long long conductor) {
    std::vector<CycNum> out(static_cast<size_t>(bound) + 1, CycNum::zero(conductor));
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(bound); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j + i <= static_cast<size_t>(bound) && j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

GroupElement group_identity(long long q, long long n) {
    (void)q;
    GroupElement e;
    e.exponents.assign(static_cast<size_t>(n), 0);
    e.perm.resize(static_cast<size_t>(n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
}

GroupElement group_compose(long long q, const GroupElement& a, const GroupElement& b) {
    size_t n = a.perm.size();
    if (b.perm.size() != n) throw std::invalid_argument("group_compose: rank mismatch");
    GroupElement c;
    c.perm.resize(n);
    for (size_t i = 0; i < n; ++i)
        c.perm[i] = a.perm[static_cast<size_t>(b.perm[i])];
    std::vector<int> ainv = inverse_perm(a.perm);
    c.exponents.resize(n);
    for (size_t j = 0; j < n; ++j)
        c.exponents[j] =
            (a.exponents[j] + b.exponents[static_cast<size_t>(ainv[j])]) % q;
    return c;
}

GroupElement group_inverse(long long q, const GroupElement& a) {
    size_t n = a.perm.size();
    GroupElement inv;
    inv.perm = inverse_perm(a.perm);
    inv.exponents.resize(n);
    for (size_t j = 0; j < n; ++j) {
        long long v = -a.exponents[static_cast<size_t>(a.perm[j])] % q;
        inv.exponents[j] = (v + q) % q;
    }
    return inv;
}

std::vector<GroupElement> enumerate_group(const GroupSpec& g, long long bound) {
    if (g.order() > bound)
        throw std::domain_error("group order " + std::to_string(g.order()) +
                                " exceeds the oracle bound " + std::to_string(bound));
    long long q = g.q();
    size_t n = static_cast<size_t>(g.n);
    std::vector<GroupElement> result;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<long long> exps(n, 0);
        while (true) {
            long long sum = std::accumulate(exps.begin(), exps.end(), 0LL);
            if (sum % g.e == 0) result.push_back({exps, perm});
            size_t pos = 0;
            while (pos < n && ++exps[pos] == q) {
                exps[pos] = 0;
                ++pos;
            }
            if (pos == n) break;
        }
        if (n == 0) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

long long symmetric_character(const Partition& lambda, std::vector<long long> mu) {
    long long mu_sum = std::accumulate(mu.begin(), mu.end(), 0LL);
    if (mu_sum != lambda.sum())
        throw std::invalid_argument("symmetric_character: size mismatch");
    std::sort(mu.begin(), mu.end());
    return mn_recurse(lambda.parts(), mu, mn_memo());
}

GroupOracle::GroupOracle(const GroupSpec& g, long long bound) : spec_(g) {
    elements_ = enumerate_group(g, bound);
    if (g.e == 1) {
        wreath_ = elements_;
    } else {
        wreath_ = enumerate_group(GroupSpec::make(g.q(), 1, g.n),
                                  checked_mul(bound, g.e));
    }
}

CycNum GroupOracle::character_value(const Multipartition& mp, const GroupElement& g) const {
    long long q = spec_.q();
    if (mp.count() != q)
        throw std::invalid_argument("character_value: expected " + std::to_string(q) +
                                    " components");
    if (mp.total() != spec_.n)
        throw std::invalid_argument("character_value: multipartition size mismatch");
    size_t n = static_cast<size_t>(spec_.n);
    // Coordinate blocks: component i occupies block_sizes[i] consecutive
    // coordinates.
    std::vector<long long> block_of(n, 0);
    {
        size_t coord = 0;
        for (int i = 0; i < mp.count(); ++i)
            for (long long t = 0; t < mp.component(i).sum(); ++t)
                block_of[coord++] = i;
    }
    CycNum total = CycNum::zero(q);
    for (const GroupElement& x : wreath_) {
        GroupElement conj =
            group_compose(q, group_compose(q, x, g), group_inverse(q, x));
        // Membership in the block subgroup: the permutation preserves blocks.
        bool in_subgroup = true;
        for (size_t i = 0; i < n && in_subgroup; ++i)
            if (block_of[static_cast<size_t>(conj.perm[i])] != block_of[i])
                in_subgroup = false;
        if (!in_subgroup) continue;
        // Product over blocks of the symmetric character at the restricted
        // cycle type, twisted by zeta^{i * exponent-sum of block i}.
        long long sym = 1;
        long long twist = 0;
        std::vector<bool> seen(n, false);
        std::vector<std::vector<long long>> cycles_per_block(static_cast<size_t>(q));
        for (size_t i = 0; i < n; ++i) {
            if (!seen[i]) {
                long long len = 0;
                size_t j = i;
                while (!seen[j]) {
                    seen[j] = true;
                    ++len;
                    j = static_cast<size_t>(conj.perm[j]);
                }
                cycles_per_block[static_cast<size_t>(block_of[i])].push_back(len);
            }
            twist += block_of[i] * conj.exponents[i];
        }
        for (int b = 0; b < mp.count(); ++b) {
            sym = checked_mul(
                sym, mn_recurse(mp.component(b).parts(),
                                [&] {
                                    auto mu = cycles_per_block[static_cast<size_t>(b)];
                                    std::sort(mu.begin(), mu.end());
                                    return mu;
                                }(),
                                mn_memo()));
            if (sym == 0) break;
        }
        if (sym == 0) continue;
        total = total + CycNum::from_rational(Rational(sym), q) * CycNum::zeta_power(twist, q);
    }
    // Divide by |H| = prod q^{n_i} n_i!.
    Rational h_order(1);
    for (int i = 0; i < mp.count(); ++i) {
        long long ni = mp.component(i).sum();
        h_order *= Rational(checked_mul(checked_pow(q, ni), factorial(ni)));
    }
    std::vector<Rational> scaled;
    for (const Rational& c : total.coeffs()) scaled.push_back(c / h_order);
    return CycNum::from_coeffs(scaled, q);
}

std::vector<CycNum> GroupOracle::det_one_minus_xg(const GroupElement& g) const {
    long long q = spec_.q();
    size_t n = static_cast<size_t>(spec_.n);
    std::vector<CycNum> det = {CycNum::one(q)};
    std::vector<bool> seen(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long long len = 0, sum = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            sum += g.exponents[j];
            j = static_cast<size_t>(g.perm[j]);
        }
        // multiply by (1 - zeta^sum X^len)
        std::vector<CycNum> next(det.size() + static_cast<size_t>(len), CycNum::zero(q));
        CycNum factor = CycNum::zeta_power(sum, q);
        for (size_t t = 0; t < det.size(); ++t) {
            next[t] = next[t] + det[t];
            next[t + static_cast<size_t>(len)] =
                next[t + static_cast<size_t>(len)] - factor * det[t];
        }
        det = std::move(next);
    }
    return det;
}

std::vector<CycNum> GroupOracle::inverted_det_series(const GroupElement& g,
                                                     long long degree_bound) const {
    long long q = spec_.q();
    size_t n = static_cast<size_t>(spec_.n);
    std::vector<CycNum> series(1, CycNum::one(q));
    series.resize(static_cast<size_t>(degree_bound) + 1, CycNum::zero(q));
    std::vector<bool> seen(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long long len = 0, sum = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            sum += g.exponents[j];
            j = static_cast<size_t>(g.perm[j]);
        }
        // (1 - zeta^sum X^len)^{-1} = sum_m zeta^{sum*m} X^{len*m}
        std::vector<CycNum> geom(static_cast<size_t>(degree_bound) + 1, CycNum::zero(q));
        for (long long m = 0; m * len <= degree_bound; ++m)
            geom[static_cast<size_t>(m * len)] = CycNum::zeta_power(sum * m, q);
        series = series_mul(series, geom, degree_bound, q);
    }
    return series;
}

Poly GroupOracle::fake_degree_oracle(const Multipartition& mp) const {
    long long q = spec_.q();
    long long nstar = spec_.reflection_count();
    // Numerator prod_i (1 - X^{d_i}), exact integer polynomial.
    Poly numerator = Poly::one();
    for (long long d : spec_.degrees())
        numerator *= Poly::constant(1) - Poly::monomial(1, d);
    std::vector<CycNum> acc(static_cast<size_t>(nstar) + 1, CycNum::zero(q));
    for (const GroupElement& g : elements_) {
        CycNum chi = character_value(mp, g).conjugated();
        if (chi.is_zero()) continue;
        std::vector<CycNum> series = inverted_det_series(g, nstar);
        // multiply the integer numerator into the series
        std::vector<CycNum> graded(static_cast<size_t>(nstar) + 1, CycNum::zero(q));
        for (long long k = 0; k <= numerator.degree(); ++k) {
            long long c = numerator.coeff(k);
            if (c == 0 || k > nstar) continue;
            CycNum cc = CycNum::from_rational(Rational(c), q);
            for (size_t t = 0; t + static_cast<size_t>(k) <= static_cast<size_t>(nstar); ++t)
                graded[t + static_cast<size_t>(k)] =
                    graded[t + static_cast<size_t>(k)] + cc * series[t];
        }
        for (size_t t = 0; t < acc.size(); ++t) acc[t] = acc[t] + chi * graded[t];
    }
    Rational order(spec_.order());
    std::vector<long long> coeffs;
    for (const CycNum& c : acc) {
        if (!c.is_rational())
            throw std::logic_error("fake degree multiplicity is not rational: inconsistency");
        Rational value = c.rational_value() / order;
        if (boost::multiprecision::denominator(value) != 1)
            throw std::logic_error("fake degree multiplicity is not an integer: inconsistency");
        coeffs.push_back(
            boost::multiprecision::numerator(value).convert_to<long long>());
    }
    return Poly(std::move(coeffs));
}

std::vector<std::vector<size_t>> GroupOracle::conjugacy_classes() const {
    long long q = spec_.q();
    std::map<GroupElement, size_t> index;
    for (size_t i = 0; i < elements_.size(); ++i) index[elements_[i]] = i;
    std::vector<bool> assigned(elements_.size(), false);
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<size_t> cls;
        for (const GroupElement& x : elements_) {
            GroupElement conj = group_compose(
                q, group_compose(q, x, elements_[i]), group_inverse(q, x));
            size_t j = index.at(conj);
            if (!assigned[j]) {
                assigned[j] = true;
                cls.push_back(j);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace spets
