#pragma once

#include <map>
#include <vector>

#include "spets/cyclotomic.hpp"
#include "spets/group.hpp"
#include "spets/multipartition.hpp"
#include "spets/poly.hpp"

namespace spets {

// An element of G(q,1,n) (or of the index-e subgroup G(q,e,n)): the monomial
// matrix e_i -> zeta^{exponents[perm[i]]} e_{perm[i]} with zeta = zeta_q.
// Lies in G(q,e,n) iff the exponent sum is divisible by e.
struct GroupElement {
    std::vector<long long> exponents;  // n values mod q
    std::vector<int> perm;             // perm[i] = image of point i

    auto operator<=>(const GroupElement&) const = default;
};

GroupElement group_identity(long long q, long long n);
GroupElement group_compose(long long q, const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(long long q, const GroupElement& a);

// All elements of G(q,e,n), each exactly once, deterministic order. Throws
// std::domain_error when the order exceeds the bound.
std::vector<GroupElement> enumerate_group(const GroupSpec& g, long long bound = 5000);

// Character value of the symmetric group S_n at a cycle type, by the
// Murnaghan-Nakayama rule. `mu` lists cycle lengths (any order); sizes must
// agree.
long long symmetric_character(const Partition& lambda, std::vector<long long> mu);

// Brute-force ground truth on one small group: explicit elements, exact
// induced characters of the enveloping wreath product, and fake degrees as
// graded coinvariant multiplicities.
class GroupOracle {
public:
    explicit GroupOracle(const GroupSpec& g, long long bound = 5000);

    const GroupSpec& group() const { return spec_; }
    // Elements of G(q,e,n).
    const std::vector<GroupElement>& elements() const { return elements_; }
    // Elements of the enveloping wreath group G(q,1,n) (same list when e=1).
    const std::vector<GroupElement>& wreath_elements() const { return wreath_; }

    // chi_{E_mp}(g) for the irreducible character of G(q,1,n) attached to a
    // q-tuple of partitions, computed by the explicit induced-character sum
    // over the wreath group. For g in a proper subgroup G(q,e,n) this value
    // is the restricted character (the sum over the orbit's constituents).
    CycNum character_value(const Multipartition& mp, const GroupElement& g) const;

    // det(1 - X g) as an exact polynomial over Q(zeta_q), ascending coeffs:
    // the product over permutation cycles of (1 - zeta^{sum} X^{len}).
    std::vector<CycNum> det_one_minus_xg(const GroupElement& g) const;
    // Its inverse as a power series, coefficients 0..degree_bound.
    std::vector<CycNum> inverted_det_series(const GroupElement& g,
                                            long long degree_bound) const;

    // Graded multiplicity of the representation in the coinvariant algebra:
    // (1/|G|) sum_g conj(chi(g)) * [prod_i (1 - X^{d_i})] / det(1 - X g),
    // truncated to the top degree N* = sum (d_i - 1). For e > 1 the
    // character is the restricted one and the result is the orbit-stabilizer
    // multiple of the common fake degree of the constituents. Throws
    // std::logic_error if any multiplicity fails to be a rational integer.
    Poly fake_degree_oracle(const Multipartition& mp) const;

    // Conjugacy classes of G(q,e,n) as index lists into elements(), computed
    // by orbit enumeration under conjugation.
    std::vector<std::vector<size_t>> conjugacy_classes() const;

private:
    GroupSpec spec_;
    std::vector<GroupElement> wreath_;
    std::vector<GroupElement> elements_;
};

}  // namespace spets
