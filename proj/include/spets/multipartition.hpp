#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spets/group.hpp"
#include "spets/partition.hpp"

namespace spets {

// A q-tuple of partitions with total size n. Irreducible characters of
// G(q,1,n) are labelled by these; characters of G(q,e,n) by their orbits
// under the rotation that shifts components by d = q/e.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> comps);

    // "2|-|1,1" with components separated by '|'.
    static Multipartition parse(const std::string& text);

    const std::vector<Partition>& components() const { return comps_; }
    const Partition& component(int i) const { return comps_.at(static_cast<size_t>(i)); }
    int count() const { return static_cast<int>(comps_.size()); }
    long long total() const;

    // rotate(d): component i of the result is component (i + d) mod q.
    Multipartition rotated(long long d) const;

    // Order of the stabilizer under rotation by d within the cyclic group of
    // e rotations (q = d*e); always divides both e and gcd with total size.
    long long stabilizer_order(long long d, long long e) const;

    // Componentwise conjugate.
    Multipartition conjugated() const;

    std::string str() const;

    auto operator<=>(const Multipartition&) const = default;

private:
    std::vector<Partition> comps_;
};

// Componentwise right-aligned sum (same component count required).
Multipartition operator+(const Multipartition& a, const Multipartition& b);

// Rotation orbit of a multipartition: canonical (lexicographically minimal)
// representative plus the stabilizer order.
struct MultipartitionOrbit {
    Multipartition rep;
    long long stabilizer = 1;

    auto operator<=>(const MultipartitionOrbit&) const = default;
};

MultipartitionOrbit orbit_of(const Multipartition& mp, long long d, long long e);

// All q-tuples of partitions totaling n, deterministic order.
std::vector<Multipartition> enumerate_multipartitions(long long q, long long n);

// Orbit representatives for G(q,e,n) with q = d*e. Each orbit appears once.
std::vector<MultipartitionOrbit> enumerate_orbits(const GroupSpec& g);

// Dimension of the irreducible character of G(q,1,n) labelled by mp:
// multinomial(n; |mp_0|,...,|mp_{q-1}|) * prod standard_tableaux(mp_i).
long long irrep_dimension(const Multipartition& mp);

}  // namespace spets
