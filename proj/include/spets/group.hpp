#pragma once

#include <string>
#include <vector>

namespace spets {

// The imprimitive complex reflection group G(de, e, n): monomial n x n
// matrices whose nonzero entries are de-th roots of unity with product a
// d-th power (exponent sum divisible by e).
struct GroupSpec {
    long long d = 1;
    long long e = 1;
    long long n = 0;

    long long q() const { return d * e; }  // the root-of-unity order de

    // Validates d >= 1, e >= 1, n >= 0.
    static GroupSpec make(long long d, long long e, long long n);
    // Builds from (q, e, n) with e | q.
    static GroupSpec from_qen(long long q, long long e, long long n);

    long long order() const;                 // q^n n! / e
    std::vector<long long> degrees() const;  // invariant degrees
    long long reflection_count() const;      // sum of (degree - 1)

    std::string str() const;  // "G(q,e,n)"

    auto operator<=>(const GroupSpec&) const = default;
};

}  // namespace spets
