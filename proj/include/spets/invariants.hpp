#pragma once

#include <string>
#include <vector>

#include "spets/group.hpp"
#include "spets/multipartition.hpp"
#include "spets/poly.hpp"
#include "spets/symbol.hpp"

namespace spets {

// Label of one irreducible representation of G(q,e,n): a rotation orbit of
// multipartitions together with a component index 1..stabilizer selecting a
// constituent of the restriction from G(q,1,n).
struct IrrepLabel {
    MultipartitionOrbit orbit;
    long long component = 1;

    std::string str() const;  // "2|-|1" or "1|1|1#2" when the orbit splits
    auto operator<=>(const IrrepLabel&) const = default;
};

// All irreducible representations of the group, deterministic order.
std::vector<IrrepLabel> irreps(const GroupSpec& g);

// Dimension of the representation (orbit dimension split across components).
long long irrep_dimension(const IrrepLabel& label, const GroupSpec& g);

// Poincare polynomial: product over the reflection degrees d_i of
// (X^{d_i}-1)/(X-1).
Poly poincare_polynomial(const GroupSpec& g);

// Fake degree of the representation(s) labelled by the rotation orbit of
// `lift`: the graded multiplicity of the representation in the coinvariant
// algebra. All components of one orbit share it.
Poly fake_degree(const Multipartition& lift, const GroupSpec& g);

// b-invariant: order of vanishing of the fake degree at X = 0.
long long b_value(const Multipartition& lift, const GroupSpec& g);

// Closed combinatorial forms for b, used for cross-validation.
// General form, any G(q,e,n).
long long b_from_content(const Multipartition& lift, const GroupSpec& g);
// G(e,1,n) form (mp has e components; padding row 0 to k+1 parts, others to k).
long long b_from_content_type_b(const Multipartition& mp, long long e);
// G(e,e,n) form (lift has e components; all rows padded to k parts).
long long b_from_content_type_d(const Multipartition& lift, long long e);

// True for the groups whose a-function this library defines: G(q,1,n)
// (e = 1) and G(e,e,n) (d = 1), including the symmetric group G(1,1,n).
bool has_a_function(const GroupSpec& g);

// a-invariant, defined when has_a_function(g): the a-statistic of the
// type-(1,0) symbol at the canonical weight (basic weight for e = 1, zero
// weight for d = 1).
long long a_value(const Multipartition& lift, const GroupSpec& g);

// The symbol used by a_value / is_special / families.
Symbol classifying_symbol(const Multipartition& lift, const GroupSpec& g);

// a(lift) == b(lift); equivalent to the classifying symbol being
// distinguished. Defined when has_a_function(g).
bool is_special(const Multipartition& lift, const GroupSpec& g);

// Checks a(E) <= b(E) for every irreducible representation. Requires
// has_a_function(g); throws otherwise.
bool check_spetsial(const GroupSpec& g);

// A family of irreducible representations (block of the spetsial algebra
// over the Rouquier ring).
struct Family {
    std::vector<IrrepLabel> members;
    auto operator<=>(const Family&) const = default;
};

// Families of G(q,1,n) (similarity classes of basic-weight symbols) or
// G(e,e,n) (singletons for stuttering orbits; similarity classes of
// zero-weight symbols otherwise). Requires has_a_function(g).
std::vector<Family> families(const GroupSpec& g);

// Labels of the special representations, deterministic order.
std::vector<IrrepLabel> special_irreps(const GroupSpec& g);

}  // namespace spets
