#pragma once

#include <string>
#include <vector>

#include "spets/cyclotomic.hpp"
#include "spets/group.hpp"
#include "spets/invariants.hpp"
#include "spets/symbol.hpp"

namespace spets {

// Root lattices for G(e,1,n) over Z[zeta_e]: L1 is the full standard lattice,
// L2 its sublattice with coordinate sum divisible by (1 - zeta). When e is
// not a prime power (1 - zeta) is a unit and the two coincide. L0 is the
// rank-one lattice on the reflecting line used for the dihedral groups
// G(e,e,2).
enum class LatticeKind { L1, L2, L0 };

std::string lattice_str(LatticeKind lattice);
LatticeKind parse_lattice(const std::string& text);  // "L1" / "L2" / "L0"

// The lattice classes that exist for the group, as classified data: G(q,1,n)
// carries L1 and L2 (distinct exactly when q is a prime power); G(e,e,n)
// with n >= 3 carries only L2 when e is a prime power, either tag otherwise;
// dihedral G(e,e,2) carries L0.
std::vector<LatticeKind> available_lattices(const GroupSpec& g);

// A reflection of G(e,1,n): either e_i -> zeta^k e_j (transposition-like,
// i < j, 0 <= k < e) or e_i -> zeta^k e_i (diagonal, 1 <= k < e). The
// dihedral kind is the reflection [0 zeta^k; zeta^{-k} 0] of G(e,e,2).
struct Reflection {
    enum class Kind { Transposition, Diagonal, Dihedral };

    Kind kind = Kind::Transposition;
    int i = 0;  // first row (0-based); the only row for Diagonal
    int j = 0;  // second row (Transposition only)
    long long k = 0;  // zeta exponent

    std::string str() const;  // "s(1,2)^0", "t(1)^2", "s3"
    auto operator<=>(const Reflection&) const = default;
};

// All n(n-1)e/2 + n(e-1) reflections of G(e,1,n), deterministic order.
std::vector<Reflection> reflections_ge1n(long long e, long long n);

// The e dihedral reflections s_0, ..., s_{e-1} of G(e,e,2).
std::vector<Reflection> dihedral_reflections(long long e);

// Reflections of the subgroup G(d,d,2) of G(e,e,2) (exponents 0 mod e/d) or
// of its twin G'(d,d,2) (exponents 1 mod e/d; requires e/d even).
std::vector<Reflection> dihedral_subgroup_reflections(long long d, long long e, bool primed);

// v - w(v) for a reflection w of G(e,1,n) acting on coordinates v (length
// n, common conductor e). Dihedral kind not accepted here.
std::vector<CycNum> reflection_displacement(const Reflection& w, const std::vector<CycNum>& v);

// L1: every coordinate integral. L2: additionally the coordinate sum lies in
// (1 - zeta)Z[zeta]; for conductor a power of the prime p this is decided by
// the ring map zeta -> 1 into Z/p, otherwise it is no extra condition. L0:
// a single coordinate v_1 (the point v_1 e_1 - conj(v_1) e_2), integral.
// Non-integral coordinates make the answer false, never an error.
bool membership_L(const std::vector<CycNum>& v, LatticeKind lattice);

// The reflections w with v - w(v) in the lattice. For L1/L2 the vector has
// one coordinate per row of G(e,1,n) with e the common conductor; for L0 it
// is the single dihedral coordinate v_1 and the result lists dihedral
// reflections s_i with v_1 + zeta^i conj(v_1) integral.
std::vector<Reflection> stabilizer_reflections(const std::vector<CycNum>& v,
                                               LatticeKind lattice);

// A conjugacy class of pseudoparabolic subgroups of G(q,1,n) or G(e,e,n)
// (n >= 3): a product of imprimitive factors and symmetric groups acting on
// disjoint coordinate blocks. Factors of order 1 are dropped; the list is
// kept in display order (wreath factors, then G(e,e,m), then symmetric).
struct PseudoparabolicShape {
    std::vector<GroupSpec> factors;

    long long rank() const;   // sum of factor ranks
    std::string str() const;  // "G(2,1,3) x G(2,2,2) x S2"; "1" when empty
    auto operator<=>(const PseudoparabolicShape&) const = default;
};

// All pseudoparabolic shapes of the group for the given lattice, from the
// classification: for G(q,1,n) with q = p^a, L1 gives p wreath slots
// G(q,1,n_i) and L2 gives one wreath slot plus p-1 slots G(q,q,n_i), each
// padded by symmetric factors; when q is not a prime power there is a single
// wreath slot. For G(e,e,n), n >= 3: p slots G(e,e,n_i) when e = p^a (lattice
// L2), one otherwise. Dihedral groups G(e,e,2) are served by
// dihedral_pseudoparabolics instead.
std::vector<PseudoparabolicShape> pseudoparabolics(const GroupSpec& g, LatticeKind lattice);

// The symbol type whose distinguished spetsial-weight symbols cut out the
// Springer representations: (p,0) / (p,p-1) for G(q,1,n) with q = p^a and
// L1 / L2, (1,0) when q is not a prime power; (p,0) resp. (1,0) for
// G(e,e,n).
SymbolType springer_symbol_type(const GroupSpec& g, LatticeKind lattice);

// The Springer representations: irreducible representations whose
// spetsial-weight symbol of springer_symbol_type is distinguished.
std::vector<IrrepLabel> springer_reps(const GroupSpec& g, LatticeKind lattice);

// An irreducible character of the dihedral group G(e,e,2), labelled by its
// b-invariant subscript; the primed flag distinguishes the second linear
// character of subscript e/2 when e is even. Printed "chi0", "chi3'", ...
// (with a Greek chi).
struct DihedralIrrep {
    long long sub = 0;
    bool primed = false;

    long long b() const { return sub; }
    long long dim(long long e) const;
    std::string label() const;
    auto operator<=>(const DihedralIrrep&) const = default;
};

// All irreducible characters of G(e,e,2), e >= 2: chi_0, ..., chi_{(e-1)/2},
// the pair chi_{e/2}, chi'_{e/2} when e is even, and chi_e. For e = 2 this
// degenerates to the four linear characters of the Klein four-group.
std::vector<DihedralIrrep> dihedral_irreps(long long e);

// The special characters: chi_0 (trivial), chi_1 (reflection), chi_e (sign).
std::vector<DihedralIrrep> dihedral_specials(long long e);

// Truncated induction from G(d,d,2) (primed: G'(d,d,2)) to G(e,e,2):
// identity when d = e; otherwise defined on the special characters,
// trivial -> trivial, reflection -> reflection, and sign chi_d -> chi_d,
// except that the sign of G'(e/2,e/2,2) lands on chi'_{e/2}.
DihedralIrrep dihedral_j_induce(long long d, long long e, bool primed, const DihedralIrrep& rep);

// A reflection subgroup G(d,d,2) of G(e,e,2), or its non-conjugate twin
// G'(d,d,2) (exists when e/d is even).
struct DihedralSubgroup {
    long long d = 1;
    bool primed = false;

    std::string str() const;  // "G(3,3,2)" / "G'(1,1,2)"
    auto operator<=>(const DihedralSubgroup&) const = default;
};

// The proper pseudoparabolic subgroups of G(e,e,2) up to conjugacy:
// G(d,d,2) for d = 1 and for prime-power divisors d < e; G'(d,d,2) for
// e/d even with d = 1 or d < e/2 a prime power.
std::vector<DihedralSubgroup> dihedral_pseudoparabolics(long long e);

// The Springer characters of G(e,e,2): all of them for e = 2; otherwise the
// specials together with chi_d for every prime-power divisor d of e.
std::vector<DihedralIrrep> dihedral_springer(long long e);

// A point v_1 whose lattice stabilizer in G(e,e,2), per
// stabilizer_reflections on L0, is exactly the given subgroup:
// 1/(1 - zeta^{-e/d}) resp. (1 + zeta)/(1 - zeta^{-e/d}) for d >= 2, and
// for d = 1 a point off every other reflecting line,
// (zeta - zeta^{-1})/q resp. (1 - zeta)/q with q the smallest prime not
// dividing 2e. Requires the subgroup to be pseudoparabolic or the full
// group. For e = 2 the unprimed d = 1 case does not exist (every point
// fixed modulo L0 by s_0 is also fixed by s_1) and throws.
CycNum dihedral_witness(long long d, long long e, bool primed);

}  // namespace spets
