#include "spets/springer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spets/induction.hpp"
#include "spets/partition.hpp"

namespace spets {

namespace {

constexpr const char* kChi = "χ";

long long smallest_prime_not_dividing(long long m) {
    for (long long q = 2;; ++q) {
        bool prime = q >= 2;
        for (long long f = 2; f * f <= q; ++f)
            if (q % f == 0) prime = false;
        if (prime && m % q != 0) return q;
    }
}

// Display rank of a factor: wreath groups first, then G(e,e,m), then
// symmetric groups.
int factor_rank(const GroupSpec& g) {
    if (g.d == 1 && g.e == 1) return 2;
    if (g.e == 1) return 0;
    return 1;
}

bool factor_before(const GroupSpec& a, const GroupSpec& b) {
    int ra = factor_rank(a), rb = factor_rank(b);
    if (ra != rb) return ra < rb;
    if (a.n != b.n) return a.n > b.n;
    return a.q() > b.q();
}

void append_factor(std::vector<GroupSpec>& factors, const GroupSpec& g) {
    if (g.order() <= 1) return;  // G(.,.,0), S1, G(e,e,1)
    factors.push_back(g);
}

// Weakly decreasing sequences of `slots` non-negative integers with a given
// sum, appended as factors made by `make`.
void enumerate_multiset_slots(long long slots, long long sum, long long cap,
                              std::vector<long long>& current,
                              const std::function<void(const std::vector<long long>&)>& emit) {
    if (slots == 0) {
        if (sum == 0) emit(current);
        return;
    }
    long long top = std::min(cap, sum);
    for (long long v = top; v >= 0; --v) {
        if (v * slots < sum) break;  // remaining slots cannot reach the sum
        current.push_back(v);
        enumerate_multiset_slots(slots - 1, sum - v, v, current, emit);
        current.pop_back();
    }
}

struct TableRow {
    bool has_single_wreath = false;   // one distinguished G(q,1,n_0) slot
    bool single_is_dee = false;       // the single slot is G(e,e,n_0) instead
    long long multiset_slots = 0;     // interchangeable slots
    bool multiset_is_dee = false;     // multiset slots are G(e,e,n_i)
};

TableRow classification_row(const GroupSpec& g, LatticeKind lattice) {
    long long q = g.q();
    TableRow row;
    if (g.e == 1) {
        if (is_prime_power(q)) {
            long long p = smallest_prime_factor(q);
            if (lattice == LatticeKind::L1) {
                row.multiset_slots = p;  // p wreath slots
            } else {
                row.has_single_wreath = true;
                row.multiset_slots = p - 1;
                row.multiset_is_dee = true;
            }
        } else {
            row.has_single_wreath = true;
        }
    } else {  // G(e,e,n)
        if (is_prime_power(g.e)) {
            row.multiset_slots = smallest_prime_factor(g.e);
            row.multiset_is_dee = true;
        } else {
            row.has_single_wreath = true;
            row.single_is_dee = true;
        }
    }
    return row;
}

void validate_group_and_lattice(const GroupSpec& g, LatticeKind lattice) {
    if (g.d > 1 && g.e > 1)
        throw std::domain_error("pseudoparabolic classification needs G(q,1,n) or G(e,e,n)");
    if (g.d == 1 && g.e >= 2) {
        if (g.n == 2)
            throw std::domain_error(
                "dihedral group: use dihedral_pseudoparabolics / dihedral_springer");
        if (g.n < 3) throw std::domain_error("G(e,e,n) needs n >= 3");
        if (lattice == LatticeKind::L0) throw std::domain_error("L0 is the dihedral lattice");
        if (is_prime_power(g.e) && lattice == LatticeKind::L1)
            throw std::domain_error("G(e,e,n) with e a prime power carries only the lattice L2");
    } else {
        if (lattice == LatticeKind::L0) throw std::domain_error("L0 is the dihedral lattice");
    }
}

DihedralIrrep validated_dihedral_label(long long e, const DihedralIrrep& rep) {
    bool low = rep.sub >= 0 && rep.sub <= (e - 1) / 2 && !rep.primed;
    bool middle = e % 2 == 0 && rep.sub == e / 2;
    bool top = rep.sub == e && !rep.primed;
    if (!(low || middle || top))
        throw std::domain_error("not a character label of G(" + std::to_string(e) + "," +
                                std::to_string(e) + ",2)");
    return rep;
}

void validate_dihedral_subgroup(long long d, long long e, bool primed) {
    if (e < 2) throw std::domain_error("dihedral groups need e >= 2");
    if (d < 1 || e % d != 0)
        throw std::domain_error("G(d,d,2) embeds in G(e,e,2) only for d dividing e");
    if (primed && (e / d) % 2 != 0)
        throw std::domain_error("G'(d,d,2) exists only when e/d is even");
}

bool dihedral_is_pseudoparabolic(long long d, long long e, bool primed) {
    if (!primed) return d == 1 || d == e || is_prime_power(d);
    return (e / d) % 2 == 0 && (d == 1 || (d < e / 2 && is_prime_power(d)));
}

}  // namespace

std::string lattice_str(LatticeKind lattice) {
    switch (lattice) {
        case LatticeKind::L1: return "L1";
        case LatticeKind::L2: return "L2";
        case LatticeKind::L0: return "L0";
    }
    throw std::logic_error("unreachable lattice tag");
}

LatticeKind parse_lattice(const std::string& text) {
    if (text == "L1" || text == "l1") return LatticeKind::L1;
    if (text == "L2" || text == "l2") return LatticeKind::L2;
    if (text == "L0" || text == "l0") return LatticeKind::L0;
    throw std::domain_error("unknown lattice '" + text + "' (expected L1, L2 or L0)");
}

std::vector<LatticeKind> available_lattices(const GroupSpec& g) {
    if (g.d == 1 && g.e >= 2 && g.n == 2) return {LatticeKind::L0};
    if (g.d == 1 && g.e >= 2) {
        if (is_prime_power(g.e)) return {LatticeKind::L2};
        return {LatticeKind::L1, LatticeKind::L2};
    }
    if (g.d >= 1 && g.e == 1) return {LatticeKind::L1, LatticeKind::L2};
    throw std::domain_error("no lattice classification for " + g.str());
}

std::string Reflection::str() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Transposition:
            out << "s(" << i + 1 << "," << j + 1 << ")^" << k;
            break;
        case Kind::Diagonal:
            out << "t(" << i + 1 << ")^" << k;
            break;
        case Kind::Dihedral:
            out << "s" << k;
            break;
    }
    return out.str();
}

std::vector<Reflection> reflections_ge1n(long long e, long long n) {
    if (e < 1 || n < 0) throw std::invalid_argument("reflections_ge1n: need e >= 1, n >= 0");
    std::vector<Reflection> result;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (long long k = 0; k < e; ++k)
                result.push_back({Reflection::Kind::Transposition, i, j, k});
    for (int i = 0; i < n; ++i)
        for (long long k = 1; k < e; ++k)
            result.push_back({Reflection::Kind::Diagonal, i, 0, k});
    return result;
}

std::vector<Reflection> dihedral_reflections(long long e) {
    if (e < 2) throw std::invalid_argument("dihedral_reflections: need e >= 2");
    std::vector<Reflection> result;
    for (long long k = 0; k < e; ++k) result.push_back({Reflection::Kind::Dihedral, 0, 1, k});
    return result;
}

std::vector<Reflection> dihedral_subgroup_reflections(long long d, long long e, bool primed) {
    validate_dihedral_subgroup(d, e, primed);
    std::vector<Reflection> result;
    for (long long j = 0; j < d; ++j)
        result.push_back({Reflection::Kind::Dihedral, 0, 1, (primed ? 1 : 0) + j * (e / d)});
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<CycNum> reflection_displacement(const Reflection& w, const std::vector<CycNum>& v) {
    if (v.empty()) throw std::invalid_argument("reflection_displacement: empty point");
    long long e = v[0].conductor();
    std::vector<CycNum> disp(v.size(), CycNum::zero(e));
    switch (w.kind) {
        case Reflection::Kind::Transposition: {
            const CycNum& vi = v.at(static_cast<size_t>(w.i));
            const CycNum& vj = v.at(static_cast<size_t>(w.j));
            disp[static_cast<size_t>(w.i)] = vi - CycNum::zeta_power(-w.k, e) * vj;
            disp[static_cast<size_t>(w.j)] = vj - CycNum::zeta_power(w.k, e) * vi;
            break;
        }
        case Reflection::Kind::Diagonal: {
            const CycNum& vi = v.at(static_cast<size_t>(w.i));
            disp[static_cast<size_t>(w.i)] = (CycNum::one(e) - CycNum::zeta_power(w.k, e)) * vi;
            break;
        }
        case Reflection::Kind::Dihedral:
            throw std::invalid_argument(
                "reflection_displacement: dihedral reflections act on the L0 coordinate");
    }
    return disp;
}

bool membership_L(const std::vector<CycNum>& v, LatticeKind lattice) {
    if (v.empty()) throw std::invalid_argument("membership_L: empty point");
    if (lattice == LatticeKind::L0 && v.size() != 1)
        throw std::invalid_argument("membership_L: L0 points have a single coordinate");
    for (const CycNum& c : v)
        if (!c.is_integral()) return false;
    if (lattice != LatticeKind::L2) return true;
    long long e = v[0].conductor();
    if (!is_prime_power(e)) return true;  // (1 - zeta) is a unit
    CycNum sum = CycNum::zero(e);
    for (const CycNum& c : v) sum = sum + c;
    return residue_at_one_mod(sum, smallest_prime_factor(e)) == 0;
}

std::vector<Reflection> stabilizer_reflections(const std::vector<CycNum>& v,
                                               LatticeKind lattice) {
    if (v.empty()) throw std::invalid_argument("stabilizer_reflections: empty point");
    long long e = v[0].conductor();
    for (const CycNum& c : v)
        if (c.conductor() != e)
            throw std::invalid_argument("stabilizer_reflections: mixed conductors");
    std::vector<Reflection> result;
    if (lattice == LatticeKind::L0) {
        if (v.size() != 1)
            throw std::invalid_argument("stabilizer_reflections: L0 points have one coordinate");
        CycNum conj = v[0].conjugated();
        for (const Reflection& s : dihedral_reflections(e)) {
            CycNum disp = v[0] + CycNum::zeta_power(s.k, e) * conj;
            if (disp.is_integral()) result.push_back(s);
        }
        return result;
    }
    for (const Reflection& w : reflections_ge1n(e, static_cast<long long>(v.size())))
        if (membership_L(reflection_displacement(w, v), lattice)) result.push_back(w);
    return result;
}

long long PseudoparabolicShape::rank() const {
    long long total = 0;
    for (const GroupSpec& f : factors) total += f.n;
    return total;
}

std::string PseudoparabolicShape::str() const {
    if (factors.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out << " x ";
        const GroupSpec& f = factors[i];
        if (f.d == 1 && f.e == 1)
            out << "S" << f.n;
        else
            out << f.str();
    }
    return out.str();
}

std::vector<PseudoparabolicShape> pseudoparabolics(const GroupSpec& g, LatticeKind lattice) {
    validate_group_and_lattice(g, lattice);
    TableRow row = classification_row(g, lattice);
    long long q = g.q();
    auto single_factor = [&](long long m) {
        return row.single_is_dee ? GroupSpec::make(1, q, m) : GroupSpec::make(q, 1, m);
    };
    auto multiset_factor = [&](long long m) {
        return row.multiset_is_dee ? GroupSpec::make(1, q, m) : GroupSpec::make(q, 1, m);
    };

    std::set<std::vector<GroupSpec>> seen;
    long long single_max = row.has_single_wreath ? g.n : 0;
    for (long long n0 = 0; n0 <= single_max; ++n0) {
        long long after_single = g.n - n0;
        for (long long msum = 0; msum <= after_single; ++msum) {
            std::vector<std::vector<long long>> multisets;
            if (row.multiset_slots == 0) {
                if (msum > 0) continue;
                multisets.push_back({});
            } else {
                std::vector<long long> current;
                enumerate_multiset_slots(
                    row.multiset_slots, msum, msum, current,
                    [&](const std::vector<long long>& ms) { multisets.push_back(ms); });
            }
            long long rest = after_single - msum;
            std::vector<Partition> rests = partitions_of(rest);
            for (const std::vector<long long>& ms : multisets) {
                for (const Partition& sym : rests) {
                    std::vector<GroupSpec> factors;
                    if (row.has_single_wreath) append_factor(factors, single_factor(n0));
                    for (long long m : ms) append_factor(factors, multiset_factor(m));
                    for (long long m : sym.parts())
                        append_factor(factors, GroupSpec::make(1, 1, m));
                    std::sort(factors.begin(), factors.end(), factor_before);
                    seen.insert(std::move(factors));
                }
            }
        }
    }
    std::vector<PseudoparabolicShape> result;
    for (const std::vector<GroupSpec>& factors : seen)
        result.push_back(PseudoparabolicShape{factors});
    return result;
}

SymbolType springer_symbol_type(const GroupSpec& g, LatticeKind lattice) {
    validate_group_and_lattice(g, lattice);
    long long q = g.q();
    if (g.e == 1) {
        if (!is_prime_power(q)) return {1, 0};
        long long p = smallest_prime_factor(q);
        return lattice == LatticeKind::L1 ? SymbolType{p, 0} : SymbolType{p, p - 1};
    }
    if (!is_prime_power(g.e)) return {1, 0};
    return {smallest_prime_factor(g.e), 0};
}

std::vector<IrrepLabel> springer_reps(const GroupSpec& g, LatticeKind lattice) {
    SymbolType type = springer_symbol_type(g, lattice);
    std::vector<IrrepLabel> result;
    if (g.e == 1) {
        for (const Multipartition& mp : springer_multipartitions_ge1n(g.q(), g.n, type.r, type.s))
            result.push_back({orbit_of(mp, g.d, g.e), 1});
        return result;
    }
    return springer_irreps_geen(g.e, g.n, type.r);
}

long long DihedralIrrep::dim(long long e) const {
    if (sub == 0 || sub == e) return 1;
    if (e % 2 == 0 && sub == e / 2) return 1;
    return 2;
}

std::string DihedralIrrep::label() const {
    std::string text = kChi + std::to_string(sub);
    if (primed) text += "'";
    return text;
}

std::vector<DihedralIrrep> dihedral_irreps(long long e) {
    if (e < 2) throw std::domain_error("dihedral_irreps: need e >= 2");
    std::vector<DihedralIrrep> result;
    for (long long j = 0; j <= (e - 1) / 2; ++j) result.push_back({j, false});
    if (e % 2 == 0) {
        result.push_back({e / 2, false});
        result.push_back({e / 2, true});
    }
    result.push_back({e, false});
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<DihedralIrrep> dihedral_specials(long long e) {
    if (e < 2) throw std::domain_error("dihedral_specials: need e >= 2");
    return {{0, false}, {1, false}, {e, false}};
}

DihedralIrrep dihedral_j_induce(long long d, long long e, bool primed,
                                const DihedralIrrep& rep) {
    validate_dihedral_subgroup(d, e, primed);
    if (d == e) return validated_dihedral_label(e, rep);
    if (d == 1) {
        // G(1,1,2) and G'(1,1,2) have the trivial and the sign character,
        // labelled chi_0 and chi_1 = chi_d.
        if (rep.primed || (rep.sub != 0 && rep.sub != 1))
            throw std::domain_error("not a character label of S2");
    } else {
        validated_dihedral_label(d, rep);
    }
    if (rep.sub == 0 && !rep.primed) return {0, false};
    if (rep.sub == 1 && !rep.primed) return {1, false};
    if (rep.sub == d && !rep.primed) {
        if (2 * d == e && primed) return {e / 2, true};
        return {d, false};
    }
    throw std::domain_error("truncated induction is defined on the special characters " +
                            std::string(kChi) + "0, " + kChi + "1, " + kChi + std::to_string(d));
}

std::string DihedralSubgroup::str() const {
    std::ostringstream out;
    out << (primed ? "G'(" : "G(") << d << "," << d << ",2)";
    return out.str();
}

std::vector<DihedralSubgroup> dihedral_pseudoparabolics(long long e) {
    if (e < 2) throw std::domain_error("dihedral_pseudoparabolics: need e >= 2");
    std::vector<DihedralSubgroup> result;
    for (long long d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        if (dihedral_is_pseudoparabolic(d, e, false)) result.push_back({d, false});
        if ((e / d) % 2 == 0 && dihedral_is_pseudoparabolic(d, e, true))
            result.push_back({d, true});
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<DihedralIrrep> dihedral_springer(long long e) {
    if (e < 2) throw std::domain_error("dihedral_springer: need e >= 2");
    if (e == 2) return dihedral_irreps(2);
    std::vector<DihedralIrrep> result = dihedral_specials(e);
    for (long long d = 2; d < e; ++d)
        if (e % d == 0 && is_prime_power(d)) result.push_back({d, false});
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

CycNum dihedral_witness(long long d, long long e, bool primed) {
    validate_dihedral_subgroup(d, e, primed);
    if (d != e && !dihedral_is_pseudoparabolic(d, e, primed))
        throw std::domain_error(DihedralSubgroup{d, primed}.str() + " is not pseudoparabolic in G(" +
                                std::to_string(e) + "," + std::to_string(e) + ",2)");
    if (d >= 2) {
        CycNum base = (CycNum::one(e) - CycNum::zeta_power(-(e / d), e)).inverse();
        if (!primed) return base;
        return (CycNum::one(e) + CycNum::zeta_power(1, e)) * base;
    }
    long long q = smallest_prime_not_dividing(2 * e);
    CycNum scale = CycNum::from_rational(Rational(1, q), e);
    if (primed) return (CycNum::one(e) - CycNum::zeta_power(1, e)) * scale;
    if (e == 2)
        throw std::domain_error(
            "no point of G(2,2,2) has lattice stabilizer exactly {s0}: the displacement under "
            "s1 is always zero");
    return (CycNum::zeta_power(1, e) - CycNum::zeta_power(-1, e)) * scale;
}

}  // namespace spets
