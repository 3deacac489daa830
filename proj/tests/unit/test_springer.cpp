#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "spets/induction.hpp"
#include "spets/springer.hpp"

using namespace spets;

TEST_CASE("lattice tags") {
    for (LatticeKind k : {LatticeKind::L1, LatticeKind::L2, LatticeKind::L0})
        CHECK(parse_lattice(lattice_str(k)) == k);
    CHECK(lattice_str(LatticeKind::L2) == "L2");
    CHECK_THROWS_AS(parse_lattice("L9"), std::domain_error);

    CHECK(available_lattices(GroupSpec::make(2, 1, 2)) ==
          std::vector<LatticeKind>{LatticeKind::L1, LatticeKind::L2});
    CHECK(available_lattices(GroupSpec::make(6, 1, 2)) ==
          std::vector<LatticeKind>{LatticeKind::L1, LatticeKind::L2});
    CHECK(available_lattices(GroupSpec::make(1, 3, 3)) ==
          std::vector<LatticeKind>{LatticeKind::L2});
    CHECK(available_lattices(GroupSpec::make(1, 6, 3)) ==
          std::vector<LatticeKind>{LatticeKind::L1, LatticeKind::L2});
    CHECK(available_lattices(GroupSpec::make(1, 3, 2)) ==
          std::vector<LatticeKind>{LatticeKind::L0});
    CHECK(available_lattices(GroupSpec::make(1, 2, 2)) ==
          std::vector<LatticeKind>{LatticeKind::L0});
    CHECK_THROWS_AS(available_lattices(GroupSpec::make(2, 2, 2)), std::domain_error);
}

TEST_CASE("reflection lists") {
    // n(n-1)e/2 transposition-like plus n(e-1) diagonal reflections.
    CHECK(reflections_ge1n(3, 2).size() == 7);
    CHECK(reflections_ge1n(2, 3).size() == 9);
    CHECK(reflections_ge1n(4, 3).size() == 21);
    CHECK(reflections_ge1n(1, 4).size() == 6);  // the symmetric group

    auto refl = reflections_ge1n(3, 2);
    std::set<Reflection> uniq(refl.begin(), refl.end());
    CHECK(uniq.size() == refl.size());

    auto dih = dihedral_reflections(3);
    REQUIRE(dih.size() == 3);
    CHECK(dih[0].str() == "s0");
    CHECK(dih[2].str() == "s2");

    // Subgroup reflection sets inside the 6-gon group: stride e/d, offset 0
    // or 1.
    auto sub = dihedral_subgroup_reflections(3, 6, false);
    REQUIRE(sub.size() == 3);
    CHECK(sub[0].str() == "s0");
    CHECK(sub[1].str() == "s2");
    CHECK(sub[2].str() == "s4");
    auto subp = dihedral_subgroup_reflections(3, 6, true);
    REQUIRE(subp.size() == 3);
    CHECK(subp[0].str() == "s1");
    CHECK(subp[2].str() == "s5");
    CHECK(dihedral_subgroup_reflections(1, 6, true).size() == 1);
    // A primed copy needs e/d even.
    CHECK_THROWS_AS(dihedral_subgroup_reflections(2, 6, true), std::domain_error);
}

TEST_CASE("lattice membership") {
    std::vector<CycNum> zero = {CycNum::zero(2), CycNum::zero(2)};
    CHECK(membership_L(zero, LatticeKind::L1));
    CHECK(membership_L(zero, LatticeKind::L2));

    std::vector<CycNum> onezero = {CycNum::one(2), CycNum::zero(2)};
    CHECK(membership_L(onezero, LatticeKind::L1));
    CHECK(!membership_L(onezero, LatticeKind::L2));

    std::vector<CycNum> oneone = {CycNum::one(2), CycNum::one(2)};
    CHECK(membership_L(oneone, LatticeKind::L2));

    std::vector<CycNum> half = {CycNum::from_rational(Rational(1, 2), 2), CycNum::zero(2)};
    CHECK(!membership_L(half, LatticeKind::L1));
    CHECK(!membership_L(half, LatticeKind::L2));

    // Conductor without a prime-power condition: L2 adds nothing.
    std::vector<CycNum> v6 = {CycNum::one(6), CycNum::zero(6)};
    CHECK(membership_L(v6, LatticeKind::L1));
    CHECK(membership_L(v6, LatticeKind::L2));

    // L0 looks at a single coordinate.
    CHECK(membership_L({CycNum::one(4)}, LatticeKind::L0));
    CHECK(!membership_L({CycNum::from_rational(Rational(1, 3), 4)}, LatticeKind::L0));
}

TEST_CASE("stabilizer reflections: pinned small cases") {
    // (1/2, 1/2) against the sum-condition lattice: both transposition-like
    // reflections survive, no diagonal ones.
    CycNum half = CycNum::from_rational(Rational(1, 2), 2);
    auto st = stabilizer_reflections({half, half}, LatticeKind::L2);
    REQUIRE(st.size() == 2);
    CHECK(st[0].kind == Reflection::Kind::Transposition);
    CHECK(st[0].k == 0);
    CHECK(st[1].kind == Reflection::Kind::Transposition);
    CHECK(st[1].k == 1);

    // A diagonal pair deep in the lattice keeps everything.
    CycNum v = (CycNum::one(3) - CycNum::zeta_power(1, 3)).inverse();
    CHECK(stabilizer_reflections({v, v}, LatticeKind::L1).size() == 7);

    // Integral points keep everything too.
    std::vector<CycNum> w = {CycNum::zeta_power(1, 4), CycNum::one(4), CycNum::zero(4)};
    CHECK(stabilizer_reflections(w, LatticeKind::L2).size() == reflections_ge1n(4, 3).size());
}

namespace {

// Coordinate patterns whose reflection stabilizers have a closed form:
// k-blocks (value k/(1-zeta)), t-blocks (1/(1-zeta^t) for a proper divisor
// t of e), and a deep block (valuation too low for any proper power).
struct BlockLabel {
    enum Kind { KBlock, TBlock, Deep } kind;
    long long param;  // k or t
};

CycNum label_value(const BlockLabel& lbl, long long e) {
    CycNum one = CycNum::one(e);
    CycNum zeta = CycNum::zeta_power(1, e);
    switch (lbl.kind) {
        case BlockLabel::KBlock:
            return CycNum::from_rational(Rational(lbl.param), e) * (one - zeta).inverse();
        case BlockLabel::TBlock:
            return (one - CycNum::zeta_power(lbl.param, e)).inverse();
        case BlockLabel::Deep: {
            if (e == 2) return CycNum::from_rational(Rational(1, 4), 2);
            CycNum inv = (one - zeta).inverse();
            CycNum r = inv;
            long long extra = (e == 3) ? 1 : 2;
            for (long long i = 0; i < extra; ++i) r = r * inv;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

bool predicted_transposition(const BlockLabel& lbl, long long k) {
    switch (lbl.kind) {
        case BlockLabel::KBlock: return true;
        case BlockLabel::TBlock: return k % lbl.param == 0;
        case BlockLabel::Deep: return k == 0;
    }
    return false;
}

bool predicted_diagonal(const BlockLabel& lbl, long long k, long long p, LatticeKind lat) {
    switch (lbl.kind) {
        case BlockLabel::KBlock:
            if (lbl.param == 0) return true;
            return lat == LatticeKind::L1 ? true : k % p == 0;
        case BlockLabel::TBlock: {
            long long t = lbl.param;
            return lat == LatticeKind::L1 ? k % t == 0 : k % (t * p) == 0;
        }
        case BlockLabel::Deep:
            return false;
    }
    return false;
}

}  // namespace

TEST_CASE("stabilizer reflections follow the block pattern") {
    long long checked = 0;
    for (long long e : {2, 3, 4}) {
        long long p = smallest_prime_factor(e);
        std::vector<BlockLabel> labels;
        for (long long k = 0; k < p; ++k) labels.push_back({BlockLabel::KBlock, k});
        for (long long t = 2; t < e; ++t)
            if (e % t == 0) labels.push_back({BlockLabel::TBlock, t});
        labels.push_back({BlockLabel::Deep, 0});
        for (long long n : {2, 3}) {
            std::vector<size_t> assign(static_cast<size_t>(n), 0);
            while (true) {
                std::vector<CycNum> v;
                for (long long i = 0; i < n; ++i)
                    v.push_back(label_value(labels[assign[static_cast<size_t>(i)]], e));
                for (LatticeKind lat : {LatticeKind::L1, LatticeKind::L2}) {
                    std::vector<Reflection> want;
                    for (const Reflection& w : reflections_ge1n(e, n)) {
                        if (w.kind == Reflection::Kind::Transposition) {
                            if (assign[static_cast<size_t>(w.i)] !=
                                assign[static_cast<size_t>(w.j)])
                                continue;  // cross-block reflections never fix v
                            if (predicted_transposition(
                                    labels[assign[static_cast<size_t>(w.i)]], w.k))
                                want.push_back(w);
                        } else if (predicted_diagonal(
                                       labels[assign[static_cast<size_t>(w.i)]], w.k, p,
                                       lat)) {
                            want.push_back(w);
                        }
                    }
                    CAPTURE(e);
                    CAPTURE(n);
                    CAPTURE(lattice_str(lat));
                    CHECK(stabilizer_reflections(v, lat) == want);
                    ++checked;
                }
                size_t pos = 0;
                while (pos < assign.size() && ++assign[pos] == labels.size()) {
                    assign[pos] = 0;
                    ++pos;
                }
                if (pos == assign.size()) break;
            }
        }
    }
    CHECK(checked == 392);
}

TEST_CASE("pseudoparabolic shape lists") {
    auto strs = [](const std::vector<PseudoparabolicShape>& shapes) {
        std::vector<std::string> out;
        for (const auto& s : shapes) out.push_back(s.str());
        return out;
    };

    CHECK(strs(pseudoparabolics(GroupSpec::make(6, 1, 2), LatticeKind::L1)) ==
          std::vector<std::string>{"1", "S2", "G(6,1,1)", "G(6,1,2)"});
    CHECK(strs(pseudoparabolics(GroupSpec::make(6, 1, 2), LatticeKind::L2)) ==
          std::vector<std::string>{"1", "S2", "G(6,1,1)", "G(6,1,2)"});

    // Prime power: two wreath slots at L1, a wreath slot plus a sum-condition
    // slot at L2.
    CHECK(strs(pseudoparabolics(GroupSpec::make(2, 1, 2), LatticeKind::L1)) ==
          std::vector<std::string>{"1", "S2", "G(2,1,1)", "G(2,1,1) x G(2,1,1)",
                                   "G(2,1,2)"});
    CHECK(strs(pseudoparabolics(GroupSpec::make(2, 1, 2), LatticeKind::L2)) ==
          std::vector<std::string>{"1", "S2", "G(2,2,2)", "G(2,1,1)", "G(2,1,2)"});
    CHECK(strs(pseudoparabolics(GroupSpec::make(3, 1, 2), LatticeKind::L2)) ==
          std::vector<std::string>{"1", "S2", "G(3,3,2)", "G(3,1,1)", "G(3,1,2)"});

    auto g213 = strs(pseudoparabolics(GroupSpec::make(2, 1, 3), LatticeKind::L2));
    CHECK(std::find(g213.begin(), g213.end(), "G(2,2,3)") != g213.end());
    CHECK(std::find(g213.begin(), g213.end(), "G(2,1,1) x G(2,2,2)") != g213.end());

    // Sum-condition groups: one slot when e is not a prime power, p slots
    // otherwise -- but extra slots only matter at higher rank.
    CHECK(strs(pseudoparabolics(GroupSpec::make(1, 6, 3), LatticeKind::L1)) ==
          std::vector<std::string>{"1", "S2", "S3", "G(6,6,2)", "G(6,6,3)"});
    auto g334 = strs(pseudoparabolics(GroupSpec::make(1, 3, 4), LatticeKind::L2));
    CHECK(std::find(g334.begin(), g334.end(), "G(3,3,2) x G(3,3,2)") != g334.end());
    CHECK(std::find(g334.begin(), g334.end(), "G(3,3,4)") != g334.end());

    // Rank 0: only the trivial shape.
    auto trivial = pseudoparabolics(GroupSpec::make(5, 1, 0), LatticeKind::L1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].factors.empty());
    CHECK(trivial[0].str() == "1");
    CHECK(trivial[0].rank() == 0);

    // Ranks never exceed the ambient rank.
    for (const auto& s : pseudoparabolics(GroupSpec::make(2, 1, 3), LatticeKind::L1))
        CHECK(s.rank() <= 3);
}

TEST_CASE("symbol types attached to the lattices") {
    CHECK(springer_symbol_type(GroupSpec::make(2, 1, 3), LatticeKind::L1) ==
          SymbolType{2, 0});
    CHECK(springer_symbol_type(GroupSpec::make(2, 1, 3), LatticeKind::L2) ==
          SymbolType{2, 1});
    CHECK(springer_symbol_type(GroupSpec::make(9, 1, 2), LatticeKind::L1) ==
          SymbolType{3, 0});
    CHECK(springer_symbol_type(GroupSpec::make(9, 1, 2), LatticeKind::L2) ==
          SymbolType{3, 2});
    CHECK(springer_symbol_type(GroupSpec::make(6, 1, 2), LatticeKind::L1) ==
          SymbolType{1, 0});
    CHECK(springer_symbol_type(GroupSpec::make(6, 1, 2), LatticeKind::L2) ==
          SymbolType{1, 0});
    CHECK(springer_symbol_type(GroupSpec::make(1, 3, 3), LatticeKind::L2) ==
          SymbolType{3, 0});
    CHECK(springer_symbol_type(GroupSpec::make(1, 6, 3), LatticeKind::L1) ==
          SymbolType{1, 0});
}

TEST_CASE("springer representations") {
    // Non-prime-power wreath groups: exactly the specials, for either lattice.
    GroupSpec g612 = GroupSpec::make(6, 1, 2);
    auto spec = special_irreps(g612);
    std::sort(spec.begin(), spec.end());
    for (LatticeKind lat : {LatticeKind::L1, LatticeKind::L2}) {
        auto reps = springer_reps(g612, lat);
        std::sort(reps.begin(), reps.end());
        CHECK(reps == spec);
    }

    // The sum-condition lattice of a prime-power group is finer.
    GroupSpec g = GroupSpec::make(1, 3, 3);
    CHECK_THROWS_AS(springer_reps(g, LatticeKind::L1), std::domain_error);
    auto reps333 = springer_reps(g, LatticeKind::L2);
    auto spec333 = special_irreps(g);
    for (const auto& s : spec333)
        CHECK(std::find(reps333.begin(), reps333.end(), s) != reps333.end());

    // Springer sets always contain the specials.
    for (auto gs : {GroupSpec::make(2, 1, 3), GroupSpec::make(3, 1, 3),
                    GroupSpec::make(2, 1, 4)}) {
        auto sp = special_irreps(gs);
        for (LatticeKind lat : {LatticeKind::L1, LatticeKind::L2}) {
            auto reps = springer_reps(gs, lat);
            for (const auto& s : sp) {
                CAPTURE(gs.str());
                CAPTURE(lattice_str(lat));
                CAPTURE(s.str());
                CHECK(std::find(reps.begin(), reps.end(), s) != reps.end());
            }
        }
    }

    // Agreement with the label-set construction: type (p,0) at L1 for a
    // prime-power wreath group.
    auto reps = springer_reps(GroupSpec::make(2, 1, 3), LatticeKind::L1);
    auto labels = springer_multipartitions_ge1n(2, 3, 2, 0);
    std::set<std::string> a, b;
    for (const auto& r : reps) a.insert(r.str());
    for (const auto& m : labels) b.insert(m.str());
    CHECK(a == b);
}

TEST_CASE("dihedral character tables") {
    CHECK(dihedral_irreps(2).size() == 4);
    CHECK(dihedral_irreps(3).size() == 3);
    CHECK(dihedral_irreps(4).size() == 5);
    CHECK(dihedral_irreps(6).size() == 6);

    auto irr6 = dihedral_irreps(6);
    std::vector<std::string> labels;
    for (const auto& c : irr6) labels.push_back(c.label());
    CHECK(labels ==
          std::vector<std::string>{"χ0", "χ1", "χ2", "χ3", "χ3'", "χ6"});
    // b-invariants and dimensions.
    CHECK(irr6[0].b() == 0);
    CHECK(irr6[0].dim(6) == 1);
    CHECK(irr6[1].dim(6) == 2);
    CHECK(irr6[2].dim(6) == 2);
    CHECK(irr6[3].dim(6) == 1);
    CHECK(irr6[4].dim(6) == 1);
    CHECK(irr6[5].dim(6) == 1);
    // Sum of squares of dimensions = 2e.
    for (long long e = 2; e <= 9; ++e) {
        long long sum = 0;
        for (const auto& c : dihedral_irreps(e)) sum += c.dim(e) * c.dim(e);
        CHECK(sum == 2 * e);
    }

    auto sp = dihedral_specials(6);
    REQUIRE(sp.size() == 3);
    CHECK(sp[0] == DihedralIrrep{0, false});
    CHECK(sp[1] == DihedralIrrep{1, false});
    CHECK(sp[2] == DihedralIrrep{6, false});
}

TEST_CASE("dihedral pseudoparabolic subgroups") {
    auto strs = [](const std::vector<DihedralSubgroup>& subs) {
        std::vector<std::string> out;
        for (const auto& s : subs) out.push_back(s.str());
        return out;
    };
    CHECK(strs(dihedral_pseudoparabolics(2)) ==
          std::vector<std::string>{"G(1,1,2)", "G'(1,1,2)"});
    CHECK(strs(dihedral_pseudoparabolics(4)) ==
          std::vector<std::string>{"G(1,1,2)", "G'(1,1,2)", "G(2,2,2)"});
    CHECK(strs(dihedral_pseudoparabolics(6)) ==
          std::vector<std::string>{"G(1,1,2)", "G'(1,1,2)", "G(2,2,2)", "G(3,3,2)"});
    CHECK(strs(dihedral_pseudoparabolics(12)) ==
          std::vector<std::string>{"G(1,1,2)", "G'(1,1,2)", "G(2,2,2)", "G'(2,2,2)",
                                   "G(3,3,2)", "G'(3,3,2)", "G(4,4,2)"});
    // The 8-gon group: 4 divides 8 but G'(4,4,2) needs 8/4 even (it is), yet
    // 4 is not below 8/2 = 4, so no primed copy at 4.
    auto pp8 = strs(dihedral_pseudoparabolics(8));
    CHECK(std::find(pp8.begin(), pp8.end(), "G'(4,4,2)") == pp8.end());
    CHECK(std::find(pp8.begin(), pp8.end(), "G(4,4,2)") != pp8.end());
    CHECK(std::find(pp8.begin(), pp8.end(), "G'(2,2,2)") != pp8.end());
}

TEST_CASE("dihedral springer characters") {
    auto sp6 = dihedral_springer(6);
    std::vector<std::string> labels;
    for (const auto& c : sp6) labels.push_back(c.label());
    CHECK(labels == std::vector<std::string>{"χ0", "χ1", "χ2", "χ3", "χ6"});

    auto sp4 = dihedral_springer(4);
    CHECK(sp4.size() == 4);
    for (const auto& c : sp4) CHECK(!c.primed);

    // The Klein four-group: everything is a Springer character.
    CHECK(dihedral_springer(2).size() == 4);

    auto sp12 = dihedral_springer(12);
    labels.clear();
    for (const auto& c : sp12) labels.push_back(c.label());
    CHECK(labels ==
          std::vector<std::string>{"χ0", "χ1", "χ2", "χ3", "χ4", "χ12"});
}

TEST_CASE("dihedral truncated induction") {
    DihedralIrrep sign3{3, false};
    CHECK(dihedral_j_induce(3, 6, false, sign3) == DihedralIrrep{3, false});
    CHECK(dihedral_j_induce(3, 6, true, sign3) == DihedralIrrep{3, true});
    DihedralIrrep refl{1, false};
    CHECK(dihedral_j_induce(6, 6, false, refl) == refl);
    CHECK(dihedral_j_induce(1, 6, false, DihedralIrrep{0, false}) ==
          DihedralIrrep{0, false});
    CHECK(dihedral_j_induce(1, 6, false, DihedralIrrep{1, false}) ==
          DihedralIrrep{1, false});
    // The sign of the primed half-index subgroup lands on the primed character.
    CHECK(dihedral_j_induce(2, 4, true, DihedralIrrep{2, false}) ==
          DihedralIrrep{2, true});
    CHECK(dihedral_j_induce(2, 4, false, DihedralIrrep{2, false}) ==
          DihedralIrrep{2, false});

    // Non-divisors, non-special inputs, and parity violations are rejected.
    CHECK_THROWS_AS(dihedral_j_induce(4, 6, false, refl), std::domain_error);
    CHECK_THROWS_AS(dihedral_j_induce(3, 6, true, DihedralIrrep{2, false}),
                    std::domain_error);
    CHECK_THROWS_AS(dihedral_j_induce(2, 6, true, DihedralIrrep{0, false}),
                    std::domain_error);
}

TEST_CASE("witness points realize each pseudoparabolic stabilizer") {
    for (long long e = 2; e <= 12; ++e) {
        std::vector<DihedralSubgroup> subs = dihedral_pseudoparabolics(e);
        subs.push_back({e, false});  // the full group
        for (const auto& sub : subs) {
            // In the square lattice of the Klein four-group, any point fixed
            // by one unprimed reflection is fixed by the other too, so no
            // witness can isolate the first alone.
            if (e == 2 && sub.d == 1 && !sub.primed) {
                CHECK_THROWS_AS(dihedral_witness(1, 2, false), std::domain_error);
                continue;
            }
            CAPTURE(e);
            CAPTURE(sub.str());
            CycNum w = dihedral_witness(sub.d, e, sub.primed);
            auto got = stabilizer_reflections({w}, LatticeKind::L0);
            auto want = dihedral_subgroup_reflections(sub.d, e, sub.primed);
            CHECK(got == want);
        }
    }
}
