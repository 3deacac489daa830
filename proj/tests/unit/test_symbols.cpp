#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "spets/multipartition.hpp"
#include "spets/symbol.hpp"

using namespace spets;

TEST_CASE("position order: row 0 first, then bottom rows upward, column by column") {
    // Shape (2,1,1): column 0 holds rows 0, 2, 1; column 1 only row 0.
    auto order = positions_in_order({2, 1, 1});
    REQUIRE(order.size() == 4);
    CHECK(order[0] == Position{0, 0});
    CHECK(order[1] == Position{2, 0});
    CHECK(order[2] == Position{1, 0});
    CHECK(order[3] == Position{0, 1});

    auto order2 = positions_in_order({3, 2, 2});
    REQUIRE(order2.size() == 7);
    CHECK(order2[0] == Position{0, 0});
    CHECK(order2[1] == Position{2, 0});
    CHECK(order2[2] == Position{1, 0});
    CHECK(order2[3] == Position{0, 1});
    CHECK(order2[4] == Position{2, 1});
    CHECK(order2[5] == Position{1, 1});
    CHECK(order2[6] == Position{0, 2});

    // position_before is a strict total order on these.
    for (size_t x = 0; x < order2.size(); ++x)
        for (size_t y = 0; y < order2.size(); ++y)
            CHECK(position_before(order2[x], order2[y]) == (x < y));
}

TEST_CASE("protosymbols, shift, and rotation") {
    Presymbol proto = Presymbol::protosymbol(SymbolType{3, 1}, {2, 1, 1});
    CHECK(proto.str() == "0,3|1|1");
    CHECK(proto.type().r == 3);
    CHECK(proto.shape() == std::vector<long long>{2, 1, 1});
    CHECK(proto.monotone());

    Presymbol p = Presymbol::parse("0,5|1|2", SymbolType{3, 1});
    CHECK(p.entry(Position{0, 1}) == 5);
    Presymbol sh = p.shifted();
    CHECK(sh.str() == "0,3,8|1,4|1,5");
    REQUIRE(sh.unshifted().has_value());
    CHECK(*sh.unshifted() == p);

    // A presymbol that does not start at the protosymbol offsets cannot be
    // unshifted.
    CHECK(!Presymbol::parse("3|-|-", SymbolType{3, 1}).unshifted().has_value());

    Presymbol rot = p.rotated_down(1);
    CHECK(rot.str() == "2|0,5|1");
    CHECK(p.rotated_down(3) == p);
    CHECK(p.rotated_down(1).rotated_down(2) == p);

    // Shift commutes with the multipartition of the presymbol.
    CHECK(p.to_multipartition() == sh.to_multipartition());
    CHECK(p.to_multipartition() == Multipartition::parse("2|-|1"));

    CHECK(Presymbol::parse("0,5|1|2", SymbolType{3, 1}).monotone() == false);
    CHECK(Presymbol::parse("0,4|2|2", SymbolType{3, 1}).monotone());
}

TEST_CASE("entry pools and statistics") {
    Presymbol p = Presymbol::parse("0,4|3|1", SymbolType{3, 1});
    CHECK(p.entry_multiset() == std::vector<long long>{0, 1, 3, 4});

    // On a monotone representative the two pair statistics agree.
    CHECK(p.monotone());
    CHECK(p.a_stat() == p.b_stat());

    // On a non-monotone one the a-statistic is strictly smaller.
    Presymbol q = Presymbol::parse("0,3|4|1", SymbolType{3, 1});
    CHECK(!q.monotone());
    CHECK(q.a_stat() < q.b_stat());
    // Same entries, same b (b only sees the multiset-through-positions).
    CHECK(q.entry_multiset() == p.entry_multiset());
}

TEST_CASE("weights") {
    CHECK(Weight::zero(3).entries() == std::vector<long long>{0, 0, 0});
    CHECK(Weight::basic(3).entries() == std::vector<long long>{1, 0, 0});
    // One wreath slot: spetsial = basic; no slots (d = 1): spetsial = zero.
    CHECK(Weight::spetsial(3, 1) == Weight::basic(3));
    CHECK(Weight::spetsial(1, 3) == Weight::zero(3));
    CHECK(Weight::spetsial(2, 2).entries() == std::vector<long long>{1, 0, 1, 0});

    // Normalization: minimum entry becomes 0.
    CHECK(Weight({2, 1, 1}, 3).entries() == std::vector<long long>{1, 0, 0});
    // Entries must be constant on residue classes mod d.
    CHECK_NOTHROW(Weight({1, 0, 1, 0}, 2));
    CHECK_THROWS_AS(Weight({1, 0, 0, 0}, 2), std::invalid_argument);
}

namespace {

struct SymbolRow {
    const char* mp;
    const char* symbol;
    bool distinguished;
};

}  // namespace

TEST_CASE("the 22 symbols of the 3-slot wreath group on 3 boxes") {
    // Type (3,1) at the basic weight (1,0,0). One row per multipartition:
    // its symbol at minimal depth and whether it is distinguished. The entry
    // "-|3|-" has symbol (0,3|4|1), which reads 0,1,4,3 along the position
    // order, so it is not distinguished (and no shift changes that).
    const std::vector<SymbolRow> rows = {
        {"3|-|-", "3|-|-", true},
        {"2|-|1", "0,5|1|2", false},
        {"1|1,1|-", "0,3,7|2,5|1,4", true},
        {"-|3|-", "0,3|4|1", false},
        {"-|1,1|1", "0,3,6|2,5|1,5", true},
        {"-|-|2,1", "0,3,6|1,4|2,6", false},
        {"2,1|-|-", "1,5|1|1", true},
        {"1,1|1|-", "1,4|2|1", true},
        {"1|1|1", "0,4|2|2", true},
        {"-|2,1|-", "0,3,6|2,6|1,4", true},
        {"-|1|2", "0,3|2|3", false},
        {"-|-|1,1,1", "0,3,6,9|1,4,7|2,5,8", false},
        {"1,1,1|-|-", "1,4,7|1,4|1,4", true},
        {"1,1|-|1", "1,4|1|2", false},
        {"1|-|2", "0,4|1|3", false},
        {"-|1,1,1|-", "0,3,6,9|2,5,8|1,4,7", true},
        {"-|1|1,1", "0,3,6|1,5|2,5", false},
        {"2|1|-", "0,5|2|1", true},
        {"1|2|-", "0,4|3|1", true},
        {"1|-|1,1", "0,3,7|1,4|2,5", false},
        {"-|2|1", "0,3|3|2", true},
        {"-|-|3", "0,3|1|4", false},
    };
    REQUIRE(rows.size() == 22);
    CHECK(enumerate_multipartitions(3, 3).size() == 22);

    GroupSpec g = GroupSpec::make(3, 1, 3);
    int distinguished = 0;
    for (const SymbolRow& row : rows) {
        CAPTURE(row.mp);
        Multipartition mp = Multipartition::parse(row.mp);
        Symbol sym(mp, g, SymbolType{3, 1}, Weight::basic(3));
        CHECK(sym.str() == row.symbol);
        CHECK(sym.distinguished() == row.distinguished);
        // Adding shift depth never changes the verdict.
        Symbol deeper(mp, g, SymbolType{3, 1}, Weight::basic(3), 2);
        CHECK(deeper.distinguished() == row.distinguished);
        // The symbol determines the multipartition.
        CHECK(sym.canonical().to_multipartition() == mp);
        if (row.distinguished) ++distinguished;
    }
    CHECK(distinguished == 12);
}

TEST_CASE("similarity classes of type-(3,1) symbols") {
    GroupSpec g = GroupSpec::make(3, 1, 3);
    Weight w = Weight::basic(3);
    Symbol a(Multipartition::parse("1|2|-"), g, SymbolType{3, 1}, w);   // (0,4|3|1)
    Symbol b(Multipartition::parse("-|3|-"), g, SymbolType{3, 1}, w);   // (0,3|4|1)
    Symbol c(Multipartition::parse("-|-|3"), g, SymbolType{3, 1}, w);   // (0,3|1|4)
    Symbol d(Multipartition::parse("3|-|-"), g, SymbolType{3, 1}, w);   // (3|-|-)

    CHECK(similar(a, b));
    CHECK(similar(a, c));
    CHECK(similar(b, c));
    CHECK(!similar(a, d));
    CHECK(!similar(b, d));

    // Exactly one member of the class {a, b, c} is distinguished.
    int count = (a.distinguished() ? 1 : 0) + (b.distinguished() ? 1 : 0) +
                (c.distinguished() ? 1 : 0);
    CHECK(count == 1);
    CHECK(a.distinguished());

    // similarity_key matches pairwise similarity on the whole group.
    std::vector<Multipartition> all = enumerate_multipartitions(3, 3);
    for (const auto& x : all)
        for (const auto& y : all) {
            Symbol sx(x, g, SymbolType{3, 1}, w);
            Symbol sy(y, g, SymbolType{3, 1}, w);
            long long dx = sx.canonical().shape()[0];
            long long dy = sy.canonical().shape()[0];
            long long common = std::max(dx, dy);
            bool keys_equal =
                similarity_key(sx, common - dx) == similarity_key(sy, common - dy);
            CHECK(keys_equal == similar(sx, sy));
        }
}

TEST_CASE("the 8 symbols of the index-3 subgroup on 3 boxes") {
    // G(3,3,3): type (3,0) at the zero weight. Symbols are rotation classes;
    // each table row lists one lift and the presymbol of that lift, which
    // must appear among the symbol's representatives.
    const std::vector<SymbolRow> rows = {
        {"3|-|-", "3|0|0", true},
        {"2|-|1", "2|0|1", false},
        {"2,1|-|-", "1,5|0,3|0,3", true},
        {"1,1|1|-", "1,4|0,4|0,3", true},
        {"1,1,1|-|-", "1,4,7|0,3,6|0,3,6", true},
        {"1,1|-|1", "1,4|0,3|0,4", false},
        {"2|1|-", "2|1|0", true},
        {"1|1|1", "1|1|1", true},
    };
    GroupSpec g = GroupSpec::make(1, 3, 3);
    CHECK(enumerate_orbits(g).size() == rows.size());

    int distinguished = 0;
    for (const SymbolRow& row : rows) {
        CAPTURE(row.mp);
        Multipartition lift = Multipartition::parse(row.mp);
        Symbol sym(lift, g, SymbolType{3, 0}, Weight::zero(3));
        Presymbol expected = Presymbol::parse(row.symbol, SymbolType{3, 0});
        const auto& reps = sym.representatives();
        CHECK(reps.size() == 3);
        CHECK(std::find(reps.begin(), reps.end(), expected) != reps.end());
        CHECK(sym.distinguished() == row.distinguished);
        if (row.distinguished) ++distinguished;

        // The symbol does not depend on the choice of lift.
        Symbol rotated(lift.rotated(1), g, SymbolType{3, 0}, Weight::zero(3));
        CHECK(rotated.canonical() == sym.canonical());
        CHECK(rotated.distinguished() == sym.distinguished());
    }
    CHECK(distinguished == 6);
}

TEST_CASE("cyclic groups: one column symbol per slot, two similarity classes") {
    for (long long e = 2; e <= 6; ++e) {
        CAPTURE(e);
        GroupSpec g = GroupSpec::make(e, 1, 1);
        Weight w = Weight::basic(e);

        std::vector<Symbol> syms;
        for (long long i = 0; i < e; ++i) {
            std::vector<Partition> comps(static_cast<size_t>(e));
            comps[static_cast<size_t>(i)] = Partition::parse("1");
            Symbol sym(Multipartition(comps), g, SymbolType{1, 0}, w);
            syms.push_back(sym);

            std::string expected;
            if (i == 0) {
                expected = "1";
                for (long long j = 1; j < e; ++j) expected += "|-";
            } else {
                expected = "0,1";
                for (long long j = 1; j < e; ++j) expected += (j == i) ? "|1" : "|0";
            }
            CHECK(sym.str() == expected);
            // Only the first two slots give distinguished symbols.
            CHECK(sym.distinguished() == (i <= 1));
        }

        // Similarity classes: {slot 0} and {slots 1..e-1}.
        for (long long i = 1; i < e; ++i) {
            CHECK(!similar(syms[0], syms[static_cast<size_t>(i)]));
            for (long long j = 1; j < e; ++j)
                CHECK(similar(syms[static_cast<size_t>(i)], syms[static_cast<size_t>(j)]));
        }
    }
}

TEST_CASE("minimal shapes") {
    GroupSpec g = GroupSpec::make(3, 1, 3);
    CHECK(minimal_shape(Multipartition::parse("3|-|-"), g, Weight::basic(3)) ==
          std::vector<long long>{1, 0, 0});
    CHECK(minimal_shape(Multipartition::parse("-|3|-"), g, Weight::basic(3)) ==
          std::vector<long long>{2, 1, 1});
    CHECK(minimal_shape(Multipartition::parse("1,1,1|-|-"), g, Weight::basic(3)) ==
          std::vector<long long>{3, 2, 2});
    // Rotation classes share one shape across all lifts.
    GroupSpec h = GroupSpec::make(1, 3, 3);
    CHECK(minimal_shape(Multipartition::parse("2,1|-|-"), h, Weight::zero(3)) ==
          std::vector<long long>{2, 2, 2});
    CHECK(minimal_shape(Multipartition::parse("3|-|-"), h, Weight::zero(3)) ==
          std::vector<long long>{1, 1, 1});
}
