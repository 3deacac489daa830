#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spets/group.hpp"
#include "spets/multipartition.hpp"

namespace spets {

// Symbol type (r,s): entries along a row step by r; rows other than row 0
// are offset by s.
struct SymbolType {
    long long r = 1;
    long long s = 0;
    bool operator==(const SymbolType&) const = default;
};

// A weight for G(de,e,n): de integers modulo the all-ones vector, constant
// on residue classes mod d. Canonical representative has minimum entry 0.
class Weight {
public:
    Weight() = default;
    // Normalizes so the minimum entry is 0; validates the congruence
    // constraint for the given d (entries constant on residues mod d).
    Weight(std::vector<long long> entries, long long d);

    static Weight zero(long long q);                     // (0,...,0)
    static Weight basic(long long q);                    // (1,0,...,0); requires e = 1
    static Weight spetsial(long long d, long long e);    // 1 at indices = 0 mod d

    const std::vector<long long>& entries() const { return entries_; }
    int count() const { return static_cast<int>(entries_.size()); }

    bool operator==(const Weight&) const = default;

private:
    std::vector<long long> entries_;
};

struct Position {
    int i = 0;  // row
    int j = 0;  // index within row
    bool operator==(const Position&) const = default;
};

// Strict total order on positions: (i,j) before (k,l) iff j < l, or j = l
// with k > 0 and (i = 0 or i > k). Within a column: row 0 first, then rows
// q-1, q-2, ..., 1.
bool position_before(const Position& a, const Position& b);

// All positions of the given shape, listed in increasing order.
std::vector<Position> positions_in_order(const std::vector<long long>& shape);

// A q-tuple of weakly increasing rows of non-negative integers with a type
// (r,s). Presymbols are compared and manipulated at a fixed shape; the shift
// operation moves between depths.
class Presymbol {
public:
    Presymbol() = default;
    Presymbol(std::vector<std::vector<long long>> rows, SymbolType type);

    // Row 0 = (0, r, ..., (m_0-1)r); row i>0 = (s, r+s, ..., (m_i-1)r+s).
    static Presymbol protosymbol(SymbolType type, const std::vector<long long>& shape);

    const std::vector<std::vector<long long>>& rows() const { return rows_; }
    SymbolType type() const { return type_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    std::vector<long long> shape() const;
    long long entry(const Position& p) const {
        return rows_[static_cast<size_t>(p.i)][static_cast<size_t>(p.j)];
    }

    // Prepends 0 to row 0 and s to the other rows, adding r to all previous
    // entries; shape grows by one in every row.
    Presymbol shifted() const;
    // Inverse of shifted() when possible.
    std::optional<Presymbol> unshifted() const;

    // Rows moved down by d: row i of the result is row (i-d) mod q.
    Presymbol rotated_down(long long d) const;

    // Weakly increasing as a map from positions to integers.
    bool monotone() const;

    // Combinatorial statistics against the protosymbol of the same shape:
    // a: sum over pairs p before q of min(v_p, v_q) - proto_p;
    // b: sum over pairs of v_p - proto_p (value at the earlier position).
    long long a_stat() const;
    long long b_stat() const;

    // All entries pooled, sorted ascending.
    std::vector<long long> entry_multiset() const;

    // Subtracts the protosymbol of the same shape and strips zero padding.
    Multipartition to_multipartition() const;

    // Rows '|'-separated, entries comma-separated ascending, '-' for an
    // empty row: "0,5|1|2".
    std::string str() const;
    static Presymbol parse(const std::string& text, SymbolType type);

    bool operator==(const Presymbol&) const = default;
    // Lexicographic by rows; used to pick canonical representatives.
    bool operator<(const Presymbol& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<long long>> rows_;
    SymbolType type_;
};

// The symbol of a multipartition orbit at a type and weight: the collection
// of presymbols of all rotation lifts, built at the canonical shape
// (minimal depth such that every lift fits) plus an optional extra depth.
class Symbol {
public:
    Symbol() = default;
    // `lift` is any representative; d, e from the group. The weight must
    // have q = d*e entries.
    Symbol(const Multipartition& lift, const GroupSpec& group, SymbolType type,
           const Weight& weight, long long extra_depth = 0);

    const GroupSpec& group() const { return group_; }
    SymbolType type() const { return type_; }
    const Weight& weight() const { return weight_; }
    const Multipartition& lift() const { return lift_; }
    long long extra_depth() const { return extra_depth_; }

    // One presymbol per rotation power j = 0..e-1: the presymbol of
    // rotate^j(lift).
    const std::vector<Presymbol>& representatives() const { return reps_; }
    // Lexicographically minimal representative.
    const Presymbol& canonical() const { return reps_[static_cast<size_t>(canonical_)]; }

    // Some representative is monotone. Stable under extra shift depth.
    bool distinguished() const;

    // Statistics of the canonical representative. For the weight/type
    // combinations the theory uses (weight zero with s = 0, or e = 1) the
    // a-statistic does not depend on the representative.
    long long a_stat() const { return canonical().a_stat(); }
    long long b_stat() const { return canonical().b_stat(); }

    std::string str() const { return canonical().str(); }

private:
    GroupSpec group_;
    SymbolType type_;
    Weight weight_;
    Multipartition lift_;
    long long extra_depth_ = 0;
    std::vector<Presymbol> reps_;
    int canonical_ = 0;
};

// Minimal shape of the symbol of `lift` at the given weight: entry i is
// w_i + m with m minimal so every rotation lift fits.
std::vector<long long> minimal_shape(const Multipartition& lift, const GroupSpec& group,
                                     const Weight& weight);

// Equal pooled entry multisets for some pair of representatives after
// re-shifting both symbols to a common shape. Requires equal type/weight.
bool similar(const Symbol& a, const Symbol& b);

// Canonical similarity key at a caller-chosen extra depth (measured above
// the symbol's own minimal shape): the minimal pooled multiset over
// representatives. Symbols are similar iff their keys at a common shape
// agree, provided every representative of one symbol has the same multiset
// (true for the weights used for families).
std::vector<long long> similarity_key(const Symbol& sym, long long extra_depth);

}  // namespace spets
