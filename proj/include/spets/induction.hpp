#pragma once

#include <utility>
#include <vector>

#include "spets/group.hpp"
#include "spets/invariants.hpp"
#include "spets/multipartition.hpp"
#include "spets/symbol.hpp"

namespace spets {

// Truncated induction from a product of wreath-type factors along the
// componentwise sum: the induced label of E_{a} x E_{b} x ... is E_{a+b+...}.
// All pieces need the same component count.
Multipartition j_sum(const std::vector<Multipartition>& pieces);
Multipartition j_sum(const Multipartition& b1, const Multipartition& b2);

// One column piece of a multipartition: the label whose component `twist` is
// a column of `size` ones. These are the building blocks every label is a
// j_sum of (column sizes run over the conjugate of each component).
struct ColumnPiece {
    int twist = 0;
    long long size = 0;
    auto operator<=>(const ColumnPiece&) const = default;
};

std::vector<ColumnPiece> column_decomposition(const Multipartition& mp);
Multipartition column_multipartition(const ColumnPiece& piece, long long q);

// Splits a type-(r,s) presymbol into presymbols of types (r1,s1) and
// (r-r1, s-s1): an entry v = a*r + b (0 <= b < r) maps to a*r1 + kappa(b)
// resp. a*(r-r1) + (b - kappa(b)). For a distinguished input both halves are
// distinguished and their labels sum to the input's label.
std::pair<Presymbol, Presymbol> split_presymbol(const Presymbol& sym, long long r1, long long s1);

// Multipartition-level split: builds the basic-weight type-(r,s) symbol of
// `lift` in G(e,1,n) (which must be distinguished), splits it into types
// (r1,s1) and (r2,s2), and returns the labels of the two halves. Requires
// r1+r2 = r, s1+s2 = s, 0 <= s1 <= r1, 0 <= s2 <= r2. The halves sum to
// `lift` and their own symbols are distinguished.
std::pair<Multipartition, Multipartition> split_multipartition(const Multipartition& lift,
                                                               long long r, long long s,
                                                               long long r1, long long s1,
                                                               long long r2, long long s2);

// Truncated induction from G(e,1,n) to G(ef,1,n), computed through the order
// on symbol positions: each entry of the target basic-weight symbol copies
// the source entry with the same number of later positions; target positions
// beyond the source range get 0.
Multipartition induce_to_multiple(const Multipartition& beta, long long f);

// Same map via direct dilation: component i of the source at canonical
// padding spreads its parts, every f-th from the top, across target
// components ke+i (k = 0..f-1). Used to cross-check induce_to_multiple.
Multipartition induce_to_multiple_by_dilation(const Multipartition& beta, long long f);

// The unique lift in P(e,1,n) of a special rotation orbit of G(e,e,n) whose
// type-(1,1) basic-weight symbol is distinguished (equivalently: whose
// rotated zero-weight type-(1,0) presymbol is monotone). Truncated induction
// to G(e,1,n) sends every component of the orbit to this lift's label.
Multipartition unique_special_lift(const MultipartitionOrbit& orbit, long long e);

// { alpha in P(e,1,n) : type-(r,s) basic-weight symbol distinguished },
// requires 1 <= r and 0 <= s <= r.
std::vector<Multipartition> springer_multipartitions_ge1n(long long e, long long n, long long r,
                                                          long long s);

// The same set built as sums alpha_1 + ... + alpha_r where the first s
// pieces have distinguished type-(1,1) symbols and the rest are special.
std::vector<Multipartition> springer_multipartitions_ge1n_by_sums(long long e, long long n,
                                                                  long long r, long long s);

// { E_{alpha,l} : type-(r,0) zero-weight symbol of alpha distinguished } for
// G(e,e,n), all components l of each qualifying orbit.
std::vector<IrrepLabel> springer_irreps_geen(long long e, long long n, long long r);

}  // namespace spets
