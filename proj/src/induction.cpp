#include "spets/induction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

namespace {

std::vector<long long> padded_parts(const Partition& p, long long parts) {
    if (static_cast<long long>(p.parts().size()) > parts)
        throw std::logic_error("padding below the number of stored parts");
    std::vector<long long> out(static_cast<size_t>(parts), 0);
    std::copy(p.parts().begin(), p.parts().end(),
              out.begin() + (parts - static_cast<long long>(p.parts().size())));
    return out;
}

void require_type(long long r, long long s) {
    if (r < 1) throw std::domain_error("symbol type needs r >= 1");
    if (s < 0 || s > r) throw std::domain_error("symbol type needs 0 <= s <= r");
}

}  // namespace

Multipartition j_sum(const std::vector<Multipartition>& pieces) {
    if (pieces.empty()) throw std::domain_error("j_sum of no pieces");
    Multipartition acc = pieces.front();
    for (size_t i = 1; i < pieces.size(); ++i) acc = acc + pieces[i];
    return acc;
}

Multipartition j_sum(const Multipartition& b1, const Multipartition& b2) {
    return j_sum(std::vector<Multipartition>{b1, b2});
}

std::vector<ColumnPiece> column_decomposition(const Multipartition& mp) {
    std::vector<ColumnPiece> out;
    for (int i = 0; i < mp.count(); ++i) {
        Partition columns = mp.component(i).conjugate();
        for (long long part : columns.parts()) out.push_back(ColumnPiece{i, part});
    }
    return out;
}

Multipartition column_multipartition(const ColumnPiece& piece, long long q) {
    if (piece.twist < 0 || piece.twist >= q) throw std::domain_error("column twist out of range");
    if (piece.size < 0) throw std::domain_error("column size must be non-negative");
    std::vector<Partition> comps(static_cast<size_t>(q));
    comps[static_cast<size_t>(piece.twist)] =
        Partition(std::vector<long long>(static_cast<size_t>(piece.size), 1));
    return Multipartition(std::move(comps));
}

std::pair<Presymbol, Presymbol> split_presymbol(const Presymbol& sym, long long r1,
                                                long long s1) {
    long long r = sym.type().r;
    long long s = sym.type().s;
    require_type(r, s);
    long long r2 = r - r1;
    long long s2 = s - s1;
    if (r1 < 0 || r2 < 0 || s1 < 0 || s2 < 0 || s1 > r1 || s2 > r2)
        throw std::domain_error("invalid split of a symbol type");

    auto kappa = [&](long long b) -> long long {
        if (b <= s1) return b;
        if (b <= s) return s1;
        if (b <= s2 + r1) return b - s2;
        return r1;
    };

    std::vector<std::vector<long long>> rows1 = sym.rows();
    std::vector<std::vector<long long>> rows2 = sym.rows();
    for (size_t i = 0; i < rows1.size(); ++i) {
        for (size_t j = 0; j < rows1[i].size(); ++j) {
            long long v = sym.rows()[i][j];
            long long a = v / r;
            long long b = v % r;
            long long k = kappa(b);
            rows1[i][j] = checked_add(checked_mul(a, r1), k);
            rows2[i][j] = checked_add(checked_mul(a, r2), b - k);
        }
    }
    return {Presymbol(std::move(rows1), SymbolType{r1, s1}),
            Presymbol(std::move(rows2), SymbolType{r2, s2})};
}

std::pair<Multipartition, Multipartition> split_multipartition(const Multipartition& lift,
                                                               long long r, long long s,
                                                               long long r1, long long s1,
                                                               long long r2, long long s2) {
    require_type(r, s);
    if (r1 + r2 != r || s1 + s2 != s)
        throw std::domain_error("split types must add up to the input type");
    if (r1 < 0 || r2 < 0 || s1 < 0 || s2 < 0 || s1 > r1 || s2 > r2)
        throw std::domain_error("invalid split of a symbol type");
    long long e = lift.count();
    GroupSpec g = GroupSpec::make(e, 1, lift.total());
    Symbol sym(lift, g, SymbolType{r, s}, Weight::basic(e));
    if (!sym.distinguished())
        throw std::domain_error("split of a non-distinguished symbol: " + sym.str());
    auto [first, second] = split_presymbol(sym.canonical(), r1, s1);
    return {first.to_multipartition(), second.to_multipartition()};
}

Multipartition induce_to_multiple_by_dilation(const Multipartition& beta, long long f) {
    if (f < 1) throw std::domain_error("index multiplier must be >= 1");
    long long e = beta.count();
    GroupSpec src = GroupSpec::make(e, 1, beta.total());
    std::vector<long long> shape = minimal_shape(beta, src, Weight::basic(e));

    std::vector<Partition> out(static_cast<size_t>(e * f));
    for (long long i = 0; i < e; ++i) {
        std::vector<long long> parts = padded_parts(beta.component(static_cast<int>(i)), shape[static_cast<size_t>(i)]);
        long long top = shape[static_cast<size_t>(i)] - 1;
        for (long long k = 0; k < f; ++k) {
            std::vector<long long> picked;
            for (long long idx = top - k; idx >= 0; idx -= f)
                picked.push_back(parts[static_cast<size_t>(idx)]);
            std::reverse(picked.begin(), picked.end());
            out[static_cast<size_t>(k * e + i)] = Partition(std::move(picked));
        }
    }
    return Multipartition(std::move(out));
}

Multipartition induce_to_multiple(const Multipartition& beta, long long f) {
    if (f < 1) throw std::domain_error("index multiplier must be >= 1");
    long long e = beta.count();
    GroupSpec src = GroupSpec::make(e, 1, beta.total());
    std::vector<long long> shape = minimal_shape(beta, src, Weight::basic(e));
    long long m = shape[0] - 1;

    std::vector<std::vector<long long>> rows(static_cast<size_t>(e));
    for (long long i = 0; i < e; ++i)
        rows[static_cast<size_t>(i)] =
            padded_parts(beta.component(static_cast<int>(i)), shape[static_cast<size_t>(i)]);
    std::vector<Position> order = positions_in_order(shape);
    std::vector<long long> entries;
    entries.reserve(order.size());
    for (const Position& p : order)
        entries.push_back(rows[static_cast<size_t>(p.i)][static_cast<size_t>(p.j)]);
    long long count = static_cast<long long>(entries.size());

    long long mt = (m + f - 1) / f;
    long long ef = e * f;
    std::vector<long long> tshape(static_cast<size_t>(ef), mt);
    tshape[0] = mt + 1;
    std::vector<Position> torder = positions_in_order(tshape);
    long long tcount = static_cast<long long>(torder.size());

    std::vector<std::vector<long long>> trows(static_cast<size_t>(ef));
    for (long long i = 0; i < ef; ++i)
        trows[static_cast<size_t>(i)].assign(static_cast<size_t>(tshape[static_cast<size_t>(i)]),
                                             0);
    for (long long t = 0; t < tcount; ++t) {
        long long later = tcount - 1 - t;
        if (later <= count - 1) {
            const Position& p = torder[static_cast<size_t>(t)];
            trows[static_cast<size_t>(p.i)][static_cast<size_t>(p.j)] =
                entries[static_cast<size_t>(count - 1 - later)];
        }
    }
    std::vector<Partition> comps;
    comps.reserve(static_cast<size_t>(ef));
    for (auto& row : trows) comps.emplace_back(std::move(row));
    return Multipartition(std::move(comps));
}

Multipartition unique_special_lift(const MultipartitionOrbit& orbit, long long e) {
    GroupSpec g = GroupSpec::make(1, e, orbit.rep.total());
    Symbol sym(orbit.rep, g, SymbolType{1, 0}, Weight::zero(e));
    if (!sym.distinguished())
        throw std::domain_error("orbit " + orbit.rep.str() + " is not special in " + g.str());
    std::optional<Multipartition> found;
    for (long long j = 0; j < e; ++j) {
        if (!sym.representatives()[static_cast<size_t>(j)].rotated_down(1).monotone()) continue;
        Multipartition lift = orbit.rep.rotated(j);
        if (found && !(*found == lift))
            throw std::logic_error("two distinct lifts of " + orbit.rep.str() +
                                   " have monotone rotated presymbols");
        found = lift;
    }
    if (!found)
        throw std::logic_error("special orbit " + orbit.rep.str() +
                               " has no lift with a monotone rotated presymbol");
    return *found;
}

std::vector<Multipartition> springer_multipartitions_ge1n(long long e, long long n, long long r,
                                                          long long s) {
    require_type(r, s);
    GroupSpec g = GroupSpec::make(e, 1, n);
    std::vector<Multipartition> out;
    for (const Multipartition& mp : enumerate_multipartitions(e, n))
        if (Symbol(mp, g, SymbolType{r, s}, Weight::basic(e)).distinguished()) out.push_back(mp);
    return out;
}

std::vector<Multipartition> springer_multipartitions_ge1n_by_sums(long long e, long long n,
                                                                  long long r, long long s) {
    require_type(r, s);
    // candidates[kind][size]: kind 0 = distinguished type-(1,1) symbol,
    // kind 1 = distinguished type-(1,0) symbol (special).
    std::map<std::pair<int, long long>, std::vector<Multipartition>> candidates;
    auto pieces_of = [&](int kind, long long size) -> const std::vector<Multipartition>& {
        auto it = candidates.find({kind, size});
        if (it != candidates.end()) return it->second;
        std::vector<Multipartition> list =
            springer_multipartitions_ge1n(e, size, 1, kind == 0 ? 1 : 0);
        return candidates.emplace(std::make_pair(kind, size), std::move(list)).first->second;
    };

    std::set<Multipartition> acc;
    std::vector<Partition> empty_comps(static_cast<size_t>(e));
    std::function<void(long long, long long, const Multipartition&)> rec =
        [&](long long piece, long long remaining, const Multipartition& sum) {
            if (piece == r) {
                if (remaining == 0) acc.insert(sum);
                return;
            }
            long long lo = piece == r - 1 ? remaining : 0;
            for (long long size = lo; size <= remaining; ++size)
                for (const Multipartition& mp : pieces_of(piece < s ? 0 : 1, size))
                    rec(piece + 1, remaining - size, sum + mp);
        };
    rec(0, n, Multipartition(empty_comps));
    return {acc.begin(), acc.end()};
}

std::vector<IrrepLabel> springer_irreps_geen(long long e, long long n, long long r) {
    require_type(r, 0);
    GroupSpec g = GroupSpec::make(1, e, n);
    std::vector<IrrepLabel> out;
    for (const MultipartitionOrbit& orbit : enumerate_orbits(g))
        if (Symbol(orbit.rep, g, SymbolType{r, 0}, Weight::zero(e)).distinguished())
            for (long long l = 1; l <= orbit.stabilizer; ++l) out.push_back({orbit, l});
    return out;
}

}  // namespace spets
