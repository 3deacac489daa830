#include "spets/symbol.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

Weight::Weight(std::vector<long long> entries, long long d) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("weight must have at least one entry");
    long long q = static_cast<long long>(entries_.size());
    if (d < 1 || q % d != 0) throw std::invalid_argument("weight length must be a multiple of d");
    for (long long i = 0; i < q; ++i)
        if (entries_[static_cast<size_t>(i)] != entries_[static_cast<size_t>(i % d)])
            throw std::invalid_argument("weight entries must agree on residue classes mod d");
    long long mn = *std::min_element(entries_.begin(), entries_.end());
    for (auto& v : entries_) v -= mn;
}

Weight Weight::zero(long long q) {
    return Weight(std::vector<long long>(static_cast<size_t>(q), 0), 1);
}

Weight Weight::basic(long long q) {
    std::vector<long long> v(static_cast<size_t>(q), 0);
    v[0] = 1;
    return Weight(std::move(v), q);
}

Weight Weight::spetsial(long long d, long long e) {
    std::vector<long long> v(static_cast<size_t>(d * e), 0);
    for (long long j = 0; j < e; ++j) v[static_cast<size_t>(j * d)] = 1;
    return Weight(std::move(v), d);
}

bool position_before(const Position& a, const Position& b) {
    if (a.j != b.j) return a.j < b.j;
    if (b.i == 0) return false;
    return a.i == 0 || a.i > b.i;
}

std::vector<Position> positions_in_order(const std::vector<long long>& shape) {
    std::vector<Position> out;
    long long maxm = 0;
    for (long long m : shape) maxm = std::max(maxm, m);
    const int q = static_cast<int>(shape.size());
    for (long long j = 0; j < maxm; ++j) {
        if (j < shape[0]) out.push_back({0, static_cast<int>(j)});
        for (int i = q - 1; i >= 1; --i)
            if (j < shape[static_cast<size_t>(i)]) out.push_back({i, static_cast<int>(j)});
    }
    return out;
}

Presymbol::Presymbol(std::vector<std::vector<long long>> rows, SymbolType type)
    : rows_(std::move(rows)), type_(type) {
    if (rows_.empty()) throw std::invalid_argument("presymbol needs at least one row");
    for (const auto& row : rows_) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 0) throw std::invalid_argument("presymbol entries must be non-negative");
            if (j > 0 && row[j] < row[j - 1])
                throw std::invalid_argument("presymbol rows must be weakly increasing");
        }
    }
}

Presymbol Presymbol::protosymbol(SymbolType type, const std::vector<long long>& shape) {
    std::vector<std::vector<long long>> rows;
    rows.reserve(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) {
        std::vector<long long> row;
        for (long long j = 0; j < shape[i]; ++j)
            row.push_back(checked_add(checked_mul(j, type.r), i == 0 ? 0 : type.s));
        rows.push_back(std::move(row));
    }
    return Presymbol(std::move(rows), type);
}

std::vector<long long> Presymbol::shape() const {
    std::vector<long long> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(static_cast<long long>(row.size()));
    return out;
}

Presymbol Presymbol::shifted() const {
    std::vector<std::vector<long long>> rows;
    rows.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        std::vector<long long> row{i == 0 ? 0 : type_.s};
        for (long long v : rows_[i]) row.push_back(checked_add(v, type_.r));
        rows.push_back(std::move(row));
    }
    return Presymbol(std::move(rows), type_);
}

std::optional<Presymbol> Presymbol::unshifted() const {
    std::vector<std::vector<long long>> rows;
    rows.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        const long long head = i == 0 ? 0 : type_.s;
        if (rows_[i].empty() || rows_[i].front() != head) return std::nullopt;
        std::vector<long long> row;
        for (size_t j = 1; j < rows_[i].size(); ++j) {
            if (rows_[i][j] < type_.r) return std::nullopt;
            row.push_back(rows_[i][j] - type_.r);
        }
        if (i > 0 && !row.empty() && row.front() < type_.s) return std::nullopt;
        rows.push_back(std::move(row));
    }
    return Presymbol(std::move(rows), type_);
}

Presymbol Presymbol::rotated_down(long long d) const {
    const long long q = row_count();
    std::vector<std::vector<long long>> rows(static_cast<size_t>(q));
    for (long long i = 0; i < q; ++i)
        rows[static_cast<size_t>(i)] = rows_[static_cast<size_t>(((i - d) % q + q) % q)];
    return Presymbol(std::move(rows), type_);
}

bool Presymbol::monotone() const {
    const auto pos = positions_in_order(shape());
    for (size_t k = 1; k < pos.size(); ++k)
        if (entry(pos[k - 1]) > entry(pos[k])) return false;
    return true;
}

long long Presymbol::a_stat() const {
    const auto sh = shape();
    const auto pos = positions_in_order(sh);
    const Presymbol proto = protosymbol(type_, sh);
    long long total = 0;
    for (size_t p = 0; p < pos.size(); ++p)
        for (size_t t = p + 1; t < pos.size(); ++t)
            total = checked_add(
                total, std::min(entry(pos[p]), entry(pos[t])) - proto.entry(pos[p]));
    return total;
}

long long Presymbol::b_stat() const {
    const auto sh = shape();
    const auto pos = positions_in_order(sh);
    const Presymbol proto = protosymbol(type_, sh);
    long long total = 0;
    const long long count = static_cast<long long>(pos.size());
    for (size_t p = 0; p < pos.size(); ++p) {
        const long long after = count - 1 - static_cast<long long>(p);
        total = checked_add(total, checked_mul(after, entry(pos[p]) - proto.entry(pos[p])));
    }
    return total;
}

std::vector<long long> Presymbol::entry_multiset() const {
    std::vector<long long> all;
    for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    return all;
}

Multipartition Presymbol::to_multipartition() const {
    const Presymbol proto = protosymbol(type_, shape());
    std::vector<Partition> comps;
    comps.reserve(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        std::vector<long long> parts;
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            long long v = rows_[i][j] - proto.rows()[i][j];
            if (v < 0) throw std::invalid_argument("presymbol lies below its protosymbol");
            parts.push_back(v);
        }
        comps.emplace_back(std::move(parts));
    }
    return Multipartition(std::move(comps));
}

std::string Presymbol::str() const {
    std::string out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out.push_back('|');
        if (rows_[i].empty()) {
            out.push_back('-');
            continue;
        }
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out.push_back(',');
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

Presymbol Presymbol::parse(const std::string& text, SymbolType type) {
    std::vector<std::vector<long long>> rows;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, '|')) {
        std::vector<long long> row;
        std::string cleaned;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
        if (!cleaned.empty() && cleaned != "-") {
            std::stringstream rs(cleaned);
            std::string cell;
            while (std::getline(rs, cell, ',')) row.push_back(std::stoll(cell));
        }
        rows.push_back(std::move(row));
    }
    if (!text.empty() && text.back() == '|') rows.emplace_back();
    return Presymbol(std::move(rows), type);
}

std::vector<long long> minimal_shape(const Multipartition& lift, const GroupSpec& group,
                                     const Weight& weight) {
    const long long q = group.q();
    if (lift.count() != q || weight.count() != q)
        throw std::invalid_argument("minimal_shape: component count mismatch");
    long long m = 0;
    for (long long i = 0; i < q; ++i) {
        long long need = 0;
        for (long long k = i % group.d; k < q; k += group.d)
            need = std::max(need,
                            static_cast<long long>(lift.component(static_cast<int>(k)).length()));
        m = std::max(m, need - weight.entries()[static_cast<size_t>(i)]);
    }
    std::vector<long long> shape;
    shape.reserve(static_cast<size_t>(q));
    for (long long i = 0; i < q; ++i)
        shape.push_back(weight.entries()[static_cast<size_t>(i)] + m);
    return shape;
}

namespace {
Presymbol presymbol_of_lift(const Multipartition& lift, SymbolType type,
                            const std::vector<long long>& shape) {
    std::vector<std::vector<long long>> rows;
    rows.reserve(shape.size());
    const Presymbol proto = Presymbol::protosymbol(type, shape);
    for (size_t i = 0; i < shape.size(); ++i) {
        const auto padded = lift.component(static_cast<int>(i)).padded(static_cast<int>(shape[i]));
        std::vector<long long> row(padded.size());
        for (size_t j = 0; j < padded.size(); ++j)
            row[j] = checked_add(padded[j], proto.rows()[i][j]);
        rows.push_back(std::move(row));
    }
    return Presymbol(std::move(rows), type);
}
}  // namespace

Symbol::Symbol(const Multipartition& lift, const GroupSpec& group, SymbolType type,
               const Weight& weight, long long extra_depth)
    : group_(group), type_(type), weight_(weight), lift_(lift), extra_depth_(extra_depth) {
    if (extra_depth < 0) throw std::invalid_argument("extra_depth must be non-negative");
    std::vector<long long> shape = minimal_shape(lift, group, weight);
    for (auto& s : shape) s += extra_depth;
    Multipartition cur = lift;
    for (long long j = 0; j < group.e; ++j) {
        reps_.push_back(presymbol_of_lift(cur, type, shape));
        cur = cur.rotated(group.d);
    }
    for (size_t j = 1; j < reps_.size(); ++j)
        if (reps_[j] < reps_[static_cast<size_t>(canonical_)]) canonical_ = static_cast<int>(j);
}

bool Symbol::distinguished() const {
    for (const auto& rep : reps_)
        if (rep.monotone()) return true;
    return false;
}

bool similar(const Symbol& a, const Symbol& b) {
    if (!(a.type() == b.type()) || !(a.weight() == b.weight()) || !(a.group() == b.group()))
        throw std::invalid_argument("similar: type/weight/group mismatch");
    const auto base_a = minimal_shape(a.lift(), a.group(), a.weight());
    const auto base_b = minimal_shape(b.lift(), b.group(), b.weight());
    const long long common = std::max(base_a[0], base_b[0]);
    Symbol sa(a.lift(), a.group(), a.type(), a.weight(), common - base_a[0]);
    Symbol sb(b.lift(), b.group(), b.type(), b.weight(), common - base_b[0]);
    std::set<std::vector<long long>> seen;
    for (const auto& rep : sa.representatives()) seen.insert(rep.entry_multiset());
    for (const auto& rep : sb.representatives())
        if (seen.count(rep.entry_multiset())) return true;
    return false;
}

std::vector<long long> similarity_key(const Symbol& sym, long long extra_depth) {
    Symbol at(sym.lift(), sym.group(), sym.type(), sym.weight(), extra_depth);
    std::vector<long long> best;
    bool first = true;
    for (const auto& rep : at.representatives()) {
        auto ms = rep.entry_multiset();
        if (first || ms < best) {
            best = std::move(ms);
            first = false;
        }
    }
    return best;
}

}  // namespace spets
