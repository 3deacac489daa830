#include "spets/multipartition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

Multipartition::Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}

Multipartition Multipartition::parse(const std::string& text) {
    std::vector<Partition> comps;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, '|')) comps.push_back(Partition::parse(item));
    if (!text.empty() && text.back() == '|') comps.push_back(Partition{});
    if (comps.empty()) throw std::invalid_argument("empty multipartition text");
    return Multipartition(std::move(comps));
}

long long Multipartition::total() const {
    long long s = 0;
    for (const auto& p : comps_) s = checked_add(s, p.sum());
    return s;
}

Multipartition Multipartition::rotated(long long d) const {
    const long long q = count();
    std::vector<Partition> out(static_cast<size_t>(q));
    for (long long i = 0; i < q; ++i)
        out[static_cast<size_t>(i)] = comps_[static_cast<size_t>(((i + d) % q + q) % q)];
    return Multipartition(std::move(out));
}

long long Multipartition::stabilizer_order(long long d, long long e) const {
    if (count() != d * e) throw std::invalid_argument("stabilizer_order: q != d*e");
    Multipartition cur = rotated(d);
    for (long long j = 1; j <= e; ++j) {
        if (cur == *this) return e / j;  // first return at step j => orbit size j
        cur = cur.rotated(d);
    }
    throw std::logic_error("rotation of order e did not return");
}

Multipartition Multipartition::conjugated() const {
    std::vector<Partition> out;
    out.reserve(comps_.size());
    for (const auto& p : comps_) out.push_back(p.conjugate());
    return Multipartition(std::move(out));
}

std::string Multipartition::str() const {
    std::string out;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) out.push_back('|');
        out += comps_[i].str();
    }
    return out;
}

Multipartition operator+(const Multipartition& a, const Multipartition& b) {
    if (a.count() != b.count())
        throw std::invalid_argument("multipartition sum: component count mismatch");
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(a.count()));
    for (int i = 0; i < a.count(); ++i) out.push_back(a.component(i) + b.component(i));
    return Multipartition(std::move(out));
}

MultipartitionOrbit orbit_of(const Multipartition& mp, long long d, long long e) {
    if (mp.count() != d * e) throw std::invalid_argument("orbit_of: q != d*e");
    Multipartition best = mp;
    Multipartition cur = mp;
    for (long long j = 1; j < e; ++j) {
        cur = cur.rotated(d);
        if (cur < best) best = cur;
    }
    return MultipartitionOrbit{best, mp.stabilizer_order(d, e)};
}

namespace {
void tuples_rec(long long q, long long idx, long long remaining,
                std::vector<Partition>& acc, std::vector<Multipartition>& out) {
    if (idx == q - 1) {
        for (const auto& p : partitions_of(remaining)) {
            acc.push_back(p);
            out.emplace_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (long long k = 0; k <= remaining; ++k) {
        for (const auto& p : partitions_of(k)) {
            acc.push_back(p);
            tuples_rec(q, idx + 1, remaining - k, acc, out);
            acc.pop_back();
        }
    }
}
}  // namespace

std::vector<Multipartition> enumerate_multipartitions(long long q, long long n) {
    if (q < 1 || n < 0) throw std::invalid_argument("enumerate_multipartitions: bad arguments");
    std::vector<Multipartition> out;
    std::vector<Partition> acc;
    tuples_rec(q, 0, n, acc, out);
    return out;
}

std::vector<MultipartitionOrbit> enumerate_orbits(const GroupSpec& g) {
    std::vector<MultipartitionOrbit> out;
    for (const auto& mp : enumerate_multipartitions(g.q(), g.n)) {
        MultipartitionOrbit orb = orbit_of(mp, g.d, g.e);
        if (orb.rep == mp) out.push_back(orb);
    }
    return out;
}

long long irrep_dimension(const Multipartition& mp) {
    // multinomial coefficient n! / prod |mp_i|!  times product of SYT counts
    long long n = mp.total();
    long long result = 1;
    long long used = 0;
    for (const auto& p : mp.components()) {
        long long k = p.sum();
        used = checked_add(used, k);
        result = checked_mul(result, binomial(used, k));
        result = checked_mul(result, p.standard_tableaux());
    }
    (void)n;
    return result;
}

}  // namespace spets
