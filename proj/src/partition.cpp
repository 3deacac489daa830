#include "spets/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (long long p : parts_) {
        if (p < 0) throw std::invalid_argument("partition parts must be non-negative");
    }
    std::sort(parts_.begin(), parts_.end());
    parts_.erase(std::remove(parts_.begin(), parts_.end(), 0LL), parts_.end());
}

Partition Partition::parse(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty() || t == "-") return Partition{};
    std::vector<long long> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in partition: " + text);
        long long v = 0;
        try {
            size_t pos = 0;
            v = std::stoll(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition part: " + item);
        }
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

long long Partition::sum() const {
    long long s = 0;
    for (long long p : parts_) s = checked_add(s, p);
    return s;
}

std::vector<long long> Partition::padded(int length) const {
    if (length < static_cast<int>(parts_.size()))
        throw std::invalid_argument("padding length below partition length");
    std::vector<long long> out(static_cast<size_t>(length) - parts_.size(), 0LL);
    out.insert(out.end(), parts_.begin(), parts_.end());
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    long long maxp = parts_.back();
    std::vector<long long> conj;
    conj.reserve(static_cast<size_t>(maxp));
    for (long long col = 1; col <= maxp; ++col) {
        long long cnt = 0;
        for (long long p : parts_)
            if (p >= col) ++cnt;
        conj.push_back(cnt);
    }
    return Partition(std::move(conj));
}

long long Partition::standard_tableaux() const {
    if (parts_.empty()) return 1;
    // Work with non-increasing rows for the hook lengths.
    std::vector<long long> rows(parts_.rbegin(), parts_.rend());
    Partition conj = conjugate();
    std::vector<long long> cols(conj.parts().rbegin(), conj.parts().rend());
    // n! / prod(hooks); compute by simplifying incrementally to avoid overflow:
    // multiply n!'s factors and divide by hooks using exact gcd reduction.
    std::vector<long long> hooks;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (long long j = 0; j < rows[i]; ++j) {
            long long arm = rows[i] - 1 - j;
            long long leg = cols[static_cast<size_t>(j)] - 1 - static_cast<long long>(i);
            hooks.push_back(arm + leg + 1);
        }
    }
    long long n = sum();
    std::vector<long long> numer;
    for (long long v = 2; v <= n; ++v) numer.push_back(v);
    for (long long h : hooks) {
        if (h <= 1) continue;
        long long rem = h;
        for (auto& f : numer) {
            long long g = std::gcd(f, rem);
            f /= g;
            rem /= g;
            if (rem == 1) break;
        }
        if (rem != 1) throw std::logic_error("hook length division not exact");
    }
    long long result = 1;
    for (long long f : numer) result = checked_mul(result, f);
    return result;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(*it);
    }
    return out;
}

Partition operator+(const Partition& a, const Partition& b) {
    int len = std::max(a.length(), b.length());
    std::vector<long long> pa = a.padded(len);
    std::vector<long long> pb = b.padded(len);
    std::vector<long long> out(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) out[static_cast<size_t>(i)] = checked_add(pa[static_cast<size_t>(i)], pb[static_cast<size_t>(i)]);
    return Partition(std::move(out));
}

namespace {
void partitions_rec(long long n, long long maxpart, std::vector<long long>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        std::vector<long long> parts(acc.rbegin(), acc.rend());
        out.emplace_back(std::move(parts));
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(long long n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<long long> acc;
    partitions_rec(n, n, acc, out);
    if (n == 0) out = {Partition{}};
    return out;
}

}  // namespace spets
