#pragma once

#include <compare>
#include <string>
#include <vector>

namespace spets {

// Integer partition. Parts are kept weakly increasing with no zero parts;
// zeros only appear through explicit padding, which callers request when a
// fixed length is needed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    // Accepts comma-separated parts in any order ("3,2,2,1"); "-" or the
    // empty string denote the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<long long>& parts() const { return parts_; }
    long long sum() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Parts padded with leading zeros to exactly `length` entries.
    std::vector<long long> padded(int length) const;

    Partition conjugate() const;

    // Number of standard Young tableaux (hook length formula).
    long long standard_tableaux() const;

    // Non-increasing, comma separated; "-" for the empty partition.
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long long> parts_;
};

// Right-aligned sum: shorter argument is padded with zeros at the small end.
Partition operator+(const Partition& a, const Partition& b);

// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(long long n);

}  // namespace spets
