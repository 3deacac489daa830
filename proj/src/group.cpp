#include "spets/group.hpp"

#include <stdexcept>

#include "spets/numeric.hpp"

namespace spets {

GroupSpec GroupSpec::make(long long d, long long e, long long n) {
    if (d < 1 || e < 1 || n < 0) throw std::invalid_argument("invalid reflection group parameters");
    return GroupSpec{d, e, n};
}

GroupSpec GroupSpec::from_qen(long long q, long long e, long long n) {
    if (e < 1 || q < 1 || q % e != 0) throw std::invalid_argument("group parameters require e | q");
    return make(q / e, e, n);
}

long long GroupSpec::order() const {
    long long o = checked_mul(checked_pow(q(), n), factorial(n));
    return o / e;
}

std::vector<long long> GroupSpec::degrees() const {
    std::vector<long long> deg;
    for (long long i = 1; i < n; ++i) deg.push_back(checked_mul(q(), i));
    if (n >= 1) deg.push_back(checked_mul(d, n));
    return deg;
}

long long GroupSpec::reflection_count() const {
    long long total = 0;
    for (long long dg : degrees()) total = checked_add(total, dg - 1);
    return total;
}

std::string GroupSpec::str() const {
    return "G(" + std::to_string(q()) + "," + std::to_string(e) + "," + std::to_string(n) + ")";
}

}  // namespace spets
