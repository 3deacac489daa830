#pragma once

#include <cstdint>
#include <stdexcept>

namespace spets {

// Exact integer helpers. All arithmetic in this library is exact; on
// overflow we throw rather than wrap.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

inline long long checked_pow(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline long long factorial(long long n) {
    long long r = 1;
    for (long long i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

inline long long euler_phi(long long n) {
    long long result = n, m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Returns p if n is a power of the prime p, otherwise 0.
inline long long prime_power_base(long long n) {
    if (n < 2) return 0;
    long long m = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            return m == 1 ? p : 0;
        }
    }
    return n;  // n itself prime
}

}  // namespace spets
