#pragma once

// Integer helpers: factorizations, unit groups, residue searches.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "error.hpp"

namespace hopf::arith {

inline long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        int a = 0;
        while (n % d == 0) {
            n /= d;
            ++a;
        }
        if (a) out.emplace_back(d, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// U(Z_n) as sorted residues; U(Z_1) = {0}.
inline std::vector<long long> units(long long n) {
    std::vector<long long> out;
    if (n == 1) return {0};
    for (long long s = 1; s < n; ++s)
        if (std::gcd(s, n) == 1) out.push_back(s);
    return out;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Smallest generator of the multiplicative group of F_p.
inline std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto fs = factorize(static_cast<long long>(p - 1));
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, a] : fs)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return 1;
}

// Smallest s in [0, n) with s = a (mod m) and gcd(s, n) = 1.
inline long long unit_lift(long long a, long long m, long long n) {
    if (m <= 0 || n <= 0 || n % m != 0) throw precondition_failed("unit_lift: m must divide n");
    if (std::gcd(mod(a, m), m) != 1) throw precondition_failed("unit_lift: gcd(a, m) != 1");
    for (long long s = mod(a, m); s < n; s += m)
        if (std::gcd(s, n) == 1) return s;
    if (n == 1) return 0;
    throw error("unit_lift: residue class contains no unit");
}

} // namespace hopf::arith
