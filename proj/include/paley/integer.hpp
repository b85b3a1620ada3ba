#pragma once

// Exact integer helpers shared by every module: the arbitrary-precision count
// type and small 64-bit number-theory routines.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "paley/error.hpp"

namespace paley {

using BigInt = boost::multiprecision::cpp_int;

/// Exact clique count. Never converted through floating point.
using ExactCount = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt ipow(BigInt base, std::uint64_t exp) {
    BigInt result = 1;
    while (exp) {
        if (exp & 1U) result *= base;
        base *= base;
        exp >>= 1U;
    }
    return result;
}

/// num / den, refusing to truncate.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& context) {
    require(den != 0, ErrorKind::InvariantViolation, context + ": division by zero");
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    require(rem == 0, ErrorKind::InvariantViolation,
            context + ": " + num.str() + " is not divisible by " + den.str());
    return quot;
}

/// Least non-negative residue.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Returns s with s*s == n, or nullopt if n is not a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct PrimePower {
    std::uint64_t p;
    unsigned r;
};

/// Decomposes q = p^r, or nullopt when q is not a prime power.
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto fs = prime_factors(q);
    if (fs.size() != 1) return std::nullopt;
    unsigned r = 0;
    while (q > 1) {
        q /= fs[0];
        ++r;
    }
    return PrimePower{fs[0], r};
}

/// Multiplicative order of a modulo m (gcd(a,m)=1), given group order n.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m, std::uint64_t n) {
    std::uint64_t ord = n;
    for (auto f : prime_factors(n)) {
        while (ord % f == 0 && powmod(a, ord / f, m) == 1) ord /= f;
    }
    return ord;
}

inline std::uint64_t upow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace paley
