#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "apll/checked.hpp"

namespace apll {

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes strictly increasing. m = 1 is the empty
// product.
struct PrimeFactorization {
    std::vector<PrimePower> factors;

    std::int64_t value() const {
        std::int64_t v = 1;
        for (const auto& f : factors)
            for (int i = 0; i < f.exponent; ++i) v = checked_mul(v, f.prime);
        return v;
    }
    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

// Trial division; orders in scope never exceed ~1e8 so nothing heavier is
// warranted.
inline PrimeFactorization factor(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("factor: argument must be >= 1");
    PrimeFactorization out;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.factors.push_back({p, e});
    }
    if (m > 1) out.factors.push_back({m, 1});
    return out;
}

inline bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
        if (m % p == 0) return false;
    return true;
}

// Exact integer square root (floor).
inline std::int64_t isqrt(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("isqrt: negative argument");
    if (m < 2) return m;
    std::int64_t x = m, y = (x + 1) / 2;
    while (y < x) { x = y; y = (x + m / x) / 2; }
    return x;
}

inline bool is_square(std::int64_t m) {
    if (m < 0) return false;
    std::int64_t r = isqrt(m);
    return r * r == m;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t mod) {
    return static_cast<std::int64_t>(
        static_cast<__int128>(a) * static_cast<__int128>(b) % mod);
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    if (mod <= 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    std::int64_t r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = mod_mul(r, base, mod);
        base = mod_mul(base, base, mod);
        exp >>= 1;
    }
    return r;
}

// Least t >= 1 with base^t = 1 (mod modulus), for prime modulus. Found by
// stripping prime factors from modulus-1.
inline std::int64_t mult_order(std::int64_t base, std::int64_t modulus) {
    if (modulus < 2 || !is_prime(modulus))
        throw std::invalid_argument("mult_order: modulus must be prime");
    std::int64_t b = base % modulus;
    if (b < 0) b += modulus;
    if (b == 0) throw std::invalid_argument("mult_order: base divisible by modulus");
    std::int64_t ord = modulus - 1;
    for (const auto& f : factor(modulus - 1).factors) {
        for (int i = 0; i < f.exponent; ++i) {
            if (ord % f.prime == 0 && mod_pow(b, ord / f.prime, modulus) == 1)
                ord /= f.prime;
            else
                break;
        }
    }
    return ord;
}

}  // namespace apll
