// Exact integer utilities: overflow-checked 64-bit ops, trial-division
// factorization, squarefree reduction, and the Legendre-Jacobi-Kronecker
// symbol. Everything here is a pure function; safe to call concurrently.
#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadprime {

using std::int64_t;
using std::uint64_t;

namespace detail {

inline uint64_t magnitude(int64_t v) {
    return v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
}

[[noreturn]] inline void overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

} // namespace detail

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) detail::overflow("addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) detail::overflow("subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) detail::overflow("multiplication");
    return r;
}

inline int64_t checked_neg(int64_t a) {
    if (a == INT64_MIN) detail::overflow("negation");
    return -a;
}

/// Mathematical remainder in [0, m); m > 0.
inline int64_t mod_floor(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Largest r with r*r <= n.
inline int64_t isqrt(int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

/// Prime factorization with strictly increasing primes and exponents >= 1.
struct Factorization {
    std::vector<std::pair<int64_t, int>> factors;

    /// Product of prime^exponent, i.e. the magnitude that was factored.
    int64_t value() const {
        int64_t v = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) v = checked_mul(v, p);
        return v;
    }
};

/// Factorization of |n| by trial division; |n| = 1 gives the empty product.
/// Sized for radicands and discriminants, not cryptographic inputs.
inline Factorization factorize(int64_t n) {
    if (n == 0) throw std::domain_error("factorize: argument must be non-zero");
    uint64_t m = detail::magnitude(n);
    Factorization f;
    auto strip = [&](uint64_t p) {
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e > 0) f.factors.emplace_back(static_cast<int64_t>(p), e);
    };
    strip(2);
    strip(3);
    for (uint64_t p = 5; p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) f.factors.emplace_back(static_cast<int64_t>(m), 1);
    return f;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (int64_t p = 5; p <= n / p; p += 6)
        if (n % p == 0 || n % (p + 2) == 0) return false;
    return true;
}

/// Splits n as r * s^2 with r squarefree and sign(r) = sign(n).
inline std::pair<int64_t, int64_t> squarefree_reduce(int64_t n) {
    Factorization f = factorize(n);
    int64_t r = 1, s = 1;
    for (auto [p, e] : f.factors) {
        if (e % 2 != 0) r = checked_mul(r, p);
        for (int i = 0; i < e / 2; ++i) s = checked_mul(s, p);
    }
    if (n < 0) r = checked_neg(r);
    return {r, s};
}

inline bool is_squarefree(int64_t n) {
    return squarefree_reduce(n).second == 1;
}

/// Euler's totient of n > 0.
inline int64_t euler_phi(int64_t n) {
    if (n <= 0) throw std::domain_error("euler_phi: argument must be positive");
    int64_t phi = 1;
    for (auto [p, e] : factorize(n).factors) {
        phi = checked_mul(phi, p - 1);
        for (int i = 1; i < e; ++i) phi = checked_mul(phi, p);
    }
    return phi;
}

/// Legendre-Jacobi-Kronecker symbol (a/b), total on all integer pairs.
///
/// Binary reduction: factors of two in the denominator go through the (a/2)
/// rule and odd parts are swapped via quadratic reciprocity, so b is never
/// factored. Runs in O(log min(|a|,|b|)) word operations and cannot overflow.
inline int kronecker(int64_t a, int64_t b) {
    uint64_t ua = detail::magnitude(a);
    uint64_t ub = detail::magnitude(b);
    if (ub == 0) return ua == 1 ? 1 : 0;
    if (((ua | ub) & 1) == 0) return 0;
    int k = 1;
    const int twos = std::countr_zero(ub);
    ub >>= twos;
    if (twos & 1) {
        unsigned r8 = static_cast<unsigned>(ua & 7);
        if (a < 0) r8 = (8 - r8) & 7;
        if (r8 == 3 || r8 == 5) k = -k;
    }
    if (b < 0 && a < 0) k = -k;
    bool a_neg = a < 0;
    // invariant: ub odd and positive; (a/b) = k * (sign(a)*ua / ub)
    while (true) {
        if (ua == 0) return ub == 1 ? k : 0;
        const int va = std::countr_zero(ua);
        ua >>= va;
        if ((va & 1) && ((ub & 7) == 3 || (ub & 7) == 5)) k = -k;
        unsigned r4 = static_cast<unsigned>(ua & 3);
        if (a_neg) r4 = (4 - r4) & 3;
        if (r4 == 3 && (ub & 3) == 3) k = -k;
        const uint64_t t = ua;
        ua = ub % t;
        ub = t;
        a_neg = false;
    }
}

} // namespace quadprime
