// Character-driven sieve for prime-ideal norms: the starting set S(d, max),
// the sieve that removes products of two S-elements, the odd-only variant,
// and rational-prime classification. Construction is single-threaded and
// deterministic; the resulting sets are immutable and safe to query from
// any thread.
#pragma once

#include "quadprime/arithmetic.hpp"
#include "quadprime/character.hpp"
#include "quadprime/field.hpp"

#include <istream>
#include <ostream>

namespace quadprime {

/// How a rational prime behaves in the ring of integers.
enum class SplitType { Split, Ramified, Inert };

/// Split if chi_d(p) = +1, Ramified if 0, Inert if -1.
inline SplitType classify_prime(const FieldParams& f, int64_t p) {
    if (!is_prime(p))
        throw std::domain_error("classify_prime: " + std::to_string(p) + " is not prime");
    const int s = kronecker(f.d, p);
    return s > 0 ? SplitType::Split : s == 0 ? SplitType::Ramified : SplitType::Inert;
}

/// Dense bit set over the integers [0, max].
class DenseSet {
public:
    DenseSet() = default;

    explicit DenseSet(int64_t max) {
        if (max < 0) throw std::domain_error("DenseSet: negative bound");
        max_ = max;
        words_.assign(static_cast<std::size_t>(max / 64) + 1, 0);
    }

    int64_t max() const { return max_; }

    bool test(int64_t n) const {
        return (words_[static_cast<std::size_t>(n >> 6)] >> (n & 63)) & 1;
    }

    void set(int64_t n) { words_[static_cast<std::size_t>(n >> 6)] |= uint64_t{1} << (n & 63); }

    void clear(int64_t n) { words_[static_cast<std::size_t>(n >> 6)] &= ~(uint64_t{1} << (n & 63)); }

    int64_t count() const {
        int64_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    /// Calls fn(n) for every member, ascending.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w != 0) {
                const int b = std::countr_zero(w);
                fn(static_cast<int64_t>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<int64_t> members() const {
        std::vector<int64_t> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int64_t n) { out.push_back(n); });
        return out;
    }

    std::size_t byte_size() const { return words_.size() * sizeof(uint64_t); }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    friend bool operator==(const DenseSet&, const DenseSet&) = default;

private:
    int64_t max_ = 0;
    std::vector<uint64_t> words_;
};

/// T(d, max): the norms of all prime ideals up to max, plus the harmless
/// products of two distinct inert primes that the sieve keeps.
struct NormSet {
    int64_t d = 0;
    int64_t max = 0;
    DenseSet members;
    uint64_t sieve_steps = 0; // removal operations performed by the sieve
    uint64_t aux_bytes = 0;   // peak temporary storage besides the bit set
};

/// Membership test with a hard range check: asking beyond the sieved range
/// is an error, never a silent "no".
inline bool is_prime_norm(const NormSet& T, int64_t n) {
    if (n < 0 || n > T.max)
        throw std::out_of_range("is_prime_norm: " + std::to_string(n) +
                                " is outside the sieved range [0, " +
                                std::to_string(T.max) + "]");
    return T.members.test(n);
}

namespace detail {

inline void check_sieve_bound(int64_t max) {
    if (max < 2) throw std::domain_error("sieve bound must be at least 2");
    if (max > (int64_t{1} << 40))
        throw std::length_error("sieve bound " + std::to_string(max) + " needs about " +
                                std::to_string(max / 8) + " bytes; the cap is 2^40");
}

// Odd-only Eratosthenes over [3, limit]; calls fn(p) for each odd prime,
// ascending. Returns the bytes of scratch used.
template <class Fn>
inline std::size_t for_each_odd_prime(int64_t limit, Fn&& fn) {
    if (limit < 3) return 0;
    const int64_t n = (limit - 1) / 2; // index i <-> odd number 2i + 3
    std::vector<uint64_t> composite(static_cast<std::size_t>(n / 64) + 1, 0);
    auto marked = [&](int64_t i) {
        return (composite[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    };
    for (int64_t i = 0;; ++i) {
        const int64_t p = 2 * i + 3;
        if (p > limit / p) break;
        if (marked(i)) continue;
        for (int64_t m = p * p; m <= limit; m += 2 * p)
            composite[static_cast<std::size_t>((m - 3) / 2 >> 6)] |=
                uint64_t{1} << (((m - 3) / 2) & 63);
    }
    for (int64_t i = 0; i < n; ++i)
        if (!marked(i)) fn(2 * i + 3);
    return composite.size() * sizeof(uint64_t);
}

} // namespace detail

/// S(d, max): every n in [2, max] that is a prime divisor of d or has
/// chi_d(n) = +1. Composite divisors of d are not members.
inline DenseSet starting_set(const FieldParams& f, int64_t max) {
    detail::check_sieve_bound(max);
    DenseSet s(max);
    const CharacterTable t = build_character(f);
    for (int64_t n = 2; n <= max; ++n)
        if (chi(t, n) == 1) s.set(n);
    for (auto [p, e] : factorize(f.d).factors)
        if (p <= max) s.set(p);
    return s;
}

/// Removes from S every product of two S-elements: for each untreated t in
/// ascending order with chi_d(t) = +1 that is still present, the products
/// t*s (s in S, s >= t) are cleared starting from t*t; treatment stops once
/// t exceeds sqrt(max). Ramified members need no turn as sieving base: any
/// product p*s with p | d has character 0 and was never in S.
inline NormSet sieve_norms(const DenseSet& S, const FieldParams& f, int64_t max) {
    detail::check_sieve_bound(max);
    if (S.max() != max)
        throw std::domain_error("sieve_norms: starting set bound does not match max");
    NormSet T;
    T.d = f.d;
    T.max = max;
    T.members = S;
    const CharacterTable t = build_character(f);
    T.aux_bytes = t.values.size() + S.byte_size();
    for (int64_t v = 2; v <= max / v; ++v) {
        if (!T.members.test(v) || chi(t, v) != 1) continue;
        for (int64_t s = v; s <= max / v; ++s) {
            if (S.test(s)) {
                T.members.clear(v * s);
                ++T.sieve_steps;
            }
        }
    }
    return T;
}

/// Same member set as sieve_norms(starting_set(f, max), f, max), computed by
/// sieving odd numbers only against the period-2|d| odd character (odd d) or
/// the character restricted to odd indices (even d). Odd products only ever
/// factor as odd*odd, so the odd part closes on itself; the even members are
/// appended afterwards: the ramified 2 when 2 | d, the split norm 2 when
/// d = 1 (mod 8), and when d = 5 (mod 8) the inert square 4 together with
/// the products 2q over odd inert primes q (the harmless part of T).
inline NormSet sieve_norms_odd(const FieldParams& f, int64_t max) {
    detail::check_sieve_bound(max);
    NormSet T;
    T.d = f.d;
    T.max = max;
    T.members = DenseSet(max);
    const bool odd_d = mod_floor(f.d, 2) != 0;
    const CharacterTable t = odd_d ? odd_character(f) : build_character(f);
    T.aux_bytes = t.values.size();
    auto chi_at = [&](int64_t n) { // n >= 0
        return t.values[static_cast<std::size_t>(n % t.period)];
    };

    for (int64_t n = 3; n <= max; n += 2)
        if (chi_at(n) == 1) T.members.set(n);
    for (auto [p, e] : factorize(f.d).factors)
        if (p != 2 && p <= max) T.members.set(p);

    for (int64_t v = 3; v <= max / v; v += 2) {
        if (!T.members.test(v) || chi_at(v) != 1) continue;
        for (int64_t s = v; s <= max / v; s += 2) {
            if (chi_at(s) == 1) {
                T.members.clear(v * s);
                ++T.sieve_steps;
            }
        }
    }

    const int64_t dm8 = mod_floor(f.d, 8);
    if (!odd_d) {
        T.members.set(2); // max >= 2 always holds here
    } else if (dm8 == 1) {
        T.members.set(2);
    } else { // dm8 == 5: 2 is inert
        if (max >= 4) T.members.set(4);
        T.aux_bytes += detail::for_each_odd_prime(max / 2, [&](int64_t q) {
            if (chi_at(q) == -1) T.members.set(2 * q);
        });
    }
    return T;
}

// --- binary dump ------------------------------------------------------
// "QNS1", then d and max as signed 64-bit little-endian, then the bit
// words of the member set, 64 bits per word, little-endian.

namespace detail {

inline void put_u64_le(std::ostream& os, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 8);
}

inline uint64_t get_u64_le(std::istream& is) {
    char b[8];
    is.read(b, 8);
    if (!is) throw std::runtime_error("norm set dump: truncated input");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return v;
}

} // namespace detail

inline void dump_norms(const NormSet& T, std::ostream& os) {
    os.write("QNS1", 4);
    detail::put_u64_le(os, static_cast<uint64_t>(T.d));
    detail::put_u64_le(os, static_cast<uint64_t>(T.max));
    for (uint64_t w : T.members.words()) detail::put_u64_le(os, w);
}

inline NormSet load_norms(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "QNS1")
        throw std::runtime_error("norm set dump: bad magic");
    NormSet T;
    T.d = static_cast<int64_t>(detail::get_u64_le(is));
    T.max = static_cast<int64_t>(detail::get_u64_le(is));
    if (T.max < 2 || T.max > (int64_t{1} << 40))
        throw std::runtime_error("norm set dump: implausible max");
    T.members = DenseSet(T.max);
    for (uint64_t& w : T.members.words()) w = detail::get_u64_le(is);
    return T;
}

} // namespace quadprime
