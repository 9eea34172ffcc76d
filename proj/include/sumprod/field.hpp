#pragma once

#include <cstdint>
#include <string>

#include "sumprod/errors.hpp"
#include "sumprod/numeric.hpp"

namespace sumprod {

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Extended Euclid; valid for 0 < a < m < 2^63.
inline u64 invmod(u64 a, u64 m) {
    if (a == 0) throw ZeroInverse("0 has no multiplicative inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t; new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r; new_r = tmp;
    }
    return t < 0 ? static_cast<u64>(t + static_cast<std::int64_t>(m)) : static_cast<u64>(t);
}

} // namespace detail

/// Deterministic primality test for all 64-bit integers: trial division by
/// small primes, then a strong-pseudoprime test on a base set known to be
/// exact below 3.3e24.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

class FieldElement;

/// The field Z/qZ for prime q. Residues are canonical: 0 <= v < q.
/// The bitset backend caps q below 2^32 so that all pairwise products
/// stay exact in 128-bit intermediates.
class PrimeField {
public:
    static constexpr u64 kMaxModulus = (1ull << 32) - 1;

    static PrimeField make(u64 q) {
        if (q > kMaxModulus)
            throw CompositeModulus("modulus " + std::to_string(q) + " exceeds the 2^32 backend ceiling");
        if (!is_prime(q))
            throw CompositeModulus(std::to_string(q) + " is not prime");
        return PrimeField(q);
    }

    u64 modulus() const noexcept { return q_; }

    u64 reduce(u64 x) const noexcept { return x % q_; }

    u64 add(u64 a, u64 b) const noexcept {
        u64 s = a + b;
        return s >= q_ ? s - q_ : s;
    }

    u64 sub(u64 a, u64 b) const noexcept {
        return a >= b ? a - b : a + (q_ - b);
    }

    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : q_ - a; }

    u64 mul(u64 a, u64 b) const noexcept {
        return static_cast<u64>((static_cast<u128>(a) * b) % q_);
    }

    u64 pow(u64 base, u64 exp) const noexcept { return detail::powmod(base, exp, q_); }

    /// Extended Euclid; exact and O(log q).
    u64 inv(u64 a) const { return detail::invmod(a, q_); }

    FieldElement element(u64 v) const;

    bool operator==(const PrimeField& o) const noexcept { return q_ == o.q_; }
    bool operator!=(const PrimeField& o) const noexcept { return q_ != o.q_; }

private:
    explicit PrimeField(u64 q) : q_(q) {}
    u64 q_;
};

inline PrimeField make_field(u64 q) { return PrimeField::make(q); }

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (a != b)
        throw FieldMismatch("moduli differ: " + std::to_string(a.modulus()) +
                            " vs " + std::to_string(b.modulus()));
}

/// A canonical residue together with its modulus; trivially copyable so
/// that mismatched-field use is caught by comparing moduli.
class FieldElement {
public:
    FieldElement(const PrimeField& f, u64 v) : value_(f.reduce(v)), q_(f.modulus()) {}

    u64 value() const noexcept { return value_; }
    u64 modulus() const noexcept { return q_; }
    PrimeField field() const { return PrimeField::make(q_); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        u64 s = a.value_ + b.value_;
        a.value_ = s >= a.q_ ? s - a.q_ : s;
        return a;
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        a.value_ = a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.q_ - b.value_);
        return a;
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        a.value_ = static_cast<u64>((static_cast<u128>(a.value_) * b.value_) % a.q_);
        return a;
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        a.check(b);
        a.value_ = static_cast<u64>((static_cast<u128>(a.value_) * detail::invmod(b.value_, b.q_)) % a.q_);
        return a;
    }
    FieldElement inverse() const { return FieldElement(*this, detail::invmod(value_, q_)); }

    bool operator==(const FieldElement& o) const noexcept { return q_ == o.q_ && value_ == o.value_; }
    bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }

private:
    FieldElement(const FieldElement& like, u64 raw) : value_(raw), q_(like.q_) {}
    void check(const FieldElement& o) const {
        if (q_ != o.q_)
            throw FieldMismatch("moduli differ: " + std::to_string(q_) + " vs " + std::to_string(o.q_));
    }
    u64 value_;
    u64 q_;
};

inline FieldElement PrimeField::element(u64 v) const { return FieldElement(*this, v); }

} // namespace sumprod
