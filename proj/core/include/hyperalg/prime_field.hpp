#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <string>

#include "hyperalg/error.hpp"
#include "hyperalg/rational.hpp"

namespace hyperalg {

/// Largest prime below 2^62. Fixed so runs are reproducible; override via
/// Fp::set_default_modulus (the CLI wires HYPERALG_PRIME to it).
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

/// Element of Z/pZ for a prime p chosen at construction.
/// Values are immutable; mixing moduli in one expression throws.
class Fp {
public:
    Fp() : v_(0), p_(default_modulus()) {}
    explicit Fp(std::int64_t v) : Fp(v, default_modulus()) {}
    Fp(std::int64_t v, std::uint64_t p) : p_(p) {
        check_modulus(p);
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(m);
    }
    static Fp from_residue(std::uint64_t v, std::uint64_t p) {
        check_modulus(p);
        Fp f;
        f.v_ = v % p;
        f.p_ = p;
        return f;
    }
    /// Reduce an arbitrary-precision integer mod p.
    static Fp from_int(const Int& v, std::uint64_t p) {
        check_modulus(p);
        Int m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        return from_residue(static_cast<std::uint64_t>(m), p);
    }
    /// Reduce a rational mod p; fails when the denominator is divisible by p.
    static Fp from_rational(const Rational& r, std::uint64_t p) {
        Fp num = from_int(numerator(r), p);
        Fp den = from_int(denominator(r), p);
        if (den.v_ == 0)
            throw ArithmeticError("rational has denominator divisible by the field modulus");
        return num * den.inv();
    }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool operator==(std::int64_t x) const { return *this == Fp(x, p_); }

    Fp operator+(const Fp& o) const {
        same_modulus(o);
        std::uint64_t s = v_ + o.v_;  // p < 2^63 so no overflow
        if (s >= p_) s -= p_;
        return from_residue(s, p_);
    }
    Fp operator-(const Fp& o) const {
        same_modulus(o);
        return from_residue(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        same_modulus(o);
        return from_residue(detail::mulmod_u64(v_, o.v_, p_), p_);
    }
    Fp operator-() const { return from_residue(v_ ? p_ - v_ : 0, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const {
        if (v_ == 0) throw ArithmeticError("inverse of zero in prime field");
        return from_residue(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    static std::uint64_t default_modulus() { return default_modulus_ref().load(); }
    static void set_default_modulus(std::uint64_t p) {
        check_modulus(p);
        default_modulus_ref().store(p);
    }

private:
    static std::atomic<std::uint64_t>& default_modulus_ref() {
        static std::atomic<std::uint64_t> p{kDefaultPrime};
        return p;
    }
    static void check_modulus(std::uint64_t p) {
        static std::mutex mu;
        static std::set<std::uint64_t> verified;
        {
            std::lock_guard<std::mutex> lock(mu);
            if (verified.count(p)) return;
        }
        if (p >= (1ULL << 63) || !is_prime_u64(p))
            throw ArithmeticError("modulus " + std::to_string(p) + " is not a prime below 2^63");
        std::lock_guard<std::mutex> lock(mu);
        verified.insert(p);
    }
    void same_modulus(const Fp& o) const {
        if (p_ != o.p_)
            throw ArithmeticError("prime field modulus mismatch: " + std::to_string(p_) + " vs " +
                                  std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace hyperalg
