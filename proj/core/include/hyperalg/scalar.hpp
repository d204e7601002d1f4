#pragma once

#include <string>
#include <string_view>

#include "hyperalg/prime_field.hpp"
#include "hyperalg/rational.hpp"

namespace hyperalg {

// Uniform scalar hooks used by the templated containers and kernels.
// Two backends: exact rationals and a 64-bit prime field.

inline std::string scalar_to_text(const Rational& r) { return rational_to_text(r); }
inline std::string scalar_to_text(const Fp& f) { return std::to_string(f.residue()); }

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr const char* backend_name = "exact";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(std::int64_t v) { return Rational(v); }
    static Rational from_text(std::string_view t, std::size_t line, std::size_t col) {
        return rational_from_text(t, line, col);
    }
};

template <>
struct ScalarTraits<Fp> {
    static constexpr const char* backend_name = "modp";
    static Fp zero() { return Fp(); }
    static Fp one() { return Fp(1); }
    static Fp from_int(std::int64_t v) { return Fp(v); }
    static Fp from_text(std::string_view t, std::size_t line, std::size_t col) {
        // Residues are plain decimal integers in [0, p).
        Rational r = rational_from_text(t, line, col);
        if (denominator(r) != 1)
            throw ParseError("prime field entries must be integers", line, col);
        return Fp::from_int(numerator(r), Fp::default_modulus());
    }
};

template <class S>
bool scalar_is_zero(const S& s) {
    return s == ScalarTraits<S>::zero();
}

inline bool scalar_is_zero(const Fp& s) { return s.residue() == 0; }

/// One in the same backend (and modulus) as the exemplar.
inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline Fp scalar_one_like(const Fp& x) { return Fp::from_residue(1, x.modulus()); }

/// Zero in the same backend (and modulus) as the exemplar.
template <class S>
S scalar_zero_like(const S& x) {
    return x - x;
}

}  // namespace hyperalg
