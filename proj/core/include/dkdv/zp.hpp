#pragma once

#include <cstdint>
#include <stdexcept>

#include "dkdv/numtheory.hpp"
#include "dkdv/rational.hpp"

namespace dkdv {

/// Prime field used for Monte-Carlo identity testing. Working modulo a fixed
/// 61-bit Mersenne prime keeps coefficient sizes constant along iterations
/// whose exact rational heights would grow exponentially; a nonzero rational
/// collides with zero mod p with negligible probability, and the sampling
/// layer resamples on any suspected collision.
struct Zp {
    static constexpr std::uint64_t modulus = (1ull << 61) - 1;

    std::uint64_t v = 0;

    static Zp one() { return {1}; }

    static Zp from_rational(const Rational& r) {
        std::uint64_t n = mpz_fdiv_ui(r.num().get_mpz_t(), modulus);
        std::uint64_t d = mpz_fdiv_ui(r.den().get_mpz_t(), modulus);
        if (d == 0) throw std::domain_error("denominator vanishes modulo p");
        return Zp{n} * Zp{d}.inverse();
    }

    bool is_zero() const { return v == 0; }

    Zp inverse() const {
        if (v == 0) throw std::domain_error("inverse of zero in prime field");
        return {powmod_u64(v, modulus - 2, modulus)};
    }

    Zp operator-() const { return {v == 0 ? 0 : modulus - v}; }

    friend Zp operator+(Zp a, Zp b) {
        std::uint64_t s = a.v + b.v;
        if (s >= modulus) s -= modulus;
        return {s};
    }
    friend Zp operator-(Zp a, Zp b) { return a + (-b); }
    friend Zp operator*(Zp a, Zp b) { return {mulmod_u64(a.v, b.v, modulus)}; }
    friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }

    friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
};

}  // namespace dkdv
