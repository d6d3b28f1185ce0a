#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace dkdv {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(const std::string& text);

    static Rational one() { return Rational(1); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// Multiplicative inverse; throws std::domain_error for zero.
    Rational inverse() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    /// log10 of max(|numerator|, denominator); 0 for the zero value.
    double log10_height() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dkdv
