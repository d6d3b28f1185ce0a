#pragma once

#include <iosfwd>
#include <string>

#include "dkdv/rational.hpp"

namespace dkdv {

/// A point of the projective line over the rationals: a finite value, the
/// single unsigned point at infinity, or the absorbing Indeterminate outcome
/// of the forms 0/0, inf/inf, 0*inf and inf-inf.
class Projective {
public:
    enum class Tag { Finite, Infinity, Indeterminate };

    Projective() : tag_(Tag::Finite), v_() {}
    Projective(Rational v) : tag_(Tag::Finite), v_(std::move(v)) {}  // NOLINT
    Projective(long n) : tag_(Tag::Finite), v_(n) {}                 // NOLINT

    static Projective infinity() { return Projective(Tag::Infinity); }
    static Projective indeterminate() { return Projective(Tag::Indeterminate); }
    static Projective one() { return Projective(Rational(1)); }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_infinity() const { return tag_ == Tag::Infinity; }
    bool is_indeterminate() const { return tag_ == Tag::Indeterminate; }
    bool is_zero() const { return is_finite() && v_.is_zero(); }

    /// Finite value; only valid when is_finite().
    const Rational& value() const;

    Projective operator-() const;
    Projective inverse() const;  // projective reciprocal: 1/0 = inf, 1/inf = 0

    friend Projective operator+(const Projective& a, const Projective& b);
    friend Projective operator-(const Projective& a, const Projective& b);
    friend Projective operator*(const Projective& a, const Projective& b);
    friend Projective operator/(const Projective& a, const Projective& b);

    friend bool operator==(const Projective& a, const Projective& b);

    std::string str() const;

private:
    explicit Projective(Tag t) : tag_(t), v_() {}

    Tag tag_;
    Rational v_;
};

std::ostream& operator<<(std::ostream& os, const Projective& p);

}  // namespace dkdv
