#include "dkdv/projective.hpp"

#include <ostream>
#include <stdexcept>

namespace dkdv {

const Rational& Projective::value() const {
    if (!is_finite()) throw std::logic_error("value() on a non-finite projective point");
    return v_;
}

Projective Projective::operator-() const {
    if (is_finite()) return Projective(-v_);
    return *this;  // -inf = inf on the projective line; Indeterminate absorbs
}

Projective Projective::inverse() const {
    switch (tag_) {
        case Tag::Finite:
            return v_.is_zero() ? infinity() : Projective(v_.inverse());
        case Tag::Infinity:
            return Projective(Rational(0));
        default:
            return indeterminate();
    }
}

Projective operator+(const Projective& a, const Projective& b) {
    if (a.is_indeterminate() || b.is_indeterminate()) return Projective::indeterminate();
    if (a.is_infinity() && b.is_infinity()) return Projective::indeterminate();  // inf - inf form
    if (a.is_infinity() || b.is_infinity()) return Projective::infinity();
    return Projective(a.v_ + b.v_);
}

Projective operator-(const Projective& a, const Projective& b) { return a + (-b); }

Projective operator*(const Projective& a, const Projective& b) {
    if (a.is_indeterminate() || b.is_indeterminate()) return Projective::indeterminate();
    if (a.is_infinity() || b.is_infinity()) {
        if (a.is_zero() || b.is_zero()) return Projective::indeterminate();  // 0 * inf
        return Projective::infinity();
    }
    return Projective(a.v_ * b.v_);
}

Projective operator/(const Projective& a, const Projective& b) { return a * b.inverse(); }

bool operator==(const Projective& a, const Projective& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.tag_ != Projective::Tag::Finite) return true;
    return a.v_ == b.v_;
}

std::string Projective::str() const {
    switch (tag_) {
        case Tag::Finite: return v_.str();
        case Tag::Infinity: return "inf";
        default: return "indeterminate";
    }
}

std::ostream& operator<<(std::ostream& os, const Projective& p) { return os << p.str(); }

}  // namespace dkdv
