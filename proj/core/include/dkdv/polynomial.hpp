#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dkdv/rational.hpp"

namespace dkdv {

/// Dense univariate polynomial with exact rational coefficients.
class Poly {
public:
    Poly() = default;  // zero polynomial
    explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly from_descending(std::vector<Rational> coeffs);
    static Poly monomial(const Rational& c, long e);
    static Poly constant(const Rational& c) { return monomial(c, 0); }

    /// n-th cyclotomic polynomial, by repeated exact division of x^n - 1.
    static Poly cyclotomic(long n);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero

    Rational coeff(long e) const {
        if (e < 0 || e >= static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(e)];
    }
    const std::vector<Rational>& ascending() const { return c_; }
    std::vector<Rational> descending() const { return {c_.rbegin(), c_.rend()}; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;

    /// Exact division with remainder over the rationals.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// True when b divides a exactly; q receives the quotient.
    static bool divides(const Poly& a, const Poly& b, Poly* q = nullptr);

    /// Monic gcd by the Euclidean algorithm.
    static Poly gcd(Poly a, Poly b);

    /// Reversal x^deg * p(1/x); maps the balance variable 1/lambda back to lambda.
    Poly reversed() const;

    /// Integer-primitive normalization: clears denominators, divides out the
    /// content, and makes the leading coefficient positive.
    Poly primitive_integer() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;  // c_[i] = coefficient of x^i, no trailing zeros
};

}  // namespace dkdv
