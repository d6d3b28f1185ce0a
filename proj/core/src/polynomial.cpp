#include "dkdv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace dkdv {

Poly Poly::from_descending(std::vector<Rational> coeffs) {
    std::vector<Rational> asc(coeffs.rbegin(), coeffs.rend());
    return Poly(std::move(asc));
}

Poly Poly::monomial(const Rational& c, long e) {
    if (e < 0) throw std::invalid_argument("polynomial exponent must be >= 0");
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(e) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<long>(i)) + b.coeff(static_cast<long>(i));
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    if (rem.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - b.degree()) + 1, Rational(0));
    Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long shift = rem.degree() - b.degree();
        Rational f = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        rem = rem - (b * monomial(f, shift));
    }
    return {Poly(std::move(q)), rem};
}

bool Poly::divides(const Poly& a, const Poly& b, Poly* q) {
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero()) return false;
    if (q) *q = quot;
    return true;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());  // monic
}

Poly Poly::reversed() const {
    if (is_zero()) return Poly();
    std::vector<Rational> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
}

Poly Poly::primitive_integer() const {
    if (is_zero()) return Poly();
    mpz_class den_lcm(1);
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content(0);
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& c : c_) {
        mpq_class scaled = c.raw() * mpq_class(den_lcm);
        v.emplace_back(Rational(scaled));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num().get_mpz_t());
    }
    if (sgn(content) == 0) content = 1;
    Rational scale = Rational(mpq_class(mpz_class(1), content));
    if (v.back().sign() < 0) scale = -scale;
    for (auto& c : v) c *= scale;
    return Poly(std::move(v));
}

Poly Poly::cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<Rational> xn(static_cast<std::size_t>(n) + 1, Rational(0));
    xn.front() = Rational(-1);
    xn.back() = Rational(1);
    Poly p(std::move(xn));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(p, cyclotomic(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic division must be exact");
        p = std::move(q);
    }
    return p;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = degree(); e >= 0; --e) {
        Rational c = coeff(e);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.sign() < 0 ? -c : c;
        if (e == 0 || !a.is_one()) os << a.str();
        if (e > 0) {
            os << var;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace dkdv
