#include "dkdv/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dkdv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (sgn(v.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    return Rational(std::move(v));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const { return v_.get_str(); }

double Rational::log10_height() const {
    if (is_zero()) return 0.0;
    // sizeinbase(2) is exact up to one bit; good enough for height statistics.
    size_t nbits = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
    size_t dbits = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    return static_cast<double>(std::max(nbits, dbits)) * 0.30102999566398120;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace dkdv
