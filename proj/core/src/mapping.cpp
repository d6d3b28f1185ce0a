#include "dkdv/mapping.hpp"

namespace dkdv {

std::pair<Rational, Rational> phi1_closed_form(const Rational& u1, const Rational& u2, long n,
                                               const MapParams& params) {
    if (params.q != 1) throw std::invalid_argument("closed form only exists for q = 1");
    if (n < 0) throw std::invalid_argument("closed form is stated for n >= 0");
    if (u1.is_zero() || u2.is_zero()) throw DegenerateOrbit(0);

    Rational gamma = params.a - params.b;
    Rational kappa = u1 * u2;

    auto factor = [&](long k) {
        Rational f = kappa + Rational(k) * gamma;
        if (f.is_zero()) throw DegenerateOrbit(k);
        return f;
    };

    Rational omega;
    if (n % 2 == 1) {
        long l = (n - 1) / 2;
        omega = u2;
        for (long k = 1; k <= l; ++k) omega *= factor(2 * k) / factor(2 * k - 1);
    } else {
        long l = n / 2;
        omega = u1;
        for (long k = 0; k < l; ++k) omega *= factor(2 * k + 1) / factor(2 * k);
    }
    if (omega.is_zero()) throw DegenerateOrbit(n);
    return {omega, factor(n) / omega};
}

}  // namespace dkdv
