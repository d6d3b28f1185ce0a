#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dkdv/errors.hpp"
#include "dkdv/projective.hpp"
#include "dkdv/rational.hpp"

namespace dkdv {

/// Parameters of the lattice rule x[m+1,n+1] = x[m,n] + a/x[m+1,n] - b/x[m,n+1]
/// and of its order-(q+1) reductions.
struct MapParams {
    Rational a;
    Rational b;
    int q = 1;

    MapParams(Rational a_, Rational b_, int q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {
        if (a.is_zero()) throw std::invalid_argument("map parameter a must be nonzero");
        if (b.is_zero()) throw std::invalid_argument("map parameter b must be nonzero");
        if (q < 1) throw std::invalid_argument("reduction order q must be >= 1");
    }

    bool integrable() const { return a == b; }
};

namespace detail {

inline void check_step(const Projective& e) {
    if (e.is_indeterminate()) throw IndeterminateStep();
}

template <class S>
inline void check_step(const S&) {}

}  // namespace detail

/// One forward step of the reduced map on a state (u_1, ..., u_{q+1}):
/// shifts left and appends E = u_1 + a/u_{q+1} - b/u_2. The parameters must
/// already be lifted into the scalar carrier S.
template <class S>
std::vector<S> phi_forward(std::span<const S> u, const S& a, const S& b) {
    if (u.size() < 2) throw std::invalid_argument("state must have length q+1 >= 2");
    S e = u.front() + a / u.back() - b / u[1];
    detail::check_step(e);
    std::vector<S> next(u.begin() + 1, u.end());
    next.push_back(std::move(e));
    return next;
}

/// One backward step: shifts right and prepends D = u_{q+1} + b/u_1 - a/u_q.
template <class S>
std::vector<S> phi_backward(std::span<const S> u, const S& a, const S& b) {
    if (u.size() < 2) throw std::invalid_argument("state must have length q+1 >= 2");
    S d = u.back() + b / u.front() - a / u[u.size() - 2];
    detail::check_step(d);
    std::vector<S> prev;
    prev.reserve(u.size());
    prev.push_back(std::move(d));
    prev.insert(prev.end(), u.begin(), u.end() - 1);
    return prev;
}

template <class S>
std::vector<S> phi_forward(const std::vector<S>& u, const S& a, const S& b) {
    return phi_forward(std::span<const S>(u), a, b);
}

template <class S>
std::vector<S> phi_backward(const std::vector<S>& u, const S& a, const S& b) {
    return phi_backward(std::span<const S>(u), a, b);
}

/// Northeast lattice step: the value at (m+1, n+1) from its three neighbors.
template <class S>
S lattice_step_ne(const S& x_mn, const S& x_m1n, const S& x_mn1, const S& a, const S& b) {
    S r = x_mn + a / x_m1n - b / x_mn1;
    detail::check_step(r);
    return r;
}

/// Southwest lattice step: recovers the value at (m, n) from the same stencil.
template <class S>
S lattice_step_sw(const S& x_m1n1, const S& x_m1n, const S& x_mn1, const S& a, const S& b) {
    S r = x_m1n1 - a / x_m1n + b / x_mn1;
    detail::check_step(r);
    return r;
}

/// Closed-form n-th iterate for q = 1, where the map preserves the fibration
/// u1*u2 = const + n*(a-b) and linearizes. Returns (omega_n, (u1*u2+n*gamma)/omega_n).
/// Throws DegenerateOrbit when a product factor u1*u2 + k*gamma vanishes.
std::pair<Rational, Rational> phi1_closed_form(const Rational& u1, const Rational& u2, long n,
                                               const MapParams& params);

}  // namespace dkdv
