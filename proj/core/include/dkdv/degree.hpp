#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dkdv/mapping.hpp"
#include "dkdv/polynomial.hpp"
#include "dkdv/singularity.hpp"

namespace dkdv {

/// Offsets of the spontaneous 0 and infinity values along the last coordinate
/// of a singularity pattern, reduced to what the preimage-count balance needs:
/// a finite prefix and, for non-confining patterns, a repeating block.
struct ValueCountPattern {
    std::vector<long> prefix_zeros;
    std::vector<long> prefix_infs;
    std::vector<long> block_zeros;  // absolute offsets of the first block occurrences
    std::vector<long> block_infs;
    std::optional<long> period;     // nullopt = finite (confined) pattern

    bool empty() const {
        return prefix_zeros.empty() && prefix_infs.empty() && block_zeros.empty() &&
               block_infs.empty();
    }

    /// Reads the last coordinate off a classified pattern. Only confined-open
    /// and unconfined patterns carry weight in the balance; cyclic and
    /// anticonfined ones are rejected.
    static ValueCountPattern from_singularity(const SingularityPattern& pattern);
};

/// Characteristic polynomial of the preimage-count balance d_n(0) = d_n(inf).
/// Finite patterns balance directly; periodic ones balance the block sums
/// (their shared geometric factor cancels); a mixed pattern clears the
/// geometric denominator and strips the spurious factors this introduces.
/// Returns the zero polynomial for a degenerate (self-cancelling) balance.
Poly express_char_poly(const ValueCountPattern& pattern);

/// Largest real root in (1, 2], bracketed by exact-rational sign-change
/// bisection to width <= tol. When no root exceeds 1 the answer is 1 (the
/// integrable signal) and `greater_than_one` is false.
struct RootEstimate {
    bool greater_than_one = false;
    Rational low{1};
    Rational high{1};

    double value() const { return (low.to_double() + high.to_double()) / 2; }
    std::string decimal(int digits = 12) const;
};

RootEstimate largest_real_root(const Poly& poly, const Rational& tol);

/// Exact orbit heights: h_n = max over coordinates of log10 max(|num|, den).
/// Steps where a coordinate sits at infinity are flagged and that coordinate
/// is excluded from the maximum.
struct HeightSeries {
    std::vector<double> heights;
    std::vector<bool> infinity_flagged;
};

struct DiophantineEstimate {
    double lambda_hat = 1.0;
    double slope = 0.0;      // of the least-squares line through (n, log10 h_n)
    double residual = 0.0;   // rms residual of that fit
    int fit_begin = 0;
    int fit_end = 0;
    HeightSeries series;
    std::uint64_t seed = 0;
};

/// Height-growth estimate of the dynamical degree from an exact rational
/// orbit. Resamples the initial state (at most 5 times) when the orbit hits
/// an exact singularity, then throws OrbitCollapse.
DiophantineEstimate diophantine_degree(const MapParams& params, int n_iters, std::uint64_t seed,
                                       int burn_in = -1);

/// Factors out cyclotomic divisors (unit-circle factors carry no growth).
/// Returns the remaining core polynomial and the factors removed; the q = 5
/// balance polynomial, for instance, splits into x^2-x+1 times x^3-x-1.
std::pair<Poly, std::vector<Poly>> split_cyclotomic_factors(const Poly& poly);

enum class DegreeMode { SingleVariable, GenericLine };

/// Exact degrees of the iterates' last coordinate as a reduced rational
/// function of one parameter t: either u_{q+1} = t with the other coordinates
/// fixed at generic rationals, or all coordinates moving along a generic line
/// u_i = c_i t + d_i. Degrees are found by rational-function interpolation
/// with doubling degree bounds and independent verification points.
std::vector<long> degree_sequence(const MapParams& params, DegreeMode mode, int n,
                                  std::uint64_t seed);

}  // namespace dkdv
