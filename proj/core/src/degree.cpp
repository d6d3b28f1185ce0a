#include "dkdv/degree.hpp"

#include <cmath>
#include <map>
#include <optional>

#include "dkdv/sampling.hpp"
#include "dkdv/zp.hpp"

namespace dkdv {

namespace {

using Kind = EntrySignature::Kind;

}  // namespace

ValueCountPattern ValueCountPattern::from_singularity(const SingularityPattern& pattern) {
    using Type = SingularityPattern::Type;
    if (pattern.type == Type::Cyclic || pattern.type == Type::Anticonfined)
        throw std::invalid_argument(
            "cyclic and anticonfined patterns contribute nothing to the balance");
    if (pattern.type == Type::Unclassifiable)
        throw std::invalid_argument("pattern must be classified before reduction");
    if (pattern.forward.empty()) throw EmptyPattern();

    auto last_entry = [&](long j) { return pattern.forward[static_cast<std::size_t>(j)].entries.back(); };
    const long w = static_cast<long>(pattern.forward.size()) - 1;

    ValueCountPattern vc;
    if (pattern.type == Type::ConfinedOpen) {
        long end = std::min(pattern.length, w);
        for (long j = 0; j <= end; ++j) {
            EntrySignature e = last_entry(j);
            if (!e.is_singular()) continue;
            (e.kind == Kind::ZeroLike ? vc.prefix_zeros : vc.prefix_infs).push_back(j);
        }
        return vc;
    }

    // Unconfined: fold the repeating tail into residue classes mod the period
    // and push each class back to its first consistent occurrence. Whatever
    // singular offsets remain uncovered form the finite prefix.
    const long period = pattern.period;
    vc.period = period;
    std::map<long, Kind> block;  // residue -> kind
    for (long j = pattern.forward_onset; j < pattern.forward_onset + period && j <= w; ++j) {
        EntrySignature e = last_entry(j);
        if (e.is_singular()) block[j % period] = e.kind;
    }
    std::map<long, long> block_start;  // residue -> first offset of the periodic run
    for (const auto& [residue, kind] : block) {
        long start = residue;
        for (long j = residue; j <= w; j += period) {
            EntrySignature e = last_entry(j);
            if (!(e.is_singular() && e.kind == kind)) start = j + period;
        }
        block_start[residue] = start;
        (kind == Kind::ZeroLike ? vc.block_zeros : vc.block_infs).push_back(start);
    }
    for (long j = 0; j < pattern.forward_onset + period && j <= w; ++j) {
        EntrySignature e = last_entry(j);
        if (!e.is_singular()) continue;
        auto it = block.find(j % period);
        bool covered = it != block.end() && it->second == e.kind && j >= block_start[j % period];
        if (!covered) (e.kind == Kind::ZeroLike ? vc.prefix_zeros : vc.prefix_infs).push_back(j);
    }
    return vc;
}

Poly express_char_poly(const ValueCountPattern& pattern) {
    if (pattern.empty()) throw EmptyPattern();
    bool has_block = !pattern.block_zeros.empty() || !pattern.block_infs.empty();
    if (has_block && !pattern.period)
        throw std::invalid_argument("block offsets require a period");
    if (pattern.period && *pattern.period < 1)
        throw std::invalid_argument("period must be >= 1");

    auto offset_sum = [](const std::vector<long>& offsets) {
        Poly p;
        for (long o : offsets) {
            if (o < 0) throw std::invalid_argument("pattern offsets must be >= 0");
            p = p + Poly::monomial(Rational(1), o);
        }
        return p;
    };

    // Work in x = 1/lambda, where an offset j contributes x^j.
    Poly prefix = offset_sum(pattern.prefix_zeros) - offset_sum(pattern.prefix_infs);
    Poly block = offset_sum(pattern.block_zeros) - offset_sum(pattern.block_infs);

    Poly numerator;
    if (!pattern.period) {
        numerator = prefix;
    } else if (pattern.prefix_zeros.empty() && pattern.prefix_infs.empty()) {
        numerator = block;  // both geometric sums share 1/(1-x^T); it cancels whole
    } else {
        Poly geometric = Poly::constant(Rational(1)) - Poly::monomial(Rational(1), *pattern.period);
        numerator = prefix * geometric + block;
        Poly spurious = Poly::gcd(numerator, geometric);
        if (spurious.degree() > 0) numerator = Poly::divmod(numerator, spurious).first;
    }
    if (numerator.is_zero()) return Poly();
    return numerator.reversed().primitive_integer();
}

std::pair<Poly, std::vector<Poly>> split_cyclotomic_factors(const Poly& poly) {
    std::pair<Poly, std::vector<Poly>> result{poly, {}};
    if (poly.degree() < 1) return result;
    // phi(k) >= sqrt(k/2), so factors of degree <= d have index below 2(d+1)^2.
    long k_max = 2 * (poly.degree() + 1) * (poly.degree() + 1);
    for (long k = 1; k <= k_max && result.first.degree() >= 1; ++k) {
        Poly phi = Poly::cyclotomic(k);
        if (phi.degree() > result.first.degree()) continue;
        Poly quotient;
        while (result.first.degree() >= phi.degree() &&
               Poly::divides(result.first, phi, &quotient)) {
            result.second.push_back(phi);
            result.first = quotient;
        }
    }
    return result;
}

std::string RootEstimate::decimal(int digits) const {
    if (digits < 1) digits = 1;
    mpq_class mid = (low.raw() + high.raw()) / 2;
    bool negative = sgn(mid) < 0;
    if (negative) mid = -mid;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = mid.get_num() * scale / mid.get_den();
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    if (negative) s.insert(0, "-");
    return s;
}

RootEstimate largest_real_root(const Poly& poly, const Rational& tol) {
    if (poly.degree() < 1)
        throw std::invalid_argument("root isolation needs a nonconstant polynomial");
    if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");

    Rational lo = Rational(1) + Rational(1, 1000000000);
    Rational hi(2);
    int sign_lo = poly.eval(lo).sign();
    int sign_hi = poly.eval(hi).sign();

    RootEstimate est;
    if (sign_hi == 0) return {true, hi, hi};
    if (sign_lo == 0) return {true, lo, lo};
    if (sign_lo == sign_hi) return est;  // no root beyond 1: integrable signal

    est.greater_than_one = true;
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / Rational(2);
        int sign_mid = poly.eval(mid).sign();
        if (sign_mid == 0) {
            lo = mid;
            hi = mid;
            break;
        }
        (sign_mid == sign_hi ? hi : lo) = mid;
    }
    est.low = lo;
    est.high = hi;
    return est;
}

DiophantineEstimate diophantine_degree(const MapParams& params, int n_iters, std::uint64_t seed,
                                       int burn_in) {
    if (burn_in < 0) burn_in = params.q + 1;
    if (n_iters < 2 * burn_in + 8)
        throw std::invalid_argument("n_iters must be at least 2*burn_in + 8");

    Sampler sampler(seed);
    for (int attempt = 0;; ++attempt) {
        try {
            std::vector<Projective> state;
            for (int i = 0; i <= params.q; ++i) state.emplace_back(sampler.generic());
            Projective a(params.a), b(params.b);

            DiophantineEstimate est;
            est.seed = seed;
            auto record = [&est](const std::vector<Projective>& st) {
                double h = 0.0;
                bool flagged = false;
                for (const auto& c : st) {
                    if (!c.is_finite()) {
                        flagged = true;
                        continue;
                    }
                    h = std::max(h, c.value().log10_height());
                }
                est.series.heights.push_back(h);
                est.series.infinity_flagged.push_back(flagged);
            };
            record(state);
            for (int n = 1; n <= n_iters; ++n) {
                try {
                    state = phi_forward(state, a, b);
                } catch (const IndeterminateStep&) {
                    throw OrbitCollapse(n);
                }
                record(state);
            }

            est.fit_begin = std::max(burn_in, n_iters / 2);
            est.fit_end = n_iters;
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int m = 0;
            for (int n = est.fit_begin; n <= est.fit_end; ++n) {
                double h = est.series.heights[static_cast<std::size_t>(n)];
                if (h <= 0) continue;
                double y = std::log10(h);
                sx += n;
                sy += y;
                sxx += static_cast<double>(n) * n;
                sxy += static_cast<double>(n) * y;
                ++m;
            }
            if (m >= 2) {
                double denom = m * sxx - sx * sx;
                est.slope = (m * sxy - sx * sy) / denom;
                double intercept = (sy - est.slope * sx) / m;
                double ss = 0;
                int used = 0;
                for (int n = est.fit_begin; n <= est.fit_end; ++n) {
                    double h = est.series.heights[static_cast<std::size_t>(n)];
                    if (h <= 0) continue;
                    double r = std::log10(h) - (est.slope * n + intercept);
                    ss += r * r;
                    ++used;
                }
                est.residual = std::sqrt(ss / used);
            }
            est.lambda_hat = std::pow(10.0, est.slope);
            return est;
        } catch (const OrbitCollapse&) {
            if (attempt >= 5) throw;
        }
    }
}

namespace {

// ---- rational-function interpolation over the probe prime field ----
//
// Degrees are integers; establishing them only needs zero/nonzero and
// equality decisions about exact values, so the linear algebra runs in the
// same prime field the dependence probes use, with fresh verification points
// guarding every reconstruction.

using PolyP = std::vector<Zp>;  // ascending coefficients, trimmed

void trim(PolyP& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long deg(const PolyP& p) { return static_cast<long>(p.size()) - 1; }

Zp eval(const PolyP& p, Zp x) {
    Zp acc{};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyP mod(PolyP a, const PolyP& b) {
    Zp lead_inv = b.back().inverse();
    while (deg(a) >= deg(b)) {
        Zp f = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

PolyP gcd(PolyP a, PolyP b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// One nonzero nullspace vector of an underdetermined matrix, or empty if the
// matrix unexpectedly has full column rank.
std::vector<Zp> nullspace_vector(std::vector<std::vector<Zp>> m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<long> pivot_row_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        Zp inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Zp f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_row_of_col[c] = static_cast<long>(r);
        ++r;
    }
    long free_col = -1;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] < 0) {
            free_col = static_cast<long>(c);
            break;
        }
    if (free_col < 0) return {};
    std::vector<Zp> v(cols, Zp{});
    v[static_cast<std::size_t>(free_col)] = Zp::one();
    for (std::size_t c = 0; c < cols; ++c) {
        long pr = pivot_row_of_col[c];
        if (pr >= 0) v[c] = -m[static_cast<std::size_t>(pr)][static_cast<std::size_t>(free_col)];
    }
    return v;
}

// Lazily evaluated pool of parameter points t with the full orbit of last
// coordinates at each; an orbit that hits a division blow-up mod p is dead
// from that step on and simply contributes no point there.
class PointSource {
public:
    PointSource(const MapParams& params, DegreeMode mode, int n_steps, Sampler& sampler)
        : params_(params), mode_(mode), n_steps_(n_steps), rng_(sampler.rng()()) {
        if (mode == DegreeMode::SingleVariable) {
            for (int i = 0; i < params.q; ++i) fixed_.push_back(Zp::from_rational(sampler.generic()));
        } else {
            for (int i = 0; i <= params.q; ++i)
                line_.emplace_back(Zp::from_rational(sampler.generic()),
                                   Zp::from_rational(sampler.generic()));
        }
        a_ = Zp::from_rational(params.a);
        b_ = Zp::from_rational(params.b);
    }

    // `count` points (t, y_step(t)) with valid evaluations at `step`.
    std::vector<std::pair<Zp, Zp>> points(int step, std::size_t count) {
        std::vector<std::pair<Zp, Zp>> pts;
        std::size_t idx = 0;
        while (pts.size() < count) {
            if (idx == cache_.size()) extend();
            const auto& [t, orbit] = cache_[idx++];
            const auto& y = orbit[static_cast<std::size_t>(step)];
            if (y) pts.emplace_back(t, *y);
        }
        return pts;
    }

private:
    void extend() {
        Zp t{rng_() % Zp::modulus};
        if (t.is_zero() || seen_.count(t.v)) return;
        seen_.insert(t.v);
        cache_.emplace_back(t, run_orbit(t));
    }

    std::vector<std::optional<Zp>> run_orbit(Zp t) const {
        std::vector<std::optional<Zp>> last(static_cast<std::size_t>(n_steps_) + 1, std::nullopt);
        std::vector<Zp> st;
        if (mode_ == DegreeMode::SingleVariable) {
            st = fixed_;
            st.push_back(t);
        } else {
            for (const auto& [c, d] : line_) st.push_back(c * t + d);
        }
        for (int n = 1; n <= n_steps_; ++n) {
            if (st.back().is_zero() || st[1].is_zero()) break;
            Zp e = st.front() + a_ * st.back().inverse() - b_ * st[1].inverse();
            st.erase(st.begin());
            st.push_back(e);
            last[static_cast<std::size_t>(n)] = e;
        }
        return last;
    }

    MapParams params_;
    DegreeMode mode_;
    int n_steps_;
    std::mt19937_64 rng_;
    Zp a_, b_;
    std::vector<Zp> fixed_;
    std::vector<std::pair<Zp, Zp>> line_;
    std::vector<std::pair<Zp, std::vector<std::optional<Zp>>>> cache_;
    std::set<std::uint64_t> seen_;
};

long reduced_degree_at(PointSource& source, int step, long bound_hint) {
    long bound = std::max(1L, bound_hint);
    for (int doubling = 0; doubling <= 3; ++doubling, bound *= 2) {
        const std::size_t m = static_cast<std::size_t>(2 * bound) + 1;
        const std::size_t cols = static_cast<std::size_t>(2 * bound) + 2;
        auto pts = source.points(step, m + 3);

        std::vector<std::vector<Zp>> matrix(m, std::vector<Zp>(cols, Zp{}));
        for (std::size_t i = 0; i < m; ++i) {
            const auto& [t, y] = pts[i];
            Zp tp = Zp::one();
            for (long j = 0; j <= bound; ++j) {
                matrix[i][static_cast<std::size_t>(j)] = tp;
                matrix[i][static_cast<std::size_t>(bound + 1 + j)] = -(y * tp);
                tp = tp * t;
            }
        }
        auto v = nullspace_vector(std::move(matrix), cols);
        if (v.empty()) continue;

        PolyP num(v.begin(), v.begin() + bound + 1);
        PolyP den(v.begin() + bound + 1, v.end());
        trim(num);
        trim(den);
        if (den.empty()) continue;

        bool verified = true;
        for (std::size_t i = m; i < m + 3 && verified; ++i) {
            const auto& [t, y] = pts[i];
            Zp dv = eval(den, t);
            verified = !dv.is_zero() && eval(num, t) == y * dv;
        }
        if (!verified) continue;

        if (num.empty()) return 0;  // the zero function
        PolyP g = gcd(num, den);
        return std::max(deg(num) - deg(g), deg(den) - deg(g));
    }
    throw InterpolationInconsistent();
}

}  // namespace

std::vector<long> degree_sequence(const MapParams& params, DegreeMode mode, int n,
                                  std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one iterate");
    Sampler sampler(seed);
    PointSource source(params, mode, n, sampler);
    std::vector<long> degrees;
    degrees.reserve(static_cast<std::size_t>(n));
    long hint = 1;
    for (int step = 1; step <= n; ++step) {
        long d = reduced_degree_at(source, step, hint);
        degrees.push_back(d);
        hint = std::max(1L, d);
    }
    return degrees;
}

}  // namespace dkdv
