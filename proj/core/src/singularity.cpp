#include "dkdv/singularity.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "dkdv/sampling.hpp"
#include "dkdv/zp.hpp"

namespace dkdv {

namespace {

constexpr int kMaxDoublings = 8;
constexpr int kMaxResamples = 5;

template <class C>
C lift_coeff(const Rational& r);

template <>
Rational lift_coeff<Rational>(const Rational& r) { return r; }

template <>
Zp lift_coeff<Zp>(const Rational& r) { return Zp::from_rational(r); }

// One eps-iteration at a fixed truncation order. Signatures are extracted
// eagerly so that a cancellation out of the known window surfaces as
// UndeterminedLeading right away.
template <class C>
struct Run {
    std::vector<std::vector<Laurent<C>>> fwd, bwd;
    std::vector<StepSignature> fwd_sigs, bwd_sigs;
    long truncation = 0;
};

template <class C>
StepSignature signature_of(const std::vector<Laurent<C>>& state, int step_index) {
    StepSignature sig;
    sig.step_index = step_index;
    sig.entries.reserve(state.size());
    for (const auto& s : state) sig.entries.push_back(s.classify());
    return sig;
}

template <class C>
Run<C> run_once(const MapParams& p, int k, const std::vector<Rational>& samples, int nf, int nb,
                long trunc) {
    using L = Laurent<C>;
    const std::size_t dim = static_cast<std::size_t>(p.q) + 1;

    L a = L::constant(lift_coeff<C>(p.a), trunc);
    L b = L::constant(lift_coeff<C>(p.b), trunc);

    std::vector<L> state;
    state.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (static_cast<int>(i) + 1 == k) {
            state.push_back(L::epsilon(trunc));
        } else {
            if (samples[i].is_zero()) throw std::invalid_argument("sampled value must be nonzero");
            state.push_back(L::constant(lift_coeff<C>(samples[i]), trunc));
        }
    }

    Run<C> run;
    run.truncation = trunc;
    run.fwd.push_back(state);
    run.fwd_sigs.push_back(signature_of(state, 0));
    for (int j = 1; j <= nf; ++j) {
        auto next = phi_forward(run.fwd.back(), a, b);
        if (next.back().is_exact_zero()) throw DegenerateSample();
        run.fwd_sigs.push_back(signature_of(next, j));
        run.fwd.push_back(std::move(next));
    }
    run.bwd.push_back(state);
    run.bwd_sigs.push_back(run.fwd_sigs.front());
    for (int j = 1; j <= nb; ++j) {
        auto prev = phi_backward(run.bwd.back(), a, b);
        if (prev.front().is_exact_zero()) throw DegenerateSample();
        run.bwd_sigs.push_back(signature_of(prev, -j));
        run.bwd.push_back(std::move(prev));
    }
    return run;
}

template <class C>
Run<C> run_adaptive(const MapParams& p, int k, const std::vector<Rational>& samples, int nf,
                    int nb, long trunc0) {
    long trunc = trunc0;
    for (int doubling = 0;; ++doubling) {
        try {
            return run_once<C>(p, k, samples, nf, nb, trunc);
        } catch (const UndeterminedLeading&) {
            if (doubling >= kMaxDoublings) throw TruncationExhausted(trunc);
            trunc *= 2;
        }
    }
}

std::vector<int> free_variables(const MapParams& p, int k) {
    std::vector<int> vars;
    for (int i = 1; i <= p.q + 1; ++i)
        if (i != k) vars.push_back(i);
    return vars;
}

void validate_hypersurface(const MapParams& p, int k) {
    if (k < 2 || k > p.q + 1)
        throw std::invalid_argument("hypersurface index must satisfy 2 <= k <= q+1");
}

// Probe data for the dependence analysis, all in the mod-p carrier: the base
// run plus probe_count reruns per free variable with only that variable
// resampled. Comparing the eps^0 coefficients of entries that are regular in
// the base run exposes which variables each step still depends on.
struct ProbeAnalysis {
    Run<Zp> base;
    std::vector<Rational> samples;
    // probes[v] = runs with variable v varied (v is the 1-based u index)
    std::map<int, std::vector<Run<Zp>>> probes;
    int n_forward = 0;

    std::set<int> dependence_at(int step) const {
        std::set<int> deps;
        const StepSignature& base_sig = base.fwd_sigs[static_cast<std::size_t>(step)];
        const auto& base_state = base.fwd[static_cast<std::size_t>(step)];
        for (const auto& [var, runs] : probes) {
            bool dependent = false;
            for (const auto& run : runs) {
                const StepSignature& sig = run.fwd_sigs[static_cast<std::size_t>(step)];
                const auto& state = run.fwd[static_cast<std::size_t>(step)];
                for (std::size_t e = 0; e < base_sig.entries.size() && !dependent; ++e) {
                    if (base_sig.entries[e].is_singular()) continue;
                    if (sig.entries[e].is_singular() ||
                        !(state[e].coeff(0) == base_state[e].coeff(0)))
                        dependent = true;
                }
                if (dependent) break;
            }
            if (dependent) deps.insert(var);
        }
        return deps;
    }

    int regular_count_at(int step) const {
        return static_cast<int>(base.fwd_sigs[static_cast<std::size_t>(step)].entries.size()) -
               base.fwd_sigs[static_cast<std::size_t>(step)].singular_count();
    }

    // Estimated codimension: total dimension minus the number of independent
    // free parameters. The regular entries are the only coordinates that move
    // in the eps -> 0 limit, and they cannot exceed the number of variables
    // they jointly depend on, so the parameter count is the minimum of the two.
    int codim_at(int step) const {
        int rank = std::min<int>(regular_count_at(step),
                                 static_cast<int>(dependence_at(step).size()));
        int dim = static_cast<int>(base.fwd_sigs.front().entries.size());
        return dim - rank;
    }
};

ProbeAnalysis probe_analysis(const MapParams& p, int k, std::uint64_t seed, int n_forward,
                             int n_backward, int probe_count, long trunc0) {
    Sampler sampler(seed);
    for (int attempt = 0;; ++attempt) {
        try {
            ProbeAnalysis an;
            an.n_forward = n_forward;
            an.samples = generic_vector(sampler, static_cast<std::size_t>(p.q) + 1);
            an.base = run_adaptive<Zp>(p, k, an.samples, n_forward, n_backward, trunc0);
            for (int var : free_variables(p, k)) {
                auto& runs = an.probes[var];
                for (int t = 0; t < probe_count; ++t) {
                    std::vector<Rational> varied = an.samples;
                    for (int retry = 0;; ++retry) {
                        varied[static_cast<std::size_t>(var) - 1] =
                            sampler.generic_distinct({an.samples[static_cast<std::size_t>(var) - 1]});
                        try {
                            runs.push_back(run_adaptive<Zp>(p, k, varied, n_forward, 0, trunc0));
                            break;
                        } catch (const DegenerateSample&) {
                            if (retry >= kMaxResamples) throw ProbableIdentityZero();
                        }
                    }
                }
            }
            return an;
        } catch (const DegenerateSample&) {
            if (attempt >= kMaxResamples) throw ProbableIdentityZero();
        }
    }
}

// Minimal-period repeating tail of a signature sequence. Requires at least
// two full periods inside the window and a singular signature in the tail.
// Returns {period, onset}.
std::optional<std::pair<int, int>> periodic_singular_tail(const std::vector<StepSignature>& sigs,
                                                          int first) {
    const int w = static_cast<int>(sigs.size()) - 1;
    for (int period = 1; first + 2 * period - 1 <= w; ++period) {
        int onset = first;
        for (int j = w - period; j >= first; --j) {
            if (!sigs[static_cast<std::size_t>(j)].same_entries(
                    sigs[static_cast<std::size_t>(j + period)])) {
                onset = j + 1;
                break;
            }
        }
        if (w - onset + 1 < 2 * period) continue;
        bool singular = false;
        for (int j = onset; j <= w && !singular; ++j)
            singular = sigs[static_cast<std::size_t>(j)].singular_count() > 0;
        if (!singular) continue;
        return std::make_pair(period, onset);
    }
    return std::nullopt;
}

}  // namespace

std::string StepSignature::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i].str();
    }
    os << ")";
    return os.str();
}

std::string SingularityPattern::type_str() const {
    switch (type) {
        case Type::ConfinedOpen: return "confined_open";
        case Type::Cyclic: return "cyclic";
        case Type::Unconfined: return "unconfined";
        case Type::Anticonfined: return "anticonfined";
        default: return "unclassifiable";
    }
}

long default_truncation(const MapParams& params) { return 2 * params.q + 6; }

int default_window(const MapParams& params) { return 6 * params.q + 10; }

std::vector<int> enumerate_codim1_singularities(const MapParams& params) {
    if (params.q == 1) {
        if (params.integrable()) return {};  // linear, no singularities
        return {2};
    }
    return {2, params.q + 1};
}

EpsilonOrbit epsilon_iterate(const MapParams& params, int k, const std::vector<Rational>& samples,
                             int n_forward, int n_backward, long truncation) {
    validate_hypersurface(params, k);
    if (samples.size() != static_cast<std::size_t>(params.q) + 1)
        throw std::invalid_argument("need q+1 sample slots");
    if (truncation <= 0) truncation = default_truncation(params);
    auto run = run_adaptive<Rational>(params, k, samples, n_forward, n_backward, truncation);
    EpsilonOrbit orbit;
    orbit.forward = std::move(run.fwd);
    orbit.backward = std::move(run.bwd);
    orbit.truncation = run.truncation;
    return orbit;
}

DependenceProfile dependence_probe(const MapParams& params, int k, int step_index,
                                   int probe_count, std::uint64_t seed) {
    validate_hypersurface(params, k);
    if (step_index < 0) throw std::invalid_argument("dependence probing is forward only");
    if (probe_count < 1) throw std::invalid_argument("probe_count must be positive");
    auto an = probe_analysis(params, k, seed, step_index, 0, probe_count,
                             default_truncation(params));
    DependenceProfile profile;
    profile.step_index = step_index;
    profile.depends_on = an.dependence_at(step_index);
    return profile;
}

std::vector<int> codim_estimate(const MapParams& params, int k, int n_steps, std::uint64_t seed,
                                int probe_count) {
    validate_hypersurface(params, k);
    if (n_steps < 0) throw std::invalid_argument("n_steps must be >= 0");
    if (probe_count < 1) throw std::invalid_argument("probe_count must be positive");
    long trunc0 = default_truncation(params);
    auto an = probe_analysis(params, k, seed, n_steps, 0, probe_count, trunc0);
    auto an2 = probe_analysis(params, k, seed + 0x9e3779b97f4a7c15ull, n_steps, 0,
                              2 * probe_count, trunc0);
    std::vector<int> codims;
    codims.reserve(static_cast<std::size_t>(n_steps) + 1);
    for (int j = 0; j <= n_steps; ++j) {
        int c1 = an.codim_at(j);
        int c2 = an2.codim_at(j);
        if (c1 != c2) throw InconclusiveProbe();
        codims.push_back(c1);
    }
    return codims;
}

SingularityPattern classify_pattern(const MapParams& params, int k, int window,
                                    std::uint64_t seed) {
    validate_hypersurface(params, k);
    const int w = window > 0 ? window : default_window(params);
    const int probe_count = 3;
    const std::set<int> full(free_variables(params, k).begin(),
                             free_variables(params, k).end());

    SingularityPattern pattern{params};
    pattern.hypersurface = k;
    pattern.seed = seed;

    for (int attempt = 0;; ++attempt) {
        std::uint64_t attempt_seed = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt);
        ProbeAnalysis an;
        try {
            an = probe_analysis(params, k, attempt_seed, w, w, probe_count,
                                default_truncation(params));
        } catch (const ProbableIdentityZero&) {
            if (attempt >= kMaxResamples) throw;
            continue;
        }

        pattern.samples = an.samples;
        pattern.forward = an.base.fwd_sigs;
        pattern.backward = an.base.bwd_sigs;
        pattern.truncation_used = an.base.truncation;

        std::vector<std::set<int>> deps;
        std::vector<int> codims;
        deps.reserve(static_cast<std::size_t>(w) + 1);
        for (int j = 0; j <= w; ++j) {
            deps.push_back(an.dependence_at(j));
            codims.push_back(an.codim_at(j));
        }
        pattern.codim_profile = codims;

        const auto& sigs = an.base.fwd_sigs;

        // Cyclic: the signature-and-dependence state recurs exactly, and the
        // recurrence persists across the window.
        for (int t = 1; 2 * t <= w; ++t) {
            if (!sigs[static_cast<std::size_t>(t)].same_entries(sigs.front())) continue;
            if (deps[static_cast<std::size_t>(t)] != deps.front()) continue;
            bool periodic = true;
            for (int j = 0; j + t <= w && periodic; ++j)
                periodic = sigs[static_cast<std::size_t>(j)].same_entries(
                    sigs[static_cast<std::size_t>(j + t)]);
            if (!periodic) continue;
            pattern.type = SingularityPattern::Type::Cyclic;
            pattern.period = t;
            return pattern;
        }

        // Confined: singular signatures die out, and some step of the regular
        // tail depends on every initial coordinate again. The reported length
        // is the first step at which codimension 1 returns.
        int last_singular = 0;
        for (int j = 1; j <= w; ++j)
            if (sigs[static_cast<std::size_t>(j)].singular_count() > 0) last_singular = j;
        if (last_singular < w) {
            int j_reg = last_singular + 1;
            int j_full = -1;
            for (int j = j_reg; j <= w && j_full < 0; ++j)
                if (deps[static_cast<std::size_t>(j)] == full) j_full = j;
            if (j_full >= 0) {
                long length = 0;
                for (int j = 1; j <= w && length == 0; ++j)
                    if (codims[static_cast<std::size_t>(j)] == 1) length = j;
                pattern.type = SingularityPattern::Type::ConfinedOpen;
                pattern.length = length;
                return pattern;
            }
        }

        // Forward-periodic singular tail: unconfined when the backward orbit
        // stays regular, anticonfined when it is eventually periodic too.
        if (auto fwd_tail = periodic_singular_tail(sigs, 0)) {
            auto [fperiod, fonset] = *fwd_tail;
            bool backward_regular = true;
            for (std::size_t j = 1; j < an.base.bwd_sigs.size() && backward_regular; ++j)
                backward_regular = an.base.bwd_sigs[j].all_regular();
            if (backward_regular) {
                pattern.type = SingularityPattern::Type::Unconfined;
                pattern.period = fperiod;
                pattern.forward_onset = fonset;
                return pattern;
            }
            if (auto bwd_tail = periodic_singular_tail(an.base.bwd_sigs, 1)) {
                pattern.type = SingularityPattern::Type::Anticonfined;
                pattern.period = fperiod;
                pattern.forward_onset = fonset;
                pattern.backward_onset = -bwd_tail->second;
                return pattern;
            }
        }

        if (attempt >= kMaxResamples) {
            pattern.type = SingularityPattern::Type::Unclassifiable;
            return pattern;
        }
    }
}

}  // namespace dkdv
