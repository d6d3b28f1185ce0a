#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dkdv/laurent.hpp"
#include "dkdv/mapping.hpp"
#include "dkdv/rational.hpp"

namespace dkdv {

/// Per-coordinate classification of one iterated state.
struct StepSignature {
    int step_index = 0;  // signed; negative indices are backward iterates
    std::vector<EntrySignature> entries;

    int singular_count() const {
        int n = 0;
        for (const auto& e : entries) n += e.is_singular() ? 1 : 0;
        return n;
    }
    bool all_regular() const { return singular_count() == 0; }
    bool same_entries(const StepSignature& o) const { return entries == o.entries; }

    /// "(u,0,inf)" rendering.
    std::string str() const;
};

/// Which initial coordinates the eps^0 data of a given step still depends on,
/// established by varying one coordinate at a time across resamples.
/// Dependence once detected is never retracted by further probes.
struct DependenceProfile {
    int step_index = 0;
    std::set<int> depends_on;  // 1-based indices into (u_1, ..., u_{q+1})
};

struct SingularityPattern {
    enum class Type { ConfinedOpen, Cyclic, Unconfined, Anticonfined, Unclassifiable };

    MapParams params;
    int hypersurface = 0;  // index k of the seeded coordinate u_k = eps
    Type type = Type::Unclassifiable;

    long length = 0;          // ConfinedOpen: number of steps until codimension 1 returns
    long period = 0;          // Cyclic: full cycle; Unconfined/Anticonfined: forward period
    long forward_onset = 0;   // first step of the repeating forward sub-pattern
    long backward_onset = 0;  // first (negative) step of the backward sub-pattern

    std::vector<StepSignature> forward;   // step 0 (the seeded state) onward
    std::vector<StepSignature> backward;  // step 0, -1, -2, ... (index j holds step -j)
    std::vector<int> codim_profile;       // estimated codimension per forward step

    std::uint64_t seed = 0;
    std::vector<Rational> samples;  // generic values used; slot k-1 is the seeded one
    long truncation_used = 0;

    std::string type_str() const;
};

/// Defaults used throughout the engine: truncation 2q+6 survives the two
/// indeterminacy resolutions of the confined pattern, window 6q+10 covers
/// confinement at 2q+1 and two full unconfined periods with margin.
long default_truncation(const MapParams& params);
int default_window(const MapParams& params);

/// The hypersurfaces u_k = 0 that are singular of codimension 1: {2, q+1}
/// for q >= 2, {2} for q = 1 with a != b, and none for the linear q = 1,
/// a = b case.
std::vector<int> enumerate_codim1_singularities(const MapParams& params);

/// Exact eps-iteration over rational Laurent series. forward/backward both
/// include the seeded state at index 0. Truncation is raised adaptively
/// (doubling, at most 8 times) when leading coefficients cancel out of the
/// known window; throws TruncationExhausted past the cap and DegenerateSample
/// when an accidental exact zero appears at a generically regular position
/// (the caller is expected to resample).
struct EpsilonOrbit {
    std::vector<std::vector<LaurentQ>> forward;
    std::vector<std::vector<LaurentQ>> backward;
    long truncation = 0;
};

EpsilonOrbit epsilon_iterate(const MapParams& params, int k, const std::vector<Rational>& samples,
                             int n_forward, int n_backward, long truncation = 0);

DependenceProfile dependence_probe(const MapParams& params, int k, int step_index,
                                   int probe_count, std::uint64_t seed);

/// Codimension estimates for forward steps 0..n_steps. The estimate at step j
/// is (q+1) minus the number of independent free parameters visible in the
/// eps^0 limits of the regular entries; runs probes at two budgets and throws
/// InconclusiveProbe if they disagree.
std::vector<int> codim_estimate(const MapParams& params, int k, int n_steps, std::uint64_t seed,
                                int probe_count = 3);

SingularityPattern classify_pattern(const MapParams& params, int k, int window = 0,
                                    std::uint64_t seed = 1);

}  // namespace dkdv
