#pragma once

#include <stdexcept>
#include <string>

namespace dkdv {

// Reciprocal of an exact zero was requested. The caller either has to
// resample its generic values or treat the entry projectively.
struct ExactZeroReciprocal : std::domain_error {
    ExactZeroReciprocal() : std::domain_error("reciprocal of exact zero") {}
};

// Every known coefficient of a series cancelled, so its valuation (and hence
// its classification) is unknown at the current truncation order.
struct UndeterminedLeading : std::runtime_error {
    explicit UndeterminedLeading(long truncation)
        : std::runtime_error("leading coefficient undetermined below order " +
                             std::to_string(truncation)),
          truncation_order(truncation) {}
    long truncation_order;
};

// Adaptive truncation doubling ran out of headroom.
struct TruncationExhausted : std::runtime_error {
    explicit TruncationExhausted(long truncation)
        : std::runtime_error("truncation exhausted at order " + std::to_string(truncation)) {}
};

// A projective-mode map step produced an indeterminate form (0/0, infinity
// minus infinity, ...). Epsilon regularization is needed to continue.
struct IndeterminateStep : std::runtime_error {
    IndeterminateStep() : std::runtime_error("indeterminate form in projective map step") {}
};

// The closed-form orbit formula broke down (a factor u1*u2 + k*(a-b) vanished).
struct DegenerateOrbit : std::runtime_error {
    explicit DegenerateOrbit(long k)
        : std::runtime_error("closed form degenerates at factor index " + std::to_string(k)) {}
};

// An exact zero appeared at a generically regular position of a sampled
// iteration; the caller is expected to resample.
struct DegenerateSample : std::runtime_error {
    DegenerateSample() : std::runtime_error("sampled iteration hit an accidental exact zero") {}
};

// Resampling did not help: the zero at a generically regular position keeps
// reappearing and is in all likelihood structural.
struct ProbableIdentityZero : std::runtime_error {
    ProbableIdentityZero()
        : std::runtime_error("zero persists across resamples; probable identity") {}
};

// An exact orbit ran into a genuine singularity.
struct OrbitCollapse : std::runtime_error {
    explicit OrbitCollapse(int step)
        : std::runtime_error("orbit hit an exact singularity at step " + std::to_string(step)) {}
};

// Probe-based codimension estimates disagreed between probe budgets.
struct InconclusiveProbe : std::runtime_error {
    InconclusiveProbe() : std::runtime_error("codimension probes disagree; raise probe count") {}
};

// Rational-function reconstruction kept failing its verification points.
struct InterpolationInconsistent : std::runtime_error {
    InterpolationInconsistent()
        : std::runtime_error("rational interpolation failed verification after bound doublings") {}
};

struct EmptyPattern : std::invalid_argument {
    EmptyPattern() : std::invalid_argument("value-count pattern has no entries") {}
};

// Interactions between zeros on a single staircase step are out of scope.
struct SameStepUnsupported : std::invalid_argument {
    SameStepUnsupported() : std::invalid_argument("multiple zeros on one staircase step") {}
};

// A requested lattice cell cannot be determined from the given staircase.
struct WindowUndetermined : std::runtime_error {
    WindowUndetermined(int m, int n)
        : std::runtime_error("cell (" + std::to_string(m) + "," + std::to_string(n) +
                             ") is not determined by the staircase") {}
};

// Run configuration failed validation; `field` names the offending entry.
struct ConfigInvalid : std::invalid_argument {
    ConfigInvalid(std::string field_name, const std::string& message)
        : std::invalid_argument(field_name + ": " + message), field(std::move(field_name)) {}
    std::string field;
};

}  // namespace dkdv
