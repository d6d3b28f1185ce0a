#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dkdv/rational.hpp"

namespace dkdv {

/// Seeded source of small generic rationals. Numerators and denominators are
/// uniform in [-50, 50] \ {0}; the small heights keep exact arithmetic fast
/// while making accidental algebraic relations between samples vanishingly
/// rare. Fully deterministic per seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rational generic();

    /// Generic value distinct from every entry of `taken`.
    Rational generic_distinct(const std::vector<Rational>& taken);

    long integer(long lo, long hi);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

std::vector<Rational> generic_vector(Sampler& sampler, std::size_t n);

}  // namespace dkdv
