#include "dkdv/sampling.hpp"

#include <algorithm>

namespace dkdv {

long Sampler::integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
}

Rational Sampler::generic() {
    auto nonzero = [&] {
        long v = 0;
        while (v == 0) v = integer(-50, 50);
        return v;
    };
    return Rational(nonzero(), nonzero());
}

Rational Sampler::generic_distinct(const std::vector<Rational>& taken) {
    for (;;) {
        Rational r = generic();
        if (std::find(taken.begin(), taken.end(), r) == taken.end()) return r;
    }
}

std::vector<Rational> generic_vector(Sampler& sampler, std::size_t n) {
    std::vector<Rational> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(sampler.generic());
    return v;
}

}  // namespace dkdv
