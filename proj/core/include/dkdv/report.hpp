#pragma once

#include <string>
#include <vector>

#include "dkdv/degree.hpp"
#include "dkdv/singularity.hpp"

namespace dkdv {

/// JSON record emitters. Every exact quantity crosses as a string ("p/q" or a
/// decimal paired with its tolerance); machine floats appear only for the
/// statistical estimators. Key order is fixed so identical inputs serialize
/// byte-identically.

std::string pattern_record_json(const SingularityPattern& pattern);

std::string express_record_json(const Poly& char_poly, const RootEstimate& root,
                                const Rational& tolerance);

std::string diophantine_record_json(const DiophantineEstimate& estimate, int n_iters);

std::string degrees_record_json(const std::vector<long>& degrees, const std::string& mode,
                                std::uint64_t seed);

}  // namespace dkdv
