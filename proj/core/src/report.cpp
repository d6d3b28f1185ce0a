#include "dkdv/report.hpp"

#include <json.hpp>

namespace dkdv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json signatures_json(const std::vector<StepSignature>& sigs) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : sigs) arr.push_back(s.str());
    return arr;
}

}  // namespace

std::string pattern_record_json(const SingularityPattern& pattern) {
    ordered_json j;
    j["params"] = {{"a", pattern.params.a.str()},
                   {"b", pattern.params.b.str()},
                   {"q", pattern.params.q}};
    j["hypersurface"] = pattern.hypersurface;
    ordered_json cls;
    cls["type"] = pattern.type_str();
    cls["length"] = pattern.length;
    cls["period"] = pattern.period;
    cls["forward_onset"] = pattern.forward_onset;
    cls["backward_onset"] = pattern.backward_onset;
    j["classification"] = cls;
    j["forward_signatures"] = signatures_json(pattern.forward);
    j["backward_signatures"] = signatures_json(pattern.backward);
    j["codim_profile"] = pattern.codim_profile;
    j["seed"] = pattern.seed;
    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < pattern.samples.size(); ++i) {
        if (static_cast<int>(i) + 1 == pattern.hypersurface)
            samples.push_back("eps");
        else
            samples.push_back(pattern.samples[i].str());
    }
    j["samples"] = samples;
    j["truncation"] = pattern.truncation_used;
    return j.dump(2);
}

std::string express_record_json(const Poly& char_poly, const RootEstimate& root,
                                const Rational& tolerance) {
    ordered_json j;
    ordered_json poly;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : char_poly.descending()) coeffs.push_back(c.str());
    poly["coefficients_desc"] = coeffs;
    poly["pretty"] = char_poly.str("λ");
    j["char_poly"] = poly;

    ordered_json r;
    r["greater_than_one"] = root.greater_than_one;
    r["decimal"] = root.decimal(12);
    r["low"] = root.low.str();
    r["high"] = root.high.str();
    r["tolerance"] = tolerance.str();
    j["root"] = r;

    auto [core, factors] = split_cyclotomic_factors(char_poly);
    ordered_json fact;
    ordered_json removed = ordered_json::array();
    for (const auto& f : factors) removed.push_back(f.str("λ"));
    fact["cyclotomic_factors"] = removed;
    fact["core"] = core.str("λ");
    j["factorization"] = fact;
    return j.dump(2);
}

std::string diophantine_record_json(const DiophantineEstimate& estimate, int n_iters) {
    ordered_json j;
    j["lambda_hat"] = estimate.lambda_hat;
    j["slope"] = estimate.slope;
    j["residual"] = estimate.residual;
    j["fit_window"] = {estimate.fit_begin, estimate.fit_end};
    j["n_iters"] = n_iters;
    j["seed"] = estimate.seed;
    j["heights"] = estimate.series.heights;
    int flagged = 0;
    for (bool f : estimate.series.infinity_flagged) flagged += f ? 1 : 0;
    j["infinity_flagged_steps"] = flagged;
    return j.dump(2);
}

std::string degrees_record_json(const std::vector<long>& degrees, const std::string& mode,
                                std::uint64_t seed) {
    ordered_json j;
    j["mode"] = mode;
    j["degrees"] = degrees;
    j["seed"] = seed;
    return j.dump(2);
}

}  // namespace dkdv
