#pragma once

#include <cstdint>
#include <string>

#include "dkdv/lattice.hpp"
#include "dkdv/mapping.hpp"
#include "dkdv/rational.hpp"

namespace dkdv {

/// A fully validated batch-run request. The seed determines every random
/// choice downstream; identical configs produce byte-identical result
/// sections.
struct RunConfig {
    enum class Command { Analyze, Express, Dyndeg, Degrees, Lattice, Sweep };

    Command command = Command::Analyze;

    Rational a{1};
    Rational b{1};
    int q = 2;
    int q_to = 0;  // sweep iterates q..q_to (0: just q)

    int k = 0;          // hypersurface; 0 picks q+1
    int window = 0;     // classification window; 0 picks the default 6q+10
    int iterations = 0; // dyndeg orbit length; 0 picks 34
    int burn_in = -1;   // dyndeg burn-in; -1 picks q+1
    int count = 0;      // degrees sequence length; 0 picks q+1
    std::uint64_t seed = 1;

    std::string regime;          // express: "integrable" | "nonintegrable" | "" (from a, b)
    std::string mode = "single"; // degrees: "single" | "line"

    std::string staircase_path;  // lattice input file
    std::string direction = "both";
    std::string format = "json"; // lattice rendering: json | ascii | svg

    std::string output_path;     // optional; report is always returned
    GlyphSet glyphs;
    int jobs = 1;                // sweep fan-out
};

struct ReportEnvelope {
    int schema_version = 1;
    std::string tool_version;
    std::string config_json;   // echo of the validated config
    std::string results_json;  // deterministic per config
    double seconds = 0.0;

    std::string to_string() const;  // the full envelope as JSON
};

/// Throws ConfigInvalid with a field-level message.
void validate(const RunConfig& config);

/// Dispatches to the requested module and assembles the report. Writes the
/// envelope (and any rendering artifact) to config.output_path when set,
/// resolving relative paths against $DKDV_OUTPUT_DIR.
ReportEnvelope run(const RunConfig& config);

Staircase load_staircase_json(const std::string& text);
std::string config_echo_json(const RunConfig& config);

extern const char* const kToolVersion;

}  // namespace dkdv
