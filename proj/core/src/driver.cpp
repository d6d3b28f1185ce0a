#include "dkdv/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include <json.hpp>

#include "dkdv/degree.hpp"
#include "dkdv/report.hpp"
#include "dkdv/singularity.hpp"

namespace dkdv {

const char* const kToolVersion = "0.1.0";

namespace {

using ordered_json = nlohmann::ordered_json;

std::string command_name(RunConfig::Command c) {
    switch (c) {
        case RunConfig::Command::Analyze: return "analyze";
        case RunConfig::Command::Express: return "express";
        case RunConfig::Command::Dyndeg: return "dyndeg";
        case RunConfig::Command::Degrees: return "degrees";
        case RunConfig::Command::Lattice: return "lattice";
        default: return "sweep";
    }
}

MapParams params_of(const RunConfig& c) { return MapParams(c.a, c.b, c.q); }

int hypersurface_of(const RunConfig& c) { return c.k > 0 ? c.k : c.q + 1; }

std::uint64_t scenario_seed(std::uint64_t base, int q, int k) {
    return base + 1000003ull * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(k);
}

ordered_json analyze_results(const MapParams& params, int k, int window, std::uint64_t seed) {
    SingularityPattern pattern = classify_pattern(params, k, window, seed);
    return ordered_json::parse(pattern_record_json(pattern));
}

ordered_json express_results(const RunConfig& config) {
    // The regime picks canonical parameters when the configured ones do not
    // already match it: a = b for the integrable balance, a != b otherwise.
    Rational a = config.a, b = config.b;
    std::string regime = config.regime;
    if (regime.empty()) regime = a == b ? "integrable" : "nonintegrable";
    if (regime == "integrable" && !(a == b)) b = a;
    if (regime == "nonintegrable" && a == b) b = a + Rational(1);
    MapParams params(a, b, config.q);

    SingularityPattern pattern = classify_pattern(params, params.q + 1,
                                                  config.window, config.seed);
    ValueCountPattern counts = ValueCountPattern::from_singularity(pattern);
    Poly poly = express_char_poly(counts);
    Rational tol(1, 1000000000000L);
    RootEstimate root = largest_real_root(poly, tol);

    ordered_json j;
    j["regime"] = regime;
    j["pattern_type"] = pattern.type_str();
    j["record"] = ordered_json::parse(express_record_json(poly, root, tol));
    return j;
}

ordered_json dyndeg_results(const MapParams& params, int n_iters, std::uint64_t seed,
                            int burn_in) {
    DiophantineEstimate est = diophantine_degree(params, n_iters, seed, burn_in);
    return ordered_json::parse(diophantine_record_json(est, n_iters));
}

ordered_json degrees_results(const RunConfig& config) {
    MapParams params = params_of(config);
    DegreeMode mode = config.mode == "line" ? DegreeMode::GenericLine : DegreeMode::SingleVariable;
    int n = config.count > 0 ? config.count : config.q + 1;
    auto degrees = degree_sequence(params, mode, n, config.seed);
    return ordered_json::parse(degrees_record_json(degrees, config.mode, config.seed));
}

Direction direction_of(const std::string& name) {
    if (name == "NE" || name == "ne") return Direction::NE;
    if (name == "SW" || name == "sw") return Direction::SW;
    return Direction::Both;
}

ordered_json lattice_results(const RunConfig& config, std::string* artifact,
                             std::string* artifact_ext) {
    std::ifstream in(config.staircase_path);
    if (!in) throw ConfigInvalid("staircase", "cannot open " + config.staircase_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    Staircase staircase = load_staircase_json(buffer.str());
    MapParams params = params_of(config);

    PatternMap map = evolve(staircase, params, direction_of(config.direction), nullptr);
    std::vector<InteractionCase> cases = classify_interaction(staircase, params);

    ordered_json j;
    j["pattern"] = ordered_json::parse(render_json(map, staircase, cases));
    if (config.format == "ascii") {
        *artifact = render_ascii(map, config.glyphs);
        *artifact_ext = ".txt";
        j["rendering"] = *artifact;
    } else if (config.format == "svg") {
        *artifact = render_svg(map);
        *artifact_ext = ".svg";
    }
    return j;
}

ordered_json sweep_results(const RunConfig& config) {
    int q_hi = config.q_to > 0 ? config.q_to : config.q;
    if (q_hi < config.q) q_hi = config.q;

    auto scenario = [&](int q) {
        RunConfig c = config;
        c.q = q;
        MapParams params(c.a, c.b, q);
        ordered_json entry;
        entry["q"] = q;
        ordered_json patterns = ordered_json::array();
        for (int k : enumerate_codim1_singularities(params))
            patterns.push_back(analyze_results(params, k, c.window, scenario_seed(c.seed, q, k)));
        entry["patterns"] = patterns;
        RunConfig ec = c;
        ec.seed = scenario_seed(c.seed, q, 0);
        entry["express"] = express_results(ec);
        int n_iters = c.iterations > 0 ? c.iterations : 34;
        entry["dyndeg"] = dyndeg_results(params, n_iters, scenario_seed(c.seed, q, 1), c.burn_in);
        return entry;
    };

    ordered_json runs = ordered_json::array();
    if (config.jobs > 1) {
        std::vector<std::future<ordered_json>> futures;
        for (int q = config.q; q <= q_hi; ++q)
            futures.push_back(std::async(std::launch::async, scenario, q));
        for (auto& f : futures) runs.push_back(f.get());
    } else {
        for (int q = config.q; q <= q_hi; ++q) runs.push_back(scenario(q));
    }
    ordered_json j;
    j["runs"] = runs;
    return j;
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("DKDV_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.a.is_zero()) throw ConfigInvalid("a", "must be nonzero");
    if (config.b.is_zero()) throw ConfigInvalid("b", "must be nonzero");
    if (config.q < 1) throw ConfigInvalid("q", "must be >= 1");
    if (config.q_to != 0 && config.q_to < config.q)
        throw ConfigInvalid("q_to", "must be >= q");
    if (config.k != 0 && (config.k < 2 || config.k > config.q + 1))
        throw ConfigInvalid("k", "must lie in [2, q+1]");
    if (config.window < 0) throw ConfigInvalid("window", "must be >= 0");
    if (config.iterations < 0) throw ConfigInvalid("iterations", "must be >= 0");
    if (config.count < 0) throw ConfigInvalid("count", "must be >= 0");
    if (config.jobs < 1) throw ConfigInvalid("jobs", "must be >= 1");
    if (!config.regime.empty() && config.regime != "integrable" &&
        config.regime != "nonintegrable")
        throw ConfigInvalid("regime", "must be 'integrable' or 'nonintegrable'");
    if (config.mode != "single" && config.mode != "line")
        throw ConfigInvalid("mode", "must be 'single' or 'line'");
    if (config.format != "json" && config.format != "ascii" && config.format != "svg")
        throw ConfigInvalid("format", "must be json, ascii or svg");
    if (config.command == RunConfig::Command::Lattice && config.staircase_path.empty())
        throw ConfigInvalid("staircase", "lattice runs need a staircase file");
}

std::string config_echo_json(const RunConfig& config) {
    ordered_json j;
    j["command"] = command_name(config.command);
    j["a"] = config.a.str();
    j["b"] = config.b.str();
    j["q"] = config.q;
    if (config.q_to > 0) j["q_to"] = config.q_to;
    j["k"] = hypersurface_of(config);
    j["window"] = config.window;
    j["iterations"] = config.iterations;
    j["burn_in"] = config.burn_in;
    j["count"] = config.count;
    j["seed"] = config.seed;
    j["regime"] = config.regime;
    j["mode"] = config.mode;
    j["staircase"] = config.staircase_path;
    j["direction"] = config.direction;
    j["format"] = config.format;
    j["jobs"] = config.jobs;
    return j.dump(2);
}

std::string ReportEnvelope::to_string() const {
    ordered_json j;
    j["schema_version"] = schema_version;
    j["tool"] = {{"name", "dkdv"}, {"version", tool_version}};
    j["config"] = ordered_json::parse(config_json);
    j["results"] = ordered_json::parse(results_json);
    j["timing"] = {{"seconds", seconds}};
    return j.dump(2);
}

ReportEnvelope run(const RunConfig& config) {
    validate(config);
    auto start = std::chrono::steady_clock::now();

    ordered_json results;
    std::string artifact;
    std::string artifact_ext;
    switch (config.command) {
        case RunConfig::Command::Analyze:
            results["pattern"] = analyze_results(params_of(config), hypersurface_of(config),
                                                 config.window, config.seed);
            break;
        case RunConfig::Command::Express:
            results = express_results(config);
            break;
        case RunConfig::Command::Dyndeg:
            results = dyndeg_results(params_of(config),
                                     config.iterations > 0 ? config.iterations : 34, config.seed,
                                     config.burn_in);
            break;
        case RunConfig::Command::Degrees:
            results = degrees_results(config);
            break;
        case RunConfig::Command::Lattice:
            results = lattice_results(config, &artifact, &artifact_ext);
            break;
        case RunConfig::Command::Sweep:
            results = sweep_results(config);
            break;
    }

    ReportEnvelope envelope;
    envelope.tool_version = kToolVersion;
    envelope.config_json = config_echo_json(config);
    envelope.results_json = results.dump(2);
    envelope.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!config.output_path.empty()) {
        auto path = resolve_output(config.output_path);
        if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << envelope.to_string() << "\n";
        if (!artifact.empty()) {
            auto side = path;
            side.replace_extension(artifact_ext);
            std::ofstream art(side);
            art << artifact;
        }
    }
    return envelope;
}

Staircase load_staircase_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Staircase s;
    if (j.contains("anchor")) {
        s.anchor_m = j["anchor"][0].get<int>();
        s.anchor_n = j["anchor"][1].get<int>();
    }
    for (const auto& step : j.at("steps")) {
        StaircaseStep st;
        st.width = step.at("width").get<int>();
        for (const auto& v : step.at("values")) {
            std::string lit = v.get<std::string>();
            if (lit == "0") {
                st.values.emplace_back(1);  // placeholder; the mark seeds eps
                st.zero_marks.push_back(true);
            } else {
                st.values.push_back(Rational::parse(lit));
                st.zero_marks.push_back(false);
            }
        }
        s.steps.push_back(std::move(st));
    }
    s.validate();
    return s;
}

}  // namespace dkdv
