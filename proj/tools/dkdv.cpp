// Command-line front end: analyze / express / dyndeg / degrees / lattice /
// sweep over the reduced mappings and the lattice equation. Reports are JSON
// envelopes; every rational crosses the boundary as an exact "p/q" string.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dkdv/driver.hpp"
#include "dkdv/errors.hpp"

namespace {

struct RawOptions {
    std::string a = "1";
    std::string b = "1";
    dkdv::RunConfig config;
    std::string glyphs;  // "0,8,.,u" override
};

void add_common(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--a", raw.a, "parameter a as an exact rational 'p/q'");
    cmd->add_option("--b", raw.b, "parameter b as an exact rational 'p/q'");
    cmd->add_option("--q", raw.config.q, "reduction order q >= 1");
    cmd->add_option("--seed", raw.config.seed, "64-bit seed; fixes every random choice");
    cmd->add_option("--out", raw.config.output_path,
                    "write the report here (relative paths resolve against $DKDV_OUTPUT_DIR)");
    cmd->set_config("--config", "", "read options from a key=value file");
}

dkdv::RunConfig finalize(RawOptions& raw, dkdv::RunConfig::Command command) {
    raw.config.command = command;
    try {
        raw.config.a = dkdv::Rational::parse(raw.a);
    } catch (const std::exception& e) {
        throw dkdv::ConfigInvalid("a", e.what());
    }
    try {
        raw.config.b = dkdv::Rational::parse(raw.b);
    } catch (const std::exception& e) {
        throw dkdv::ConfigInvalid("b", e.what());
    }
    if (!raw.glyphs.empty()) {
        if (raw.glyphs.size() != 4 && !(raw.glyphs.size() == 7 && raw.glyphs[1] == ','))
            throw dkdv::ConfigInvalid("glyphs", "expected four glyph characters, e.g. '08.u'");
        std::string g = raw.glyphs;
        if (g.size() == 7) {  // comma separated
            g = {g[0], g[2], g[4], g[6]};
        }
        raw.config.glyphs = {g[0], g[1], g[2], g[3], ' '};
    }
    return raw.config;
}

int execute(const dkdv::RunConfig& config) {
    dkdv::ReportEnvelope report = dkdv::run(config);
    std::cout << report.to_string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact singularity and dynamical-degree toolkit for the discrete KdV lattice"};
    app.require_subcommand(1);

    RawOptions raw;
    dkdv::RunConfig::Command command = dkdv::RunConfig::Command::Analyze;

    auto* analyze = app.add_subcommand(
        "analyze", "classify the singularity pattern of the seeded hypersurface u_k = 0");
    add_common(analyze, raw);
    analyze->add_option("--k", raw.config.k, "hypersurface index in [2, q+1]; default q+1");
    analyze->add_option("--window", raw.config.window, "iteration window; default 6q+10");
    analyze->callback([&] { command = dkdv::RunConfig::Command::Analyze; });

    auto* express = app.add_subcommand(
        "express", "characteristic polynomial and largest root of the preimage balance");
    add_common(express, raw);
    express->add_option("--regime", raw.config.regime, "'integrable' or 'nonintegrable'");
    express->add_option("--window", raw.config.window, "classification window; default 6q+10");
    express->callback([&] { command = dkdv::RunConfig::Command::Express; });

    auto* dyndeg = app.add_subcommand(
        "dyndeg", "height-growth estimate of the dynamical degree from an exact orbit");
    add_common(dyndeg, raw);
    dyndeg->add_option("--iters", raw.config.iterations, "orbit length; default 34");
    dyndeg->add_option("--burn-in", raw.config.burn_in, "transient steps to discard; default q+1");
    dyndeg->callback([&] { command = dkdv::RunConfig::Command::Dyndeg; });

    auto* degrees = app.add_subcommand(
        "degrees", "exact degree sequence of the iterates by rational interpolation");
    add_common(degrees, raw);
    degrees->add_option("--mode", raw.config.mode, "'single' (u_{q+1} = t) or 'line'");
    degrees->add_option("--n", raw.config.count, "number of iterates; default q+1");
    degrees->callback([&] { command = dkdv::RunConfig::Command::Degrees; });

    auto* lattice = app.add_subcommand(
        "lattice", "evolve a staircase and render its singularity pattern");
    add_common(lattice, raw);
    lattice->add_option("--staircase", raw.config.staircase_path, "staircase JSON file")
        ->required();
    lattice->add_option("--direction", raw.config.direction, "NE, SW or both");
    lattice->add_option("--format", raw.config.format, "json, ascii or svg");
    lattice->add_option("--glyphs", raw.glyphs, "four ascii glyphs: zero, inf, regular, initial");
    lattice->callback([&] { command = dkdv::RunConfig::Command::Lattice; });

    auto* sweep = app.add_subcommand(
        "sweep", "aggregate analyze/express/dyndeg over a range of q");
    add_common(sweep, raw);
    sweep->add_option("--q-to", raw.config.q_to, "upper end of the q range");
    sweep->add_option("--window", raw.config.window, "classification window; default 6q+10");
    sweep->add_option("--iters", raw.config.iterations, "dyndeg orbit length; default 34");
    sweep->add_option("--jobs", raw.config.jobs, "run scenarios concurrently");
    sweep->callback([&] { command = dkdv::RunConfig::Command::Sweep; });

    CLI11_PARSE(app, argc, argv);

    try {
        return execute(finalize(raw, command));
    } catch (const dkdv::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
