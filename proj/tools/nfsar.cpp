// SPDX-License-Identifier: Apache-2.0
// nfsar: near-field FMCW SAR simulation, reconstruction and trigger-sync tool.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nfsar/error.hpp"
#include "nfsar/image_io.hpp"
#include "nfsar/pipeline.hpp"
#include "nfsar/spectral.hpp"

namespace {

using namespace nfsar;

int exit_code_for(ErrorCode c)
{
    switch (c) {
    case ErrorCode::config_syntax:
    case ErrorCode::config_unknown_key:
    case ErrorCode::config_unit:
    case ErrorCode::config_geometry_mismatch:
    case ErrorCode::config_missing_key:
    case ErrorCode::unsupported_format:
        return 2;
    default:
        return 1;
    }
}

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_failure, "cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    bool oracle = false;
    bool dry_run = false;
    std::optional<std::string> input;
};

void add_common(CLI::App* cmd, Common& c, bool with_input)
{
    cmd->add_option("--config", c.config, "YAML run configuration")->required();
    cmd->add_option("--seed", c.seed, "override the config seed");
    cmd->add_option("--out", c.out, "output root directory");
    cmd->add_option("--format", c.format, "image format")->check(CLI::IsMember({"raw", "csv", "pgm"}));
    cmd->add_flag("--oracle", c.oracle, "add a back-projection cross-check");
    cmd->add_flag("--dry-run", c.dry_run, "validate only, write nothing");
    if (with_input) cmd->add_option("--input", c.input, "beat cube sidecar (.json) to reconstruct");
}

int run(const std::string& name, const Common& c)
{
    const std::string text = read_text(c.config);
    RunConfig cfg = parse_config(text);
    RunOptions opts;
    opts.seed = c.seed;
    opts.out_dir = c.out;
    opts.format = c.format;
    opts.oracle = c.oracle;
    opts.dry_run = c.dry_run;
    opts.input_cube = c.input;
    opts.config_sha256 = sha256_hex(text);
    apply_options(cfg, opts);

    RunResult r;
    if (name == "simulate") r = run_simulate(cfg, opts);
    else if (name == "reconstruct") r = run_reconstruct(cfg, opts);
    else if (name == "pipeline") r = run_pipeline(cfg, opts);
    else if (name == "sync") r = run_sync(cfg, opts);
    else if (name == "calibrate") r = run_calibrate(cfg, opts);

    if (c.dry_run) {
        std::printf("config ok: %s\n", cfg.name.c_str());
        return 0;
    }
    for (const auto& w : r.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    std::printf("%s\n", r.dir.c_str());
    for (const auto& f : r.files) std::printf("  %s\n", f.c_str());
    if (!r.invariants_ok) {
        std::fprintf(stderr, "error[cli:%d]: report flags a violated invariant\n",
                     static_cast<int>(ErrorCode::invariant_violation));
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"near-field FMCW SAR toolkit"};
    app.require_subcommand(1);

    Common common;
    for (const char* name : {"simulate", "reconstruct", "pipeline", "sync", "calibrate"}) {
        auto* cmd = app.add_subcommand(name);
        add_common(cmd, common, std::string(name) == "reconstruct");
    }
    app.get_subcommand("simulate")->description("simulate a beat cube");
    app.get_subcommand("reconstruct")->description("reconstruct an image from a simulated or stored cube");
    app.get_subcommand("pipeline")->description("simulate, calibrate, reconstruct and report");
    app.get_subcommand("sync")->description("simulate the position-synchronized triggers");
    app.get_subcommand("calibrate")->description("fit phase offset and range bias on a reflector capture");

    double lambda_mm = 5.0, standoff_mm = 300.0, half_mm = 200.0, x_mm = 0.0;
    std::size_t samples = 512, ku_samples = 4096;
    auto* msp = app.add_subcommand("msp-check", "numerically check the linear stationary-phase identity");
    msp->add_option("--lambda-mm", lambda_mm, "wavelength");
    msp->add_option("--standoff-mm", standoff_mm, "w");
    msp->add_option("--half-aperture-mm", half_mm, "aperture half length");
    msp->add_option("--x-mm", x_mm, "target coordinate");
    msp->add_option("--samples", samples, "u samples");
    msp->add_option("--ku-samples", ku_samples, "k_u samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (msp->parsed()) {
            const double r = 2.0 * 2.0 * kPi / (lambda_mm * 1e-3);
            const Axis u = Axis::linspace(-half_mm * 1e-3, half_mm * 1e-3, samples);
            const Axis ku = Axis::linspace(-r, r, ku_samples);
            const double f = msp_check_linear(r, standoff_mm * 1e-3, x_mm * 1e-3, u, ku);
            std::printf("msp fidelity: %.6f\n", f);
            return f >= 0.9 ? 0 : 1;
        }
        for (auto* sub : app.get_subcommands()) return run(sub->get_name(), common);
    } catch (const Error& e) {
        std::fprintf(stderr, "error[%s]: %s\n", e.qualified_code().c_str(), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
