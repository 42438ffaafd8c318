// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfsar/config.hpp"

namespace nfsar {

/// Command-line overrides and switches.
struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
    bool oracle = false;
    bool dry_run = false;
    std::optional<std::string> input_cube;  // cube JSON sidecar for `reconstruct`
    std::string config_sha256;              // hash of the config file bytes
};

struct RunResult {
    std::string dir;                  // <out>/<date>/<name>, empty for dry runs
    std::vector<std::string> files;   // artifacts written
    std::vector<std::string> warnings;
    bool invariants_ok = true;        // false when a report flags a violated invariant
};

/// Applies overrides: seed, output dir, format, oracle.
void apply_options(RunConfig& cfg, const RunOptions& opts);

/// Beat cube + scan notes + short report.
RunResult run_simulate(const RunConfig& cfg, const RunOptions& opts);

/// Image from a simulated cube, or from opts.input_cube when given.
RunResult run_reconstruct(const RunConfig& cfg, const RunOptions& opts);

/// simulate -> calibrate (if configured) -> reconstruct -> report. Sync-only configs
/// produce the sync report alone.
RunResult run_pipeline(const RunConfig& cfg, const RunOptions& opts);

/// Synchronizer simulation and uniform-grid report.
RunResult run_sync(const RunConfig& cfg, const RunOptions& opts);

/// Reflector capture, calibration fit and calibration.json.
RunResult run_calibrate(const RunConfig& cfg, const RunOptions& opts);

/// Today's date as YYYY-MM-DD (UTC).
std::string iso_date_today();

}  // namespace nfsar
