// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfsar/analysis.hpp"
#include "nfsar/beat_sim.hpp"
#include "nfsar/config.hpp"
#include "nfsar/sync_sim.hpp"

namespace nfsar::detail {

struct RunReport {
    std::string name;
    std::string command;
    std::uint64_t seed = 0;
    std::optional<ChirpConfig> chirp;
    std::optional<ChirpConfig> chirp2;
    std::string geometry;
    std::size_t elements = 0;
    std::size_t targets = 0;
    std::string algorithm;
    std::vector<std::string> axis_names;
    std::vector<Peak> peaks;
    std::vector<std::pair<std::string, CalibrationResult>> calibrations;
    std::optional<double> oracle_ncc;
    std::vector<std::string> warnings;
    std::vector<std::string> artifacts;
};

std::string format_run_report(const RunReport& r);

struct SyncSweep {
    std::string label;
    TriggerRecord record;
    SyncReport report;
};

std::string format_sync_report(const std::string& name, std::uint64_t seed, const SyncSection& sync,
                               const std::vector<SyncSweep>& sweeps, std::optional<double> sweep_agreement);

}  // namespace nfsar::detail
