// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nfsar/beat_sim.hpp"
#include "nfsar/reconstruct.hpp"
#include "nfsar/sync_sim.hpp"

namespace nfsar {

struct ReconSection {
    std::string algorithm;
    ReconGrid grid;
    std::vector<std::string> axis_names;  // "x", "y", "z" in grid order
};

struct CalibrationSection {
    double reflector_range = 0.3;  // m
};

struct SyncSection {
    DriveConfig drive;
    MotionProfile profile;
    TriggerPlan plan;
    double periodicity = 0.0;  // mm, echoed only
    bool bidirectional = false;
};

struct OutputSection {
    std::string dir = "out";
    std::string format = "raw";  // raw | csv | pgm
    bool oracle = false;
    std::string date;            // ISO date; empty = today (UTC)
};

/// Fully validated run description, SI units.
struct RunConfig {
    std::string name = "run";
    std::uint64_t seed = 0;
    std::string scan_notes;

    std::optional<ChirpConfig> chirp;
    std::optional<ChirpConfig> chirp2;   // second radar, dual-band captures
    std::optional<Aperture> aperture;
    double delta_x = 0.0;                // m, radar 2 offset along x
    Scene scene;
    CaptureErrors errors;
    std::optional<ReconSection> recon;
    std::optional<CalibrationSection> calibration;
    std::optional<SyncSection> sync;
    OutputSection output;

    /// True when only the sync section drives the run.
    bool sync_only() const { return sync.has_value() && !aperture.has_value(); }
};

/// Parses YAML text. Units in the file: GHz, MHz/us, us, Msps, mm, deg.
///
/// Error codes: config_syntax, config_unknown_key (with line number), config_unit,
/// config_geometry_mismatch, config_missing_key.
RunConfig parse_config(const std::string& text);

/// Reads and parses a file; io_failure if it cannot be read.
RunConfig load_config(const std::string& path);

/// Grid axis names required by an algorithm, in output order.
std::vector<std::string> algorithm_axes(const std::string& algorithm);

/// Geometry an algorithm needs; nullopt for backprojection (any geometry).
std::optional<Geometry> algorithm_geometry(const std::string& algorithm);

}  // namespace nfsar
