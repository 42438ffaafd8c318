// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace nfsar {

/// Error codes, grouped by module (hundreds digit).
enum class ErrorCode : int {
    // radar-core
    invalid_chirp = 101,
    invalid_aperture = 102,
    invalid_scene = 103,
    invalid_cube = 104,
    invalid_image = 105,
    // beat-sim
    coincident_scatterer = 201,
    geometry_required = 202,
    axis_mismatch = 203,
    non_uniform_axis = 204,
    negative_range = 205,
    element_grid_mismatch = 206,
    // spectral-kernel
    spectral_axis = 301,
    empty_support = 302,
    undersampled = 303,
    // reconstruct
    recon_geometry = 401,
    recon_grid = 402,
    // sync-sim
    invalid_drive = 501,
    invalid_profile = 502,
    invalid_plan = 503,
    // cli
    config_syntax = 601,
    config_unknown_key = 602,
    config_unit = 603,
    config_geometry_mismatch = 604,
    config_missing_key = 605,
    io_failure = 606,
    unsupported_format = 607,
    invariant_violation = 608,
};

/// Module name ("radar-core", "beat-sim", ...) owning a code.
const char* module_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    /// "<module>:<number>", e.g. "cli:602".
    std::string qualified_code() const;

private:
    ErrorCode code_;
};

}  // namespace nfsar
