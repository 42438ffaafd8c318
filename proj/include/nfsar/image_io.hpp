// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nfsar/radar_core.hpp"

namespace nfsar {

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Writes <stem>.bin (complex128 little-endian, interleaved re/im, k fastest) and
/// <stem>.json (shape, aperture, chirp). Returns the written paths.
std::vector<std::string> write_cube(const BeatCube& cube, const std::string& stem);

/// Reads a cube back from its JSON sidecar path.
BeatCube read_cube(const std::string& json_path);

/// Magnitude image as stored on disk.
struct StoredImage {
    std::vector<Axis> axes;
    std::vector<std::string> axis_names;
    std::vector<float> magnitude;
    std::string config_sha256;
};

/// Writes |image| in one format:
///   raw  <stem>.f32 (float32 little-endian, last axis fastest) + <stem>.json sidecar
///   csv  <stem>.csv, 1-D or 2-D; one line per first-axis index, last axis across
///   pgm  <stem>.pgm, 8-bit P5 max-normalized; rows = first axis. A 3-D volume
///        emits the (axis 0, axis 1) slice through the peak.
/// Throws unsupported_format / io_failure. Returns the written paths.
std::vector<std::string> emit_image(const ImageVolume& image, const std::vector<std::string>& axis_names,
                                    const std::string& format, const std::string& stem,
                                    const std::string& config_sha256);

/// Reads a raw image back from its JSON sidecar path.
StoredImage read_image(const std::string& json_path);

}  // namespace nfsar
