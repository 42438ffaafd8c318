// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "nfsar/radar_core.hpp"

namespace nfsar {

/// Impairments injected into a simulated capture.
struct CaptureErrors {
    double phase_offset = 0.0;  // rad, constant over k and elements
    double range_bias = 0.0;    // m, added to every range
    double noise_sigma = 0.0;   // std of circular complex Gaussian noise, E|n|^2 = sigma^2
};

struct SimulationOptions {
    /// Apply the 1/R^2 round-trip amplitude decay.
    bool path_loss = true;
};

/// Monostatic beat samples s(e,k) = sum_n sigma_n / R_n^2 exp(j 2k (R_n + bias)) exp(j phi0) + noise.
///
/// Noise for element e is drawn from a generator seeded with (seed, e), so the
/// result does not depend on evaluation order. Throws Error(coincident_scatterer)
/// if a scatterer sits on an element.
BeatCube simulate_beat(const Scene& scene, const Aperture& aperture, const ChirpConfig& chirp,
                       const CaptureErrors& errors, std::uint64_t seed,
                       const SimulationOptions& options = {});

/// Horizontal displacement of radar 2's phase center relative to radar 1.
struct DualRadarLayout {
    double delta_x = 0.0;  // m
};

/// Captures of two radars on one rectilinear scan; radar 2 sits delta_x further along x.
/// Both cubes use the same seed.
std::pair<BeatCube, BeatCube> simulate_dual(const Scene& scene, const Aperture& aperture,
                                            const ChirpConfig& chirp1, const ChirpConfig& chirp2,
                                            const DualRadarLayout& layout,
                                            const CaptureErrors& errors1,
                                            const CaptureErrors& errors2, std::uint64_t seed);

/// Puts a low-band and a high-band cube on one uniform wavenumber grid.
///
/// Spacing is the high-band cube's dk; the grid is anchored on the high-band samples
/// (copied as is) and extended down to min(k_low). Low-band bins are linearly
/// interpolated from the low-band samples; where the bands overlap the high band wins.
/// Bins in the gap between the bands are zero.
BeatCube merge_dual_band(const BeatCube& low_band, const BeatCube& high_band);

/// Element-wise cube - background.
BeatCube subtract_background(const BeatCube& cube, const BeatCube& background);

struct CalibrationResult {
    double phase_offset = 0.0;  // rad, wrapped to (-pi, pi]
    double range_bias = 0.0;    // m
    ChirpConfig chirp;          // waveform the estimate belongs to
};

/// Fits unwrapped phase(k) = 2k (true_range + bias) + phi0 by least squares on a
/// single-element capture of one dominant reflector.
CalibrationResult calibrate(const BeatCube& measured, double true_range);

/// Multiplies every sample by exp(-j phi0) exp(-j 2k bias). Not idempotent.
BeatCube apply_calibration(const BeatCube& cube, const CalibrationResult& cal);

}  // namespace nfsar
