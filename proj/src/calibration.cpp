// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "nfsar/beat_sim.hpp"
#include "nfsar/error.hpp"

namespace nfsar {

namespace {

double wrap_phase(double p)
{
    double w = std::remainder(p, 2.0 * kPi);  // [-pi, pi]
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

}  // namespace

CalibrationResult calibrate(const BeatCube& measured, double true_range)
{
    measured.validate();
    if (measured.aperture.element_count() != 1) {
        throw Error(ErrorCode::invalid_cube, "calibration needs a single-element capture");
    }
    if (!(true_range > 0) || !std::isfinite(true_range)) {
        throw Error(ErrorCode::negative_range, "true_range must be positive");
    }

    const Axis kgrid = wavenumber_grid(measured.chirp);
    const std::size_t nk = measured.num_k();

    // Unwrap along k.
    std::vector<double> phase(nk);
    phase[0] = std::arg(measured.at(0, 0));
    for (std::size_t i = 1; i < nk; ++i) {
        const double d = std::arg(measured.at(0, i)) - std::arg(measured.at(0, i - 1));
        phase[i] = phase[i - 1] + wrap_phase(d);
    }

    // Least-squares line in centered k to keep the normal equations well conditioned.
    const double kc = kgrid[0] + 0.5 * (kgrid.back() - kgrid[0]);
    double sxx = 0.0, sxy = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < nk; ++i) {
        const double x = kgrid[i] - kc;
        sxx += x * x;
        sxy += x * phase[i];
        sy += phase[i];
    }
    const double slope = sxy / sxx;
    const double mean = sy / static_cast<double>(nk);
    if (!(slope > 0)) {
        throw Error(ErrorCode::negative_range, "unwrapped phase slope implies a non-positive range");
    }

    const double path = slope / 2.0;  // true_range + bias
    CalibrationResult out;
    out.range_bias = path - true_range;
    out.phase_offset = wrap_phase(mean - slope * kc);
    out.chirp = measured.chirp;
    return out;
}

BeatCube apply_calibration(const BeatCube& cube, const CalibrationResult& cal)
{
    if (!(cube.chirp == cal.chirp)) {
        throw Error(ErrorCode::axis_mismatch, "calibration was estimated for a different chirp");
    }
    const Axis kgrid = wavenumber_grid(cube.chirp);
    std::vector<cplx> factor(cube.num_k());
    for (std::size_t i = 0; i < factor.size(); ++i) {
        factor[i] = std::polar(1.0, -cal.phase_offset - 2.0 * kgrid[i] * cal.range_bias);
    }
    BeatCube out = cube;
    for (std::size_t e = 0; e < out.aperture.element_count(); ++e) {
        for (std::size_t i = 0; i < factor.size(); ++i) out.at(e, i) *= factor[i];
    }
    return out;
}

}  // namespace nfsar
