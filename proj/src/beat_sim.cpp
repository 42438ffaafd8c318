// SPDX-License-Identifier: Apache-2.0
#include "nfsar/beat_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nfsar/error.hpp"

namespace nfsar {

BeatCube simulate_beat(const Scene& scene, const Aperture& aperture, const ChirpConfig& chirp,
                       const CaptureErrors& errors, std::uint64_t seed,
                       const SimulationOptions& options)
{
    chirp.validate();
    if (!(errors.noise_sigma >= 0) || !std::isfinite(errors.range_bias) ||
        !std::isfinite(errors.phase_offset)) {
        throw Error(ErrorCode::invalid_scene, "capture errors must be finite with noise_sigma >= 0");
    }

    const Axis kgrid = wavenumber_grid(chirp);
    const std::size_t nk = chirp.num_samples;
    BeatCube cube = BeatCube::zeros(aperture, chirp);
    const cplx common = std::polar(1.0, errors.phase_offset);

    for (std::size_t e = 0; e < aperture.element_count(); ++e) {
        const Vec3 pos = aperture.element_position(e);
        cplx* row = &cube.samples[e * nk];
        for (const auto& s : scene.scatterers) {
            const double r = distance(pos, s.position);
            if (r == 0.0) {
                throw Error(ErrorCode::coincident_scatterer, "scatterer coincides with an aperture element");
            }
            const double amp = s.sigma * (options.path_loss ? 1.0 / (r * r) : 1.0);
            const double path = 2.0 * (r + errors.range_bias);
            for (std::size_t i = 0; i < nk; ++i) {
                row[i] += amp * std::polar(1.0, kgrid[i] * path);
            }
        }
        for (std::size_t i = 0; i < nk; ++i) row[i] *= common;

        if (errors.noise_sigma > 0) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(e >> 32)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> gauss(0.0, errors.noise_sigma / std::sqrt(2.0));
            for (std::size_t i = 0; i < nk; ++i) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                row[i] += cplx(re, im);
            }
        }
    }
    return cube;
}

std::pair<BeatCube, BeatCube> simulate_dual(const Scene& scene, const Aperture& aperture,
                                            const ChirpConfig& chirp1, const ChirpConfig& chirp2,
                                            const DualRadarLayout& layout,
                                            const CaptureErrors& errors1,
                                            const CaptureErrors& errors2, std::uint64_t seed)
{
    if (aperture.geometry() != Geometry::rectilinear) {
        throw Error(ErrorCode::geometry_required, "dual-radar capture needs a rectilinear aperture");
    }
    if (!std::isfinite(layout.delta_x)) {
        throw Error(ErrorCode::invalid_aperture, "delta_x must be finite");
    }
    BeatCube first = simulate_beat(scene, aperture, chirp1, errors1, seed);
    BeatCube second = simulate_beat(scene, aperture.translated_x(layout.delta_x), chirp2, errors2, seed);
    return {std::move(first), std::move(second)};
}

namespace {

// Linear interpolation of one element's samples at wavenumber k; caller guarantees k in range.
cplx interp_k(const BeatCube& cube, const Axis& kgrid, std::size_t element, double k)
{
    const double u = (k - kgrid.start) / kgrid.step;
    const double last = static_cast<double>(kgrid.size - 1);
    const double uc = std::clamp(u, 0.0, last);
    std::size_t i0 = static_cast<std::size_t>(std::floor(uc));
    if (i0 >= kgrid.size - 1) i0 = kgrid.size - 2;
    const double w = uc - static_cast<double>(i0);
    return (1.0 - w) * cube.at(element, i0) + w * cube.at(element, i0 + 1);
}

}  // namespace

BeatCube merge_dual_band(const BeatCube& low_band, const BeatCube& high_band)
{
    low_band.chirp.validate();
    high_band.chirp.validate();
    if (!low_band.aperture.same_grid(high_band.aperture, 1e-9)) {
        throw Error(ErrorCode::element_grid_mismatch,
                    "dual-band merge needs both cubes on the same element grid");
    }
    const Axis klo = wavenumber_grid(low_band.chirp);
    const Axis khi = wavenumber_grid(high_band.chirp);
    if (!(klo.step > 0) || !(khi.step > 0)) {
        throw Error(ErrorCode::non_uniform_axis, "dual-band merge needs strictly increasing wavenumber axes");
    }

    // Grid anchored on the high band's samples, extended down to the low band's start.
    const double kmin = std::min(klo.start, khi.start);
    const double kmax = std::max(klo.back(), khi.back());
    const double dk = khi.step;
    const std::size_t n_hi = high_band.chirp.num_samples;
    const auto hi_first = static_cast<std::size_t>(std::llround((khi.start - kmin) / dk));
    const std::size_t count = hi_first + static_cast<std::size_t>(std::llround((kmax - khi.start) / dk)) + 1;
    const double df = high_band.chirp.bandwidth() / static_cast<double>(n_hi - 1);

    ChirpConfig merged = high_band.chirp;
    merged.start_freq = high_band.chirp.start_freq - static_cast<double>(hi_first) * df;
    merged.num_samples = count;
    merged.duration = high_band.chirp.duration * static_cast<double>(count - 1) / static_cast<double>(n_hi - 1);
    if (!(merged.start_freq > 0)) throw Error(ErrorCode::invalid_chirp, "merged band starts below 0 Hz");
    const Axis kout = wavenumber_grid(merged);
    BeatCube out = BeatCube::zeros(high_band.aperture, merged);
    const double tol = 1e-9 * dk;
    for (std::size_t e = 0; e < out.aperture.element_count(); ++e) {
        for (std::size_t i = 0; i < count; ++i) {
            const double k = kout[i];
            if (i >= hi_first && i < hi_first + n_hi) {
                out.at(e, i) = high_band.at(e, i - hi_first);
            } else if (k >= klo.start - tol && k <= klo.back() + tol) {
                out.at(e, i) = interp_k(low_band, klo, e, k);
            }
        }
    }
    return out;
}

BeatCube subtract_background(const BeatCube& cube, const BeatCube& background)
{
    if (!(cube.chirp == background.chirp) || !cube.aperture.same_grid(background.aperture) ||
        cube.samples.size() != background.samples.size()) {
        throw Error(ErrorCode::axis_mismatch, "background capture does not match the cube");
    }
    BeatCube out = cube;
    for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] -= background.samples[i];
    return out;
}

}  // namespace nfsar
