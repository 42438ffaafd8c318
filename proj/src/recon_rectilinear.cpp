// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/reconstruct.hpp"
#include "nfsar/spectral.hpp"
#include "recon_common.hpp"

namespace nfsar {

namespace {

SpectralGrid transverse_spectrum(const BeatCube& cube, const ReconGrid& grid, bool conjugate)
{
    SpectralGrid g = detail::cube_grid(cube, conjugate);
    g = zero_pad(g, 0, detail::padded_length(g.axes[0], grid.axes[0]));
    g = zero_pad(g, 1, detail::padded_length(g.axes[1], grid.axes[1]));
    return ft_nd(g, {0, 1});
}

}  // namespace

ImageVolume rectilinear_fft_2d(const BeatCube& cube, const ReconGrid& grid)
{
    detail::check_inputs(cube, grid, Geometry::rectilinear, 2);
    const double depth = std::abs(grid.target_plane - cube.aperture.standoff());

    const SpectralGrid g = transverse_spectrum(cube, grid, false);
    const Axis kx = g.axes[0], ky = g.axes[1], k = g.axes[2];

    SpectralGrid summed;
    summed.axes = {kx, ky};
    summed.spatial = {g.spatial[0], g.spatial[1]};
    summed.spectral = {true, true};
    summed.values.assign(kx.size * ky.size, cplx{});
    for (std::size_t ix = 0; ix < kx.size; ++ix) {
        for (std::size_t iy = 0; iy < ky.size; ++iy) {
            const double kp2 = kx[ix] * kx[ix] + ky[iy] * ky[iy];
            const cplx* src = &g.values[(ix * ky.size + iy) * k.size];
            cplx acc{};
            for (std::size_t j = 0; j < k.size; ++j) {
                const double arg = 4.0 * k[j] * k[j] - kp2;
                if (arg <= 0) continue;
                const double kz = std::sqrt(arg);
                acc += src[j] * kz * std::polar(1.0, -kz * depth);
            }
            summed.values[ix * ky.size + iy] = acc;
        }
    }
    return detail::crop(ift_nd(summed, {0, 1}), grid, {0, 1});
}

ImageVolume rectilinear_rma_3d(const BeatCube& cube, const ReconGrid& grid)
{
    detail::check_inputs(cube, grid, Geometry::rectilinear, 3);

    SpectralGrid g = transverse_spectrum(cube, grid, true);
    const Axis kx = g.axes[0], ky = g.axes[1], k = g.axes[2];

    // k_z amplitude factor at the source points; Stolt drops evanescent samples.
    for (std::size_t ix = 0; ix < kx.size; ++ix) {
        for (std::size_t iy = 0; iy < ky.size; ++iy) {
            const double kp2 = kx[ix] * kx[ix] + ky[iy] * ky[iy];
            cplx* src = &g.values[(ix * ky.size + iy) * k.size];
            for (std::size_t j = 0; j < k.size; ++j) {
                const double arg = 4.0 * k[j] * k[j] - kp2;
                src[j] *= arg > 0 ? std::sqrt(arg) : 0.0;
            }
        }
    }

    const auto& ap = cube.aperture.axes();
    const double kxm = std::max(std::abs(kx.start), std::abs(kx.back()));
    const double kym = std::max(std::abs(ky.start), std::abs(ky.back()));
    const double cmax = detail::cos_theta_max({{ap[0], grid.axes[0]}, {ap[1], grid.axes[1]}}, grid.axes[2],
                                              cube.aperture.standoff());
    const auto plan = detail::plan_kz(k, std::hypot(kxm, kym), cmax, grid.axes[2]);

    SpectralGrid p = stolt_resample(g, plan.kz, cube.aperture.standoff(), plan.z_origin);
    return detail::conjugated(detail::crop(ift_nd(p, {0, 1, 2}), grid, {0, 1, 2}));
}

}  // namespace nfsar
