// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/reconstruct.hpp"
#include "nfsar/spectral.hpp"
#include "recon_common.hpp"

namespace nfsar {

ImageVolume linear_fft_1d(const BeatCube& cube, const ReconGrid& grid)
{
    detail::check_inputs(cube, grid, Geometry::linear, 1);
    const double depth = std::abs(grid.target_plane - cube.aperture.standoff());

    SpectralGrid g = detail::cube_grid(cube, false);
    g = zero_pad(g, 0, detail::padded_length(g.axes[0], grid.axes[0]));
    g = ft_nd(g, {0});

    const Axis ky = g.axes[0];
    const Axis k = g.axes[1];
    SpectralGrid summed;
    summed.axes = {ky};
    summed.spatial = {g.spatial[0]};
    summed.spectral = {true};
    summed.values.assign(ky.size, cplx{});
    for (std::size_t i = 0; i < ky.size; ++i) {
        for (std::size_t j = 0; j < k.size; ++j) {
            const double arg = 4.0 * k[j] * k[j] - ky[i] * ky[i];
            if (arg <= 0) continue;
            summed.values[i] += g.values[i * k.size + j] * std::polar(1.0, -std::sqrt(arg) * depth);
        }
    }
    return detail::crop(ift_nd(summed, {0}), grid, {0});
}

ImageVolume linear_rma_2d(const BeatCube& cube, const ReconGrid& grid)
{
    detail::check_inputs(cube, grid, Geometry::linear, 2);

    SpectralGrid g = detail::cube_grid(cube, true);
    const Axis ap = g.axes[0];
    g = zero_pad(g, 0, detail::padded_length(ap, grid.axes[0]));
    g = ft_nd(g, {0});

    const double kperp = std::max(std::abs(g.axes[0].start), std::abs(g.axes[0].back()));
    const double cmax = detail::cos_theta_max({{ap, grid.axes[0]}}, grid.axes[1], cube.aperture.standoff());
    const auto plan = detail::plan_kz(g.axes[1], kperp, cmax, grid.axes[1]);

    SpectralGrid p = stolt_resample(g, plan.kz, cube.aperture.standoff(), plan.z_origin);
    return detail::conjugated(detail::crop(ift_nd(p, {0, 1}), grid, {0, 1}));
}

}  // namespace nfsar
