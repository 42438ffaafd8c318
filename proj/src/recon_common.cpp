// SPDX-License-Identifier: Apache-2.0
#include "recon_common.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nfsar/error.hpp"

namespace nfsar::detail {

void check_inputs(const BeatCube& cube, const ReconGrid& grid, Geometry geometry, std::size_t rank)
{
    cube.validate();
    if (cube.aperture.geometry() != geometry) {
        throw Error(ErrorCode::recon_geometry, std::string("algorithm needs a ") + to_string(geometry) +
                                                   " aperture, got " + to_string(cube.aperture.geometry()));
    }
    if (grid.axes.size() != rank) {
        throw Error(ErrorCode::recon_grid, "reconstruction grid needs " + std::to_string(rank) + " axes");
    }
    for (const auto& a : grid.axes) {
        if (a.size == 0 || !(a.step > 0) || !std::isfinite(a.start)) {
            throw Error(ErrorCode::recon_grid, "grid axes must be non-empty, uniform and increasing");
        }
    }
    for (const auto& a : cube.aperture.axes()) {
        if (a.size > 1 && !(a.step > 0)) {
            throw Error(ErrorCode::non_uniform_axis, "aperture axes must be uniform and increasing");
        }
    }
}

SpectralGrid cube_grid(const BeatCube& cube, bool conjugate)
{
    std::vector<Axis> axes = cube.aperture.axes();
    axes.push_back(wavenumber_grid(cube.chirp));
    std::vector<cplx> values = cube.samples;
    if (conjugate) {
        for (auto& v : values) v = std::conj(v);
    }
    return SpectralGrid::from_spatial(std::move(axes), std::move(values));
}

std::size_t padded_length(const Axis& aperture, const Axis& requested)
{
    const double span = (requested.back() - requested.start) + (aperture.back() - aperture.start);
    const auto need = static_cast<std::size_t>(std::ceil(span / aperture.step)) + 1;
    return next_pow2(std::max(2 * aperture.size, need));
}

ImageVolume crop(const SpectralGrid& spatial, const ReconGrid& grid, const std::vector<std::size_t>& order)
{
    const std::size_t rank = grid.axes.size();
    ImageVolume out;
    out.axes = grid.axes;
    out.values.assign(element_count(out.shape()), cplx{});

    std::vector<std::vector<std::size_t>> pick(rank);
    std::vector<std::size_t> src_stride(spatial.rank(), 1);
    for (std::size_t d = spatial.rank(); d-- > 1;) src_stride[d - 1] = src_stride[d] * spatial.axes[d].size;
    for (std::size_t i = 0; i < rank; ++i) {
        const Axis& src = spatial.axes[order[i]];
        for (std::size_t j = 0; j < grid.axes[i].size; ++j) {
            pick[i].push_back(src.nearest_periodic(grid.axes[i][j]) * src_stride[order[i]]);
        }
    }

    std::vector<std::size_t> idx(rank, 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
        std::size_t src = 0;
        for (std::size_t i = 0; i < rank; ++i) src += pick[i][idx[i]];
        out.values[flat] = spatial.values[src];
        for (std::size_t i = rank; i-- > 0;) {
            if (++idx[i] < grid.axes[i].size) break;
            idx[i] = 0;
        }
    }
    return out;
}

ImageVolume conjugated(ImageVolume image)
{
    for (auto& v : image.values) v = std::conj(v);
    return image;
}

KzPlan plan_kz(const Axis& k, double kperp_max, double cos_theta_max, const Axis& z_request)
{
    const double kmin = k.start;
    const double kmax = k.back();
    const double kz_lo = std::max(2.0 * kmin * cos_theta_max,
                                  std::sqrt(std::max(0.0, 4.0 * kmin * kmin - kperp_max * kperp_max)));
    const double band = 2.0 * kmax - kz_lo;
    if (!(band > 0)) throw Error(ErrorCode::empty_support, "k_z support is empty");

    const double dz_res = 2.0 * kPi / band / 4.0;
    const double dz = z_request.size > 1 ? std::min(dz_res, z_request.step / 2.0) : dz_res;
    // Range period of the k sampling, and the requested extent.
    const double period = std::max(kPi / k.step, (z_request.back() - z_request.start) + z_request.step);
    const auto need = static_cast<std::size_t>(std::ceil(period / dz));
    const std::size_t nz = next_pow2(std::max<std::size_t>(2 * k.size, need));

    KzPlan plan;
    plan.kz = Axis{kz_lo, 2.0 * kPi / (static_cast<double>(nz) * dz), nz};
    plan.z_origin = z_request.start;
    return plan;
}

double cos_theta_max(const std::vector<std::pair<Axis, Axis>>& transverse, const Axis& z_request,
                     double standoff)
{
    double lateral2 = 0.0;
    for (const auto& [ap, g] : transverse) {
        const double a = std::max(std::abs(g.back() - ap.start), std::abs(ap.back() - g.start));
        lateral2 += a * a;
    }
    double range = std::min(std::abs(z_request.start - standoff), std::abs(z_request.back() - standoff));
    if ((z_request.start - standoff) * (z_request.back() - standoff) <= 0) range = 0.0;
    const double hyp = std::sqrt(lateral2 + range * range);
    return hyp > 0 ? range / hyp : 1.0;
}

}  // namespace nfsar::detail
