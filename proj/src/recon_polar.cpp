// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/reconstruct.hpp"
#include "nfsar/spectral.hpp"
#include "recon_common.hpp"

namespace nfsar {

namespace {

// Smallest even n' >= n with no prime factor above 7.
std::size_t fft_size(std::size_t n)
{
    for (std::size_t m = std::max<std::size_t>(n + (n & 1), 2);; m += 2) {
        std::size_t r = m;
        for (std::size_t f : {2, 3, 5, 7}) {
            while (r % f == 0) r /= f;
        }
        if (r == 1) return m;
    }
}

// Centered spectral axis for one output dim and its paired spatial axis.
//
// The spatial spacing divides the requested pitch and the spatial axis is anchored
// on the first requested voxel, so cropping picks exact samples. The band covers
// 2 k_max with 2 % margin. The full-circle kernel also focuses energy on a ring of
// radius 2 R0 (the far-side stationary point); the period leaves that ring and two
// of its mainlobe widths clear of the requested grid.
struct RectAxis {
    Axis spectral;
    Axis spatial;
};

RectAxis rect_axis(const Axis& k, const Axis& requested, double extent, double radius)
{
    const double dx_max = kPi / (2.0 * k.back() * 1.02);
    const double per = std::ceil(requested.step / dx_max - 1e-9);
    const double dx = requested.step / std::max(per, 1.0);
    const double ring_width = 2.0 * kPi / (2.0 * (k.back() - k.start));
    const double period = 2.0 * radius + 2.0 * std::sqrt(2.0) * extent + 2.0 * ring_width;
    const auto need = static_cast<std::size_t>(std::ceil(period / dx));
    const std::size_t n = fft_size(std::max<std::size_t>({2 * k.size, need, 8}));
    const double dk = 2.0 * kPi / (static_cast<double>(n) * dx);
    const double half = static_cast<double>(n / 2);
    return {Axis{-half * dk, dk, n}, Axis{requested.start - half * dx, dx, n}};
}

double grid_extent(const ReconGrid& grid, std::initializer_list<std::size_t> dims)
{
    double extent = 0.0;
    for (std::size_t d : dims) extent = std::max({extent, std::abs(grid.axes[d].start), std::abs(grid.axes[d].back())});
    return extent;
}

// Unitary FT over theta of exp(j kr R0 cos(n dtheta)), theta origin at zero.
// Input/output layout matches `shape` with theta first; kr(i) gives the radial
// wavenumber of trailing index i, or a negative value when evanescent.
template <class Kr>
SpectralGrid kernel_spectrum(const Axis& theta, std::vector<Axis> trailing, double radius, Kr kr)
{
    std::vector<Axis> axes{Axis{0.0, theta.step, theta.size}};
    for (auto& a : trailing) axes.push_back(a);
    std::size_t inner = 1;
    for (std::size_t d = 1; d < axes.size(); ++d) inner *= axes[d].size;

    std::vector<cplx> vals(theta.size * inner);
    for (std::size_t i = 0; i < inner; ++i) {
        const double r = kr(i);
        if (!(r > 0)) continue;
        for (std::size_t n = 0; n < theta.size; ++n) {
            vals[n * inner + i] = std::polar(1.0, r * radius * std::cos(static_cast<double>(n) * theta.step));
        }
    }
    return ft_nd(SpectralGrid::from_spatial(std::move(axes), std::move(vals)), {0});
}

}  // namespace

ImageVolume circular_pfa_2d(const BeatCube& cube, const ReconGrid& grid)
{
    detail::check_inputs(cube, grid, Geometry::circular, 2);
    const double radius = cube.aperture.radius();

    SpectralGrid s = ft_nd(detail::cube_grid(cube, false), {0});
    const Axis theta = cube.aperture.axes()[0];
    const Axis k = s.axes[1];

    const SpectralGrid G = kernel_spectrum(theta, {k}, radius, [&](std::size_t j) { return 2.0 * k[j]; });
    for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] *= std::conj(G.values[i]);
    s = ift_nd(s, {0});

    PolarSpectrum polar;
    polar.alpha = theta;
    polar.periodic = cube.aperture.full_circle();
    for (std::size_t j = 0; j < k.size; ++j) polar.kr.push_back(2.0 * k[j]);
    polar.values = std::move(s.values);

    const double extent = grid_extent(grid, {0, 1});
    const RectAxis ax = rect_axis(k, grid.axes[0], extent, radius);
    const RectAxis az = rect_axis(k, grid.axes[1], extent, radius);
    SpectralGrid p = polar_regrid(polar, ax.spectral, az.spectral);
    p.spatial = {ax.spatial, az.spatial};
    return detail::crop(ift_nd(p, {0, 1}), grid, {0, 1});
}

ImageVolume cylindrical_pfa_3d(const BeatCube& cube, const ReconGrid& grid)
{
    detail::check_inputs(cube, grid, Geometry::cylindrical, 3);
    const double radius = cube.aperture.radius();

    SpectralGrid s = detail::cube_grid(cube, false);
    s = zero_pad(s, 1, detail::padded_length(s.axes[1], grid.axes[1]));
    s = ft_nd(s, {0, 1});
    const Axis theta = cube.aperture.axes()[0];
    const Axis ky = s.axes[1];
    const Axis k = s.axes[2];

    auto kr_of = [&](std::size_t iy, std::size_t j) {
        const double arg = 4.0 * k[j] * k[j] - ky[iy] * ky[iy];
        return arg > 0 ? std::sqrt(arg) : -1.0;
    };
    const SpectralGrid G = kernel_spectrum(theta, {ky, k}, radius,
                                           [&](std::size_t i) { return kr_of(i / k.size, i % k.size); });
    for (std::size_t i = 0; i < s.values.size(); ++i) s.values[i] *= std::conj(G.values[i]);
    s = ift_nd(s, {0});

    CylindricalPolarSpectrum polar;
    polar.alpha = theta;
    polar.ky = ky;
    polar.periodic = cube.aperture.full_circle();
    polar.kr_len = k.size;
    polar.kr.resize(ky.size);
    polar.values.assign(theta.size * ky.size * k.size, cplx{});
    for (std::size_t iy = 0; iy < ky.size; ++iy) {
        std::size_t j0 = 0;
        while (j0 < k.size && kr_of(iy, j0) < 0) ++j0;
        for (std::size_t j = j0; j < k.size; ++j) polar.kr[iy].push_back(kr_of(iy, j));
        for (std::size_t ia = 0; ia < theta.size; ++ia) {
            for (std::size_t j = j0; j < k.size; ++j) {
                polar.values[(ia * ky.size + iy) * k.size + (j - j0)] = s.values[(ia * ky.size + iy) * k.size + j];
            }
        }
    }

    const double extent = grid_extent(grid, {0, 2});
    const RectAxis ax = rect_axis(k, grid.axes[0], extent, radius);
    const RectAxis az = rect_axis(k, grid.axes[2], extent, radius);
    SpectralGrid p = polar_regrid(polar, ax.spectral, az.spectral);
    p.spatial = {ax.spatial, s.spatial[1], az.spatial};
    const SpectralGrid q = ift_nd(p, {0, 2});

    // y' is only sampled at the element pitch, so y is evaluated directly on the
    // requested voxels instead of being picked from the nearest native sample.
    const Axis& gy = grid.axes[1];
    std::vector<cplx> wy(gy.size * ky.size);
    const double norm = 1.0 / std::sqrt(static_cast<double>(ky.size));
    for (std::size_t j = 0; j < gy.size; ++j) {
        for (std::size_t m = 0; m < ky.size; ++m) wy[j * ky.size + m] = std::polar(norm, ky[m] * gy[j]);
    }

    ImageVolume out;
    out.axes = grid.axes;
    out.values.assign(element_count(out.shape()), cplx{});
    const std::size_t nz = q.axes[2].size;
    for (std::size_t i = 0; i < grid.axes[0].size; ++i) {
        const std::size_t sx = q.axes[0].nearest_periodic(grid.axes[0][i]);
        for (std::size_t l = 0; l < grid.axes[2].size; ++l) {
            const std::size_t sz = q.axes[2].nearest_periodic(grid.axes[2][l]);
            for (std::size_t j = 0; j < gy.size; ++j) {
                cplx acc{};
                for (std::size_t m = 0; m < ky.size; ++m) acc += q.values[(sx * ky.size + m) * nz + sz] * wy[j * ky.size + m];
                out.values[(i * gy.size + j) * grid.axes[2].size + l] = acc;
            }
        }
    }
    return out;
}

}  // namespace nfsar
