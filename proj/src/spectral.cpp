// SPDX-License-Identifier: Apache-2.0
#include "nfsar/spectral.hpp"

#include <cmath>
#include <string>

#include "fft.hpp"
#include "nfsar/error.hpp"
#include "spectral_detail.hpp"

namespace nfsar {

SpectralGrid SpectralGrid::from_spatial(std::vector<Axis> axes, std::vector<cplx> values)
{
    SpectralGrid g;
    g.spatial = axes;
    g.axes = std::move(axes);
    g.spectral.assign(g.axes.size(), false);
    g.values = std::move(values);
    if (element_count(g.shape()) != g.values.size()) {
        throw Error(ErrorCode::spectral_axis, "grid values do not match axis sizes");
    }
    return g;
}

std::vector<std::size_t> SpectralGrid::shape() const
{
    std::vector<std::size_t> s;
    for (const auto& a : axes) s.push_back(a.size);
    return s;
}

namespace detail {

void for_each_line(const std::vector<std::size_t>& shape, std::size_t dim,
                   const std::function<void(std::size_t base, std::size_t stride)>& fn)
{
    std::size_t stride = 1;
    for (std::size_t d = dim + 1; d < shape.size(); ++d) stride *= shape[d];
    std::size_t outer = 1;
    for (std::size_t d = 0; d < dim; ++d) outer *= shape[d];
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < stride; ++i) fn(o * shape[dim] * stride + i, stride);
    }
}

}  // namespace detail

namespace {

void check_dim(const SpectralGrid& g, std::size_t d)
{
    if (d >= g.rank()) throw Error(ErrorCode::spectral_axis, "transform dim out of range");
    if (!(g.axes[d].step > 0) || g.axes[d].size == 0) {
        throw Error(ErrorCode::spectral_axis, "axis " + std::to_string(d) + " is not uniform and increasing");
    }
}

// One 1-D transform along dim d. Forward maps spatial -> spectral, inverse the reverse.
void transform_dim(SpectralGrid& g, std::size_t d, bool forward)
{
    const std::size_t n = g.axes[d].size;
    const Axis u = g.spatial[d];
    const Axis k = forward ? Axis{-static_cast<double>(n / 2) * (2.0 * kPi / (static_cast<double>(n) * u.step)),
                                  2.0 * kPi / (static_cast<double>(n) * u.step), n}
                           : g.axes[d];
    if (!forward) {
        const double prod = k.step * u.step * static_cast<double>(n);
        if (std::abs(prod - 2.0 * kPi) > 1e-9 * 2.0 * kPi) {
            throw Error(ErrorCode::spectral_axis, "spectral and spatial steps are not reciprocal");
        }
    }

    const double sign = forward ? -1.0 : 1.0;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cplx> pre(n), post(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = static_cast<double>(i);
        if (forward) {
            pre[i] = std::polar(1.0, sign * k.start * fi * u.step);
            post[i] = std::polar(norm, sign * k[i] * u.start);
        } else {
            pre[i] = std::polar(1.0, sign * k[i] * u.start);
            post[i] = std::polar(norm, sign * k.start * fi * u.step);
        }
    }

    std::vector<cplx> line(n);
    detail::for_each_line(g.shape(), d, [&](std::size_t base, std::size_t stride) {
        for (std::size_t i = 0; i < n; ++i) line[i] = g.values[base + i * stride] * pre[i];
        detail::fft_inplace(line.data(), n, forward ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) g.values[base + i * stride] = line[i] * post[i];
    });

    g.axes[d] = forward ? k : u;
    g.spectral[d] = forward;
}

}  // namespace

SpectralGrid ft_nd(const SpectralGrid& grid, const std::vector<std::size_t>& dims)
{
    SpectralGrid g = grid;
    for (std::size_t d : dims) {
        check_dim(g, d);
        if (g.spectral[d]) throw Error(ErrorCode::spectral_axis, "dim is already spectral");
        transform_dim(g, d, true);
    }
    return g;
}

SpectralGrid ift_nd(const SpectralGrid& grid, const std::vector<std::size_t>& dims)
{
    SpectralGrid g = grid;
    for (std::size_t d : dims) {
        check_dim(g, d);
        if (!g.spectral[d]) throw Error(ErrorCode::spectral_axis, "dim is not spectral");
        transform_dim(g, d, false);
    }
    return g;
}

SpectralGrid spatial_shift_phase(const SpectralGrid& grid, const std::vector<double>& offsets)
{
    if (offsets.size() != grid.rank()) {
        throw Error(ErrorCode::spectral_axis, "one offset per dimension is required");
    }
    SpectralGrid g = grid;
    for (std::size_t d = 0; d < g.rank(); ++d) {
        if (offsets[d] == 0.0) continue;
        if (!g.spectral[d]) throw Error(ErrorCode::spectral_axis, "cannot phase-shift a spatial dim");
        const std::size_t n = g.axes[d].size;
        std::vector<cplx> ph(n);
        for (std::size_t i = 0; i < n; ++i) ph[i] = std::polar(1.0, -g.axes[d][i] * offsets[d]);
        detail::for_each_line(g.shape(), d, [&](std::size_t base, std::size_t stride) {
            for (std::size_t i = 0; i < n; ++i) g.values[base + i * stride] *= ph[i];
        });
    }
    return g;
}

SpectralGrid zero_pad(const SpectralGrid& grid, std::size_t dim, std::size_t new_size)
{
    check_dim(grid, dim);
    if (grid.spectral[dim]) throw Error(ErrorCode::spectral_axis, "zero_pad needs a spatial dim");
    const std::size_t n = grid.axes[dim].size;
    if (new_size < n) throw Error(ErrorCode::spectral_axis, "zero_pad cannot shrink a dim");
    const std::size_t front = (new_size - n) / 2;

    SpectralGrid g;
    g.axes = grid.axes;
    g.spectral = grid.spectral;
    g.axes[dim] = Axis{grid.axes[dim].start - static_cast<double>(front) * grid.axes[dim].step,
                       grid.axes[dim].step, new_size};
    g.spatial = grid.spatial;
    g.spatial[dim] = g.axes[dim];
    g.values.assign(element_count(g.shape()), cplx{});

    const auto old_shape = grid.shape();
    std::size_t stride = 1;
    for (std::size_t d = dim + 1; d < old_shape.size(); ++d) stride *= old_shape[d];
    std::size_t outer = 1;
    for (std::size_t d = 0; d < dim; ++d) outer *= old_shape[d];
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < n; ++i) {
            const cplx* src = &grid.values[(o * n + i) * stride];
            cplx* dst = &g.values[(o * new_size + front + i) * stride];
            std::copy(src, src + stride, dst);
        }
    }
    return g;
}

}  // namespace nfsar
