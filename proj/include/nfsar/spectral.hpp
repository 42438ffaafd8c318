// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "nfsar/axis.hpp"

namespace nfsar {

/// Complex N-D grid (last dimension fastest) whose dimensions are each either
/// spatial or spectral.
///
/// axes[d] is the coordinate of dimension d in its current domain (m or rad/m).
/// spatial[d] is the paired spatial axis; for a spectral dimension it satisfies
/// spatial[d].step * axes[d].step * size = 2 pi.
struct SpectralGrid {
    std::vector<Axis> axes;
    std::vector<Axis> spatial;
    std::vector<bool> spectral;
    std::vector<cplx> values;

    /// All-spatial grid over the given axes.
    static SpectralGrid from_spatial(std::vector<Axis> axes, std::vector<cplx> values);

    std::vector<std::size_t> shape() const;
    std::size_t rank() const { return axes.size(); }
};

/// Unitary forward transform S(k) = N^-1/2 sum_n x(u_n) exp(-j k u_n) over the listed dims.
///
/// The spectral axis has step 2 pi / (N du) and is centered: k_m = (m - floor(N/2)) dk.
/// Throws Error(spectral_axis) if a dim is out of range, already spectral or has a
/// non-positive step.
SpectralGrid ft_nd(const SpectralGrid& grid, const std::vector<std::size_t>& dims);

/// Unitary inverse x(u_n) = N^-1/2 sum_m S(k_m) exp(+j k_m u_n), onto grid.spatial[d].
/// Any uniform spectral start is allowed.
SpectralGrid ift_nd(const SpectralGrid& grid, const std::vector<std::size_t>& dims);

/// Multiplies by exp(-j sum_d k_d offset_d) over the spectral dims; offsets on
/// spatial dims must be zero. offsets.size() == rank.
SpectralGrid spatial_shift_phase(const SpectralGrid& grid, const std::vector<double>& offsets);

/// Zero-pads spatial dim `dim` to `new_size`, centered: floor((new - old) / 2) zeros in front.
SpectralGrid zero_pad(const SpectralGrid& grid, std::size_t dim, std::size_t new_size);

/// Stolt mapping k -> k_z = sqrt(4k^2 - k_perp^2).
///
/// Input: spectral transverse dims followed by one wavenumber dim k (last). Each source
/// sample is multiplied by exp(-j k_z Z_phase) and then linearly interpolated onto
/// kz_axis per transverse column. Evanescent sources are dropped, targets outside the
/// propagating source span are zero. The output's last dim is spectral with paired
/// spatial axis starting at z_origin.
/// Throws Error(empty_support) when no column has two propagating samples.
SpectralGrid stolt_resample(const SpectralGrid& spec, const Axis& kz_axis, double Z_phase,
                            double z_origin = 0.0);

/// Polar samples P(alpha, k_r), k_r fastest. k_r must be strictly increasing and positive.
struct PolarSpectrum {
    Axis alpha;                 // rad
    std::vector<double> kr;     // rad/m
    std::vector<cplx> values;
    bool periodic = false;      // alpha axis closes the circle
};

/// Bilinear regrid onto (k_x, k_z) with alpha = atan2(k_z, k_x), k_r = hypot(k_x, k_z).
/// Output is a spectral (k_x, k_z) grid, k_z fastest. Points outside the polar support are zero.
SpectralGrid polar_regrid(const PolarSpectrum& polar, const Axis& kx, const Axis& kz);

/// Per-k_y polar samples P(alpha, k_y, k_r) with k_r fastest; kr[iy] holds the radial
/// samples of slice iy (may be empty for fully evanescent slices).
struct CylindricalPolarSpectrum {
    Axis alpha;
    Axis ky;
    std::vector<std::vector<double>> kr;
    std::vector<cplx> values;   // size alpha.size * ky.size * kr_len, kr_len = max slice length
    std::size_t kr_len = 0;
    bool periodic = false;
};

/// Independent 2-D regrid of every k_y slice. Output dims (k_x, k_y, k_z).
SpectralGrid polar_regrid(const CylindricalPolarSpectrum& polar, const Axis& kx, const Axis& kz);

/// Numerical check of the linear stationary-phase identity.
///
/// Compares exp(j r sqrt((x-u)^2 + w^2)) with sum_{|k_u|<r} exp(j k_u (u-x) + j k_w w) dk_u,
/// k_w = sqrt(r^2 - k_u^2), sampled at u = x + u_axis[i]. Returns the normalized inner
/// product magnitude in [0, 1].
/// Throws Error(undersampled) if either axis aliases the phase, or r <= 0.
double msp_check_linear(double r, double w, double x, const Axis& u_axis, const Axis& ku_axis);

}  // namespace nfsar
