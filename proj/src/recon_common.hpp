// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "nfsar/reconstruct.hpp"
#include "nfsar/spectral.hpp"

namespace nfsar::detail {

/// Checks geometry and grid rank; throws recon_geometry / recon_grid.
void check_inputs(const BeatCube& cube, const ReconGrid& grid, Geometry geometry, std::size_t rank);

/// Cube samples as an all-spatial grid over (aperture axes..., k).
SpectralGrid cube_grid(const BeatCube& cube, bool conjugate);

/// next_pow2(2N), raised so the spatial period covers the requested span plus the aperture.
std::size_t padded_length(const Axis& aperture, const Axis& requested);

/// Nearest-bin resampling of a spatial grid onto the requested axes (periodic wrap).
/// order[i] is the source dim that supplies output dim i.
ImageVolume crop(const SpectralGrid& spatial, const ReconGrid& grid, const std::vector<std::size_t>& order);

/// Conjugates every voxel; undoes the data conjugation of the range-migration methods.
ImageVolume conjugated(ImageVolume image);

/// Uniform k_z target axis for Stolt resampling.
struct KzPlan {
    Axis kz;
    double z_origin = 0.0;
};

/// kz axis starting at max(2 kmin cos(theta_max), sqrt(4 kmin^2 - kperp_max^2)), step
/// chosen so the z period covers both the data's unambiguous range and the requested z extent.
KzPlan plan_kz(const Axis& k, double kperp_max, double cos_theta_max, const Axis& z_request);

/// cos of the widest look angle between a planar aperture and the requested voxels.
/// transverse pairs: (aperture axis, grid axis) per transverse dim.
double cos_theta_max(const std::vector<std::pair<Axis, Axis>>& transverse, const Axis& z_request,
                     double standoff);

}  // namespace nfsar::detail
