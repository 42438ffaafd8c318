// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "nfsar/radar_core.hpp"

namespace nfsar {

/// Requested output voxel centers. target_plane is z0 for the planar FFT methods.
struct ReconGrid {
    std::vector<Axis> axes;
    double target_plane = 0.0;  // m
};

/// p(y) on the plane z = z0 from a linear aperture. Grid axes: {y}.
ImageVolume linear_fft_1d(const BeatCube& cube, const ReconGrid& grid);

/// p(y, z) by range migration with Stolt interpolation. Grid axes: {y, z}.
ImageVolume linear_rma_2d(const BeatCube& cube, const ReconGrid& grid);

/// p(x, y) on the plane z = z0 from a rectilinear aperture. Grid axes: {x, y}.
ImageVolume rectilinear_fft_2d(const BeatCube& cube, const ReconGrid& grid);

/// p(x, y, z) by range migration with Stolt interpolation. Grid axes: {x, y, z}.
ImageVolume rectilinear_rma_3d(const BeatCube& cube, const ReconGrid& grid);

/// p(x, z) by polar formatting from a circular aperture. Grid axes: {x, z}.
ImageVolume circular_pfa_2d(const BeatCube& cube, const ReconGrid& grid);

/// p(x, y, z) by polar formatting from a cylindrical aperture. Grid axes: {x, y, z}.
ImageVolume cylindrical_pfa_3d(const BeatCube& cube, const ReconGrid& grid);

/// Matched-filter image p(v) = sum_e sum_k s(e, k) exp(-j 2k R(e, v)).
///
/// Voxel coordinates by geometry and grid rank:
///   linear       {y} -> (0, y, z0)      {y, z} -> (0, y, z)
///   rectilinear  {x, y} -> (x, y, z0)   {x, y, z} -> (x, y, z)
///   circular     {x, z} -> (x, 0, z)
///   cylindrical  {x, y, z} -> (x, y, z)
ImageVolume backprojection_oracle(const BeatCube& cube, const ReconGrid& grid);

/// Voxel position used by backprojection_oracle for a grid coordinate tuple.
Vec3 voxel_position(Geometry geometry, const ReconGrid& grid, const std::vector<double>& coords);

}  // namespace nfsar
