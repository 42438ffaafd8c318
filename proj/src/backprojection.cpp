// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/reconstruct.hpp"

namespace nfsar {

Vec3 voxel_position(Geometry geometry, const ReconGrid& grid, const std::vector<double>& c)
{
    const std::size_t n = c.size();
    switch (geometry) {
    case Geometry::linear:
        if (n == 1) return {0.0, c[0], grid.target_plane};
        if (n == 2) return {0.0, c[0], c[1]};
        break;
    case Geometry::rectilinear:
        if (n == 2) return {c[0], c[1], grid.target_plane};
        if (n == 3) return {c[0], c[1], c[2]};
        break;
    case Geometry::circular:
        if (n == 2) return {c[0], 0.0, c[1]};
        break;
    case Geometry::cylindrical:
        if (n == 3) return {c[0], c[1], c[2]};
        break;
    }
    throw Error(ErrorCode::recon_grid, std::string("grid rank does not fit a ") + to_string(geometry) + " aperture");
}

ImageVolume backprojection_oracle(const BeatCube& cube, const ReconGrid& grid)
{
    cube.validate();
    for (const auto& a : grid.axes) {
        if (a.size == 0 || !(a.step > 0)) throw Error(ErrorCode::recon_grid, "grid axes must be uniform");
    }
    ImageVolume out;
    out.axes = grid.axes;
    out.values.assign(element_count(out.shape()), cplx{});

    const Axis k = wavenumber_grid(cube.chirp);
    const std::vector<Vec3> elems = cube.aperture.element_positions();
    const std::size_t nk = k.size;

    for (std::size_t v = 0; v < out.values.size(); ++v) {
        const Vec3 pos = voxel_position(cube.aperture.geometry(), grid, out.coordinates(v));
        cplx acc{};
        for (std::size_t e = 0; e < elems.size(); ++e) {
            const double r = distance(elems[e], pos);
            const cplx* row = &cube.samples[e * nk];
            // exp(-j 2 k_i R) by recurrence, re-anchored every 32 samples.
            const cplx step = std::polar(1.0, -2.0 * k.step * r);
            cplx ph;
            for (std::size_t i = 0; i < nk; ++i) {
                if (i % 32 == 0) ph = std::polar(1.0, -2.0 * k[i] * r);
                acc += row[i] * ph;
                ph *= step;
            }
        }
        out.values[v] = acc;
    }
    return out;
}

}  // namespace nfsar
