// SPDX-License-Identifier: Apache-2.0
// Reconstruction set-ups shared by the unit and acceptance tests.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nfsar/beat_sim.hpp"
#include "nfsar/reconstruct.hpp"

namespace scenario {

using namespace nfsar;

inline ChirpConfig chirp(std::size_t nk, double bandwidth = 4e9)
{
    ChirpConfig c;
    c.start_freq = 77e9;
    c.duration = 40e-6;
    c.slope = bandwidth / c.duration;
    c.sample_rate = double(nk - 1) / c.duration;
    c.num_samples = nk;
    return c;
}

inline const double lambda = kSpeedOfLight / 79e9;

using ReconFn = ImageVolume (*)(const BeatCube&, const ReconGrid&);

struct Case {
    std::string name;
    Aperture aperture;
    ChirpConfig chirp;
    ReconGrid grid;
    ReconFn recon;
    std::array<double, 3> lo;  // scatterer region, m
    std::array<double, 3> hi;

    Vec3 random_point(std::mt19937_64& rng) const
    {
        std::array<double, 3> p{};
        for (int i = 0; i < 3; ++i) p[i] = std::uniform_real_distribution<double>(lo[i], hi[i])(rng);
        return {p[0], p[1], p[2]};
    }
    /// Truth expressed in the grid's coordinates.
    std::vector<double> grid_coords(const Vec3& v) const
    {
        const std::size_t r = grid.axes.size();
        switch (aperture.geometry()) {
        case Geometry::linear: return r == 1 ? std::vector<double>{v.y} : std::vector<double>{v.y, v.z};
        case Geometry::rectilinear:
            return r == 2 ? std::vector<double>{v.x, v.y} : std::vector<double>{v.x, v.y, v.z};
        case Geometry::circular: return {v.x, v.z};
        case Geometry::cylindrical: return {v.x, v.y, v.z};
        }
        return {};
    }
    BeatCube simulate(const std::vector<Vec3>& points, std::uint64_t seed = 1) const
    {
        Scene s;
        for (const auto& p : points) s.scatterers.push_back({p, 1.0});
        return simulate_beat(s, aperture, chirp, {}, seed);
    }
};

/// The six reconstructions with their grids and scatterer regions.
/// Voxel pitch: 9 mm in range (< dR/2 = 18.75 mm); transversely 4 mm for the planar
/// apertures and lambda/(4 pi) ~ 0.3 mm for the full circles (lambda R0 / (2 * 2 pi R0)).
inline std::vector<Case> all_cases()
{
    const double q = lambda / 4;
    std::vector<Case> c;
    const Aperture lin = Aperture::linear(Axis::centered(0, q, 64), 0.0);
    c.push_back({"linear_fft_1d", lin, chirp(64), ReconGrid{{Axis::centered(0, 0.004, 41)}, 0.31}, &linear_fft_1d,
                 {0, -0.03, 0.31}, {0, 0.03, 0.31}});
    c.push_back({"linear_rma_2d", lin, chirp(64),
                 ReconGrid{{Axis::centered(0, 0.004, 41), Axis::centered(0.3, 0.009, 41)}, 0.0}, &linear_rma_2d,
                 {0, -0.03, 0.22}, {0, 0.03, 0.38}});
    const Aperture rect = Aperture::rectilinear(Axis::centered(0, lambda / 2, 32), Axis::centered(0, lambda / 2, 32), 0.0);
    c.push_back({"rectilinear_fft_2d", rect, chirp(64),
                 ReconGrid{{Axis::centered(0, 0.004, 21), Axis::centered(0, 0.004, 21)}, 0.25}, &rectilinear_fft_2d,
                 {-0.02, -0.02, 0.25}, {0.02, 0.02, 0.25}});
    c.push_back({"rectilinear_rma_3d", rect, chirp(64),
                 ReconGrid{{Axis::centered(0, 0.004, 21), Axis::centered(0, 0.004, 21), Axis::centered(0.25, 0.009, 21)},
                           0.0},
                 &rectilinear_rma_3d, {-0.02, -0.02, 0.2}, {0.02, 0.02, 0.3}});
    c.push_back({"circular_pfa_2d", Aperture::circular(Axis{0, 2 * kPi / 1024, 1024}, 0.2), chirp(64),
                 ReconGrid{{Axis::centered(0, 0.0003, 61), Axis::centered(0, 0.0003, 61)}, 0.0}, &circular_pfa_2d,
                 {-0.008, 0, -0.008}, {0.008, 0, 0.008}});
    c.push_back({"cylindrical_pfa_3d",
                 Aperture::cylindrical(Axis{0, 2 * kPi / 512, 512}, Axis::centered(0, lambda / 2, 16), 0.1), chirp(64),
                 ReconGrid{{Axis::centered(0, 0.0003, 31), Axis::centered(0, 0.002, 9), Axis::centered(0, 0.0003, 31)},
                           0.0},
                 &cylindrical_pfa_3d, {-0.0035, -0.005, -0.0035}, {0.0035, 0.005, 0.0035}});
    return c;
}

/// Every coordinate of the global peak within one voxel pitch of the truth.
inline bool within_one_voxel(const ImageVolume& img, const std::vector<double>& truth)
{
    const auto p = img.coordinates(img.argmax());
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (std::abs(p[d] - truth[d]) > img.axes[d].step * (1 + 1e-9)) return false;
    }
    return true;
}

}  // namespace scenario
