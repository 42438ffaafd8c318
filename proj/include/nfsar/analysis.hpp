// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "nfsar/radar_core.hpp"

namespace nfsar {

struct Peak {
    std::size_t index = 0;
    std::vector<double> position;  // voxel center, m
    double magnitude = 0.0;
};

/// Local maxima of |image| (over the full 3^d neighborhood, edges included) with
/// magnitude >= rel_threshold * max. Sorted by decreasing magnitude.
std::vector<Peak> find_peaks(const ImageVolume& image, double rel_threshold = 0.5);

/// Zero-mean normalized cross-correlation of |a| and |b|; both on the same grid.
double normalized_cross_correlation(const ImageVolume& a, const ImageVolume& b);

}  // namespace nfsar
