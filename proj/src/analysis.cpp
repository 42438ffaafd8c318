// SPDX-License-Identifier: Apache-2.0
#include "nfsar/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "nfsar/error.hpp"

namespace nfsar {

std::vector<Peak> find_peaks(const ImageVolume& image, double rel_threshold)
{
    const auto mag = image.magnitude();
    const auto shape = image.shape();
    const std::size_t rank = shape.size();
    std::vector<Peak> out;
    if (mag.empty()) return out;
    const double top = *std::max_element(mag.begin(), mag.end());
    if (!(top > 0)) return out;

    std::vector<std::size_t> stride(rank, 1);
    for (std::size_t d = rank; d-- > 1;) stride[d - 1] = stride[d] * shape[d];

    std::vector<std::size_t> idx(rank);
    for (std::size_t flat = 0; flat < mag.size(); ++flat) {
        if (mag[flat] < rel_threshold * top) continue;
        std::size_t rem = flat;
        for (std::size_t d = 0; d < rank; ++d) {
            idx[d] = rem / stride[d];
            rem %= stride[d];
        }
        bool is_max = true;
        // Walk the 3^rank neighborhood; offsets encoded in base 3.
        std::size_t combos = 1;
        for (std::size_t d = 0; d < rank; ++d) combos *= 3;
        for (std::size_t c = 0; c < combos && is_max; ++c) {
            std::size_t code = c;
            long long nb = 0;
            bool valid = true, self = true;
            for (std::size_t d = 0; d < rank; ++d) {
                const long long off = static_cast<long long>(code % 3) - 1;
                code /= 3;
                if (off != 0) self = false;
                const long long j = static_cast<long long>(idx[d]) + off;
                if (j < 0 || j >= static_cast<long long>(shape[d])) {
                    valid = false;
                    break;
                }
                nb += j * static_cast<long long>(stride[d]);
            }
            if (!valid || self) continue;
            const auto n = static_cast<std::size_t>(nb);
            // Ties resolve to the lower flat index.
            if (mag[n] > mag[flat] || (mag[n] == mag[flat] && n < flat)) is_max = false;
        }
        if (is_max) out.push_back({flat, image.coordinates(flat), mag[flat]});
    }
    std::stable_sort(out.begin(), out.end(), [](const Peak& a, const Peak& b) { return a.magnitude > b.magnitude; });
    return out;
}

double normalized_cross_correlation(const ImageVolume& a, const ImageVolume& b)
{
    if (a.shape() != b.shape()) throw Error(ErrorCode::invalid_image, "NCC needs images on the same grid");
    const auto ma = a.magnitude();
    const auto mb = b.magnitude();
    const double n = static_cast<double>(ma.size());
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        mean_a += ma[i];
        mean_b += mb[i];
    }
    mean_a /= n;
    mean_b /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < ma.size(); ++i) {
        const double da = ma[i] - mean_a, db = mb[i] - mean_b;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) return 0.0;
    return sab / std::sqrt(saa * sbb);
}

}  // namespace nfsar
