// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

namespace nfsar {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

/// Uniformly spaced, strictly increasing coordinate axis: start + i*step.
struct Axis {
    double start = 0.0;
    double step = 1.0;
    std::size_t size = 0;

    double operator[](std::size_t i) const { return start + step * static_cast<double>(i); }
    double back() const { return (*this)[size - 1]; }
    std::vector<double> values() const;
    /// Nearest sample index, wrapping modulo size*step (samples of a periodic grid).
    std::size_t nearest_periodic(double coord) const;

    /// Axis of `count` points with spacing `step`, centered on `center`.
    static Axis centered(double center, double step, std::size_t count);
    /// Axis with `count` points from `first` to `last` inclusive.
    static Axis linspace(double first, double last, std::size_t count);
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline std::size_t element_count(const std::vector<std::size_t>& shape)
{
    return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace nfsar
