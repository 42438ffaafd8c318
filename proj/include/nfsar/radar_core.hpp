// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "nfsar/axis.hpp"

namespace nfsar {

/// FMCW chirp parameters, SI units throughout.
struct ChirpConfig {
    double start_freq = 0.0;   // f0, Hz
    double slope = 0.0;        // K, Hz/s
    double duration = 0.0;     // T, s
    double sample_rate = 0.0;  // fs, Hz
    std::size_t num_samples = 0;

    double bandwidth() const { return slope * duration; }
    /// Throws Error(invalid_chirp) unless f0, K, T, fs > 0 and Nk >= 2.
    void validate() const;

    bool operator==(const ChirpConfig&) const = default;
};

/// Wavenumbers k[i] = (2 pi / c)(f0 + K i T / (Nk - 1)), rad/m.
///
/// Fast-time samples span [0, T] inclusive. A zero slope is accepted here (all
/// entries equal), the other chirp invariants are enforced.
std::vector<double> wavenumber_axis(const ChirpConfig& chirp);
/// Same samples as wavenumber_axis, as a uniform Axis.
Axis wavenumber_grid(const ChirpConfig& chirp);

/// c / 2B in m.
double range_resolution(const ChirpConfig& chirp);
/// fs c / 2K in m.
double max_range(const ChirpConfig& chirp);

enum class Geometry { linear, rectilinear, circular, cylindrical };

const char* to_string(Geometry g);

/// Element positions of a synthetic array.
///
/// Element grid dimensions, in storage order:
///   linear       {y'}          elements at (0, y', Z0)
///   rectilinear  {x', y'}      elements at (x', y', Z0)
///   circular     {theta}       elements at (R0 cos theta, 0, R0 sin theta)
///   cylindrical  {theta, y'}   elements at (R0 cos theta, y', R0 sin theta)
class Aperture {
public:
    static Aperture linear(const Axis& y, double standoff);
    static Aperture rectilinear(const Axis& x, const Axis& y, double standoff);
    static Aperture circular(const Axis& theta, double radius);
    static Aperture cylindrical(const Axis& theta, const Axis& y, double radius);

    Geometry geometry() const { return geometry_; }
    const std::vector<Axis>& axes() const { return axes_; }
    std::vector<std::size_t> shape() const;
    std::size_t element_count() const;

    /// Z0 for linear/rectilinear apertures.
    double standoff() const { return standoff_; }
    /// R0 for circular/cylindrical apertures.
    double radius() const { return radius_; }
    /// True for circular/cylindrical apertures whose theta samples close the circle.
    bool full_circle() const;

    Vec3 element_position(std::size_t flat_index) const;
    std::vector<Vec3> element_positions() const;

    /// Copy with every element moved by dx along x (rectilinear only).
    Aperture translated_x(double dx) const;

    bool same_grid(const Aperture& other, double tol = 1e-12) const;

private:
    Aperture(Geometry g, std::vector<Axis> axes, double standoff, double radius);

    Geometry geometry_;
    std::vector<Axis> axes_;
    double standoff_ = 0.0;
    double radius_ = 0.0;
};

struct Scatterer {
    Vec3 position;
    double sigma = 1.0;  // real, >= 0
};

struct Scene {
    std::vector<Scatterer> scatterers;
};

/// Warnings for scatterers beyond max_range or off the aperture's imaging plane.
std::vector<std::string> validate_scene(const Scene& scene, const ChirpConfig& chirp,
                                        const Aperture& aperture);

/// Complex beat samples, shape = aperture.shape() + {Nk}, k fastest.
struct BeatCube {
    Aperture aperture;
    ChirpConfig chirp;
    std::vector<cplx> samples;

    std::vector<std::size_t> shape() const;
    std::size_t num_k() const { return chirp.num_samples; }
    cplx& at(std::size_t element, std::size_t k) { return samples[element * num_k() + k]; }
    const cplx& at(std::size_t element, std::size_t k) const
    {
        return samples[element * num_k() + k];
    }
    void validate() const;

    static BeatCube zeros(const Aperture& aperture, const ChirpConfig& chirp);
};

/// Complex reflectivity on a rectangular voxel grid, last axis fastest.
struct ImageVolume {
    std::vector<Axis> axes;
    std::vector<cplx> values;

    std::vector<std::size_t> shape() const;
    /// Throws Error(invalid_image) on shape mismatch, bad axes or NaN/Inf.
    void validate() const;
    /// Flat index of the largest magnitude.
    std::size_t argmax() const;
    /// Voxel-center coordinates of a flat index.
    std::vector<double> coordinates(std::size_t flat_index) const;
    std::vector<double> magnitude() const;
};

}  // namespace nfsar
