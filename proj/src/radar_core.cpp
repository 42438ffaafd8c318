// SPDX-License-Identifier: Apache-2.0
#include "nfsar/radar_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nfsar/error.hpp"

namespace nfsar {

const char* module_of(ErrorCode code) noexcept
{
    switch (static_cast<int>(code) / 100) {
    case 1: return "radar-core";
    case 2: return "beat-sim";
    case 3: return "spectral-kernel";
    case 4: return "reconstruct";
    case 5: return "sync-sim";
    case 6: return "cli";
    default: return "unknown";
    }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code)
{
}

std::string Error::qualified_code() const
{
    return std::string(module_of(code_)) + ":" + std::to_string(static_cast<int>(code_));
}

// ---------------------------------------------------------------------------

std::vector<double> Axis::values() const
{
    std::vector<double> v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = (*this)[i];
    return v;
}

std::size_t Axis::nearest_periodic(double coord) const
{
    const double n = static_cast<double>(size);
    double idx = std::round((coord - start) / step);
    idx = std::fmod(idx, n);
    if (idx < 0) idx += n;
    return std::min(static_cast<std::size_t>(idx), size - 1);
}

Axis Axis::centered(double center, double step, std::size_t count)
{
    return Axis{center - 0.5 * step * static_cast<double>(count - 1), step, count};
}

Axis Axis::linspace(double first, double last, std::size_t count)
{
    const double step = count > 1 ? (last - first) / static_cast<double>(count - 1) : 1.0;
    return Axis{first, step, count};
}

std::size_t next_pow2(std::size_t n)
{
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// ---------------------------------------------------------------------------

void ChirpConfig::validate() const
{
    auto bad = [](const char* what) {
        throw Error(ErrorCode::invalid_chirp, std::string("chirp: ") + what);
    };
    if (!(start_freq > 0) || !std::isfinite(start_freq)) bad("start frequency must be > 0");
    if (!(slope > 0) || !std::isfinite(slope)) bad("slope must be > 0");
    if (!(duration > 0) || !std::isfinite(duration)) bad("duration must be > 0");
    if (!(sample_rate > 0) || !std::isfinite(sample_rate)) bad("sample rate must be > 0");
    if (num_samples < 2) bad("at least 2 samples per chirp required");
}

Axis wavenumber_grid(const ChirpConfig& chirp)
{
    if (!(chirp.start_freq > 0) || !(chirp.duration > 0) || chirp.slope < 0 ||
        chirp.num_samples < 2) {
        throw Error(ErrorCode::invalid_chirp, "wavenumber axis needs f0 > 0, T > 0, K >= 0, Nk >= 2");
    }
    const double scale = 2.0 * kPi / kSpeedOfLight;
    const double df = chirp.slope * chirp.duration / static_cast<double>(chirp.num_samples - 1);
    return Axis{scale * chirp.start_freq, scale * df, chirp.num_samples};
}

std::vector<double> wavenumber_axis(const ChirpConfig& chirp)
{
    wavenumber_grid(chirp);  // argument checks
    const double scale = 2.0 * kPi / kSpeedOfLight;
    std::vector<double> k(chirp.num_samples);
    const double dt = chirp.duration / static_cast<double>(chirp.num_samples - 1);
    for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = scale * (chirp.start_freq + chirp.slope * (static_cast<double>(i) * dt));
    }
    return k;
}

double range_resolution(const ChirpConfig& chirp)
{
    const double b = chirp.bandwidth();
    if (!(b > 0)) throw Error(ErrorCode::invalid_chirp, "range resolution needs bandwidth > 0");
    return kSpeedOfLight / (2.0 * b);
}

double max_range(const ChirpConfig& chirp)
{
    if (!(chirp.slope > 0) || !(chirp.sample_rate > 0)) {
        throw Error(ErrorCode::invalid_chirp, "max range needs K > 0 and fs > 0");
    }
    return chirp.sample_rate * kSpeedOfLight / (2.0 * chirp.slope);
}

// ---------------------------------------------------------------------------

const char* to_string(Geometry g)
{
    switch (g) {
    case Geometry::linear: return "linear";
    case Geometry::rectilinear: return "rectilinear";
    case Geometry::circular: return "circular";
    case Geometry::cylindrical: return "cylindrical";
    }
    return "?";
}

namespace {

void check_axis(const Axis& a, const char* name)
{
    if (a.size == 0 || !std::isfinite(a.start) || !std::isfinite(a.step) ||
        (a.size > 1 && !(a.step > 0))) {
        throw Error(ErrorCode::invalid_aperture,
                    std::string("aperture axis '") + name + "' must be non-empty, uniform and increasing");
    }
}

}  // namespace

Aperture::Aperture(Geometry g, std::vector<Axis> axes, double standoff, double radius)
    : geometry_(g), axes_(std::move(axes)), standoff_(standoff), radius_(radius)
{
}

Aperture Aperture::linear(const Axis& y, double standoff)
{
    check_axis(y, "y");
    if (!std::isfinite(standoff)) throw Error(ErrorCode::invalid_aperture, "standoff must be finite");
    return Aperture(Geometry::linear, {y}, standoff, 0.0);
}

Aperture Aperture::rectilinear(const Axis& x, const Axis& y, double standoff)
{
    check_axis(x, "x");
    check_axis(y, "y");
    if (!std::isfinite(standoff)) throw Error(ErrorCode::invalid_aperture, "standoff must be finite");
    return Aperture(Geometry::rectilinear, {x, y}, standoff, 0.0);
}

Aperture Aperture::circular(const Axis& theta, double radius)
{
    check_axis(theta, "theta");
    if (!(radius > 0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::invalid_aperture, "circular aperture radius must be > 0");
    }
    return Aperture(Geometry::circular, {theta}, 0.0, radius);
}

Aperture Aperture::cylindrical(const Axis& theta, const Axis& y, double radius)
{
    check_axis(theta, "theta");
    check_axis(y, "y");
    if (!(radius > 0) || !std::isfinite(radius)) {
        throw Error(ErrorCode::invalid_aperture, "cylindrical aperture radius must be > 0");
    }
    return Aperture(Geometry::cylindrical, {theta, y}, 0.0, radius);
}

std::vector<std::size_t> Aperture::shape() const
{
    std::vector<std::size_t> s;
    for (const auto& a : axes_) s.push_back(a.size);
    return s;
}

std::size_t Aperture::element_count() const { return nfsar::element_count(shape()); }

bool Aperture::full_circle() const
{
    if (geometry_ != Geometry::circular && geometry_ != Geometry::cylindrical) return false;
    const Axis& t = axes_[0];
    return std::abs(t.step * static_cast<double>(t.size) - 2.0 * kPi) < 1e-9;
}

Vec3 Aperture::element_position(std::size_t flat) const
{
    switch (geometry_) {
    case Geometry::linear: return {0.0, axes_[0][flat], standoff_};
    case Geometry::rectilinear: {
        const std::size_t ny = axes_[1].size;
        return {axes_[0][flat / ny], axes_[1][flat % ny], standoff_};
    }
    case Geometry::circular: {
        const double t = axes_[0][flat];
        return {radius_ * std::cos(t), 0.0, radius_ * std::sin(t)};
    }
    case Geometry::cylindrical: {
        const std::size_t ny = axes_[1].size;
        const double t = axes_[0][flat / ny];
        return {radius_ * std::cos(t), axes_[1][flat % ny], radius_ * std::sin(t)};
    }
    }
    return {};
}

std::vector<Vec3> Aperture::element_positions() const
{
    std::vector<Vec3> out(element_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = element_position(i);
    return out;
}

Aperture Aperture::translated_x(double dx) const
{
    if (geometry_ != Geometry::rectilinear) {
        throw Error(ErrorCode::invalid_aperture, "x translation is defined for rectilinear apertures");
    }
    Axis x = axes_[0];
    x.start += dx;
    return rectilinear(x, axes_[1], standoff_);
}

bool Aperture::same_grid(const Aperture& other, double tol) const
{
    if (geometry_ != other.geometry_ || axes_.size() != other.axes_.size()) return false;
    for (std::size_t d = 0; d < axes_.size(); ++d) {
        const Axis& a = axes_[d];
        const Axis& b = other.axes_[d];
        if (a.size != b.size || std::abs(a.start - b.start) > tol ||
            (a.size > 1 && std::abs(a.step - b.step) > tol)) {
            return false;
        }
    }
    return std::abs(standoff_ - other.standoff_) <= tol && std::abs(radius_ - other.radius_) <= tol;
}

// ---------------------------------------------------------------------------

std::vector<std::string> validate_scene(const Scene& scene, const ChirpConfig& chirp,
                                        const Aperture& aperture)
{
    std::vector<std::string> warnings;
    if (scene.scatterers.empty()) warnings.push_back("scene has no scatterers");

    const double rmax = max_range(chirp);
    const auto elements = aperture.element_positions();
    constexpr double plane_tol = 1e-9;

    for (std::size_t n = 0; n < scene.scatterers.size(); ++n) {
        const auto& s = scene.scatterers[n];
        const Vec3& p = s.position;
        std::ostringstream tag;
        tag << "scatterer " << n << " at (" << p.x << ", " << p.y << ", " << p.z << ")";
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            warnings.push_back(tag.str() + ": non-finite position");
            continue;
        }
        if (s.sigma < 0) warnings.push_back(tag.str() + ": negative reflectivity");

        double farthest = 0.0;
        for (const auto& e : elements) farthest = std::max(farthest, distance(e, p));
        if (farthest > rmax) {
            std::ostringstream w;
            w << tag.str() << ": range " << farthest << " m exceeds maximum range " << rmax << " m";
            warnings.push_back(w.str());
        }

        switch (aperture.geometry()) {
        case Geometry::linear:
            if (std::abs(p.x) > plane_tol) {
                warnings.push_back(tag.str() + ": off the linear aperture's imaging plane x = 0");
            }
            break;
        case Geometry::circular:
            if (std::abs(p.y) > plane_tol) {
                warnings.push_back(tag.str() + ": off the circular aperture's imaging plane y = 0");
            }
            [[fallthrough]];
        case Geometry::cylindrical:
            if (std::hypot(p.x, p.z) >= aperture.radius()) {
                warnings.push_back(tag.str() + ": outside the aperture radius");
            }
            break;
        case Geometry::rectilinear:
            break;
        }
    }
    return warnings;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> BeatCube::shape() const
{
    auto s = aperture.shape();
    s.push_back(chirp.num_samples);
    return s;
}

void BeatCube::validate() const
{
    if (samples.size() != aperture.element_count() * chirp.num_samples) {
        throw Error(ErrorCode::invalid_cube, "beat cube size does not match aperture x Nk");
    }
    for (const auto& v : samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::invalid_cube, "beat cube contains NaN/Inf");
        }
    }
}

BeatCube BeatCube::zeros(const Aperture& aperture, const ChirpConfig& chirp)
{
    return BeatCube{aperture, chirp,
                    std::vector<cplx>(aperture.element_count() * chirp.num_samples)};
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> ImageVolume::shape() const
{
    std::vector<std::size_t> s;
    for (const auto& a : axes) s.push_back(a.size);
    return s;
}

void ImageVolume::validate() const
{
    for (const auto& a : axes) {
        if (a.size == 0 || (a.size > 1 && !(a.step > 0)) || !std::isfinite(a.start)) {
            throw Error(ErrorCode::invalid_image, "image axes must be non-empty, uniform and increasing");
        }
    }
    if (values.size() != nfsar::element_count(shape())) {
        throw Error(ErrorCode::invalid_image, "image values do not match axis lengths");
    }
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::invalid_image, "image contains NaN/Inf");
        }
    }
}

std::size_t ImageVolume::argmax() const
{
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double m = std::norm(values[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    return best;
}

std::vector<double> ImageVolume::coordinates(std::size_t flat) const
{
    std::vector<double> c(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
        c[d] = axes[d][flat % axes[d].size];
        flat /= axes[d].size;
    }
    return c;
}

std::vector<double> ImageVolume::magnitude() const
{
    std::vector<double> m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m[i] = std::abs(values[i]);
    return m;
}

}  // namespace nfsar
