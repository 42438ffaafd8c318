// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/spectral.hpp"

namespace nfsar {

namespace {

struct Bracket {
    std::size_t i0 = 0, i1 = 0;
    double w = 0.0;
    bool ok = false;
};

Bracket angle_bracket(const Axis& alpha, bool periodic, double a)
{
    Bracket b;
    const double two_pi = 2.0 * kPi;
    double rel = std::fmod(a - alpha.start, two_pi);
    if (rel < 0) rel += two_pi;
    const double u = rel / alpha.step;
    const double n = static_cast<double>(alpha.size);
    if (periodic) {
        double fl = std::floor(u);
        b.w = u - fl;
        b.i0 = static_cast<std::size_t>(fl) % alpha.size;
        b.i1 = (b.i0 + 1) % alpha.size;
        b.ok = true;
        return b;
    }
    const double tol = 1e-9;
    if (u > n - 1 + tol) return b;
    const double uc = std::min(u, n - 1);
    std::size_t i0 = static_cast<std::size_t>(std::floor(uc));
    if (i0 + 1 >= alpha.size) i0 = alpha.size >= 2 ? alpha.size - 2 : 0;
    b.i0 = i0;
    b.i1 = std::min(i0 + 1, alpha.size - 1);
    b.w = uc - static_cast<double>(i0);
    b.ok = true;
    return b;
}

Bracket radial_bracket(const double* kr, std::size_t n, double r)
{
    Bracket b;
    if (n < 2 || r < kr[0] || r > kr[n - 1]) return b;
    const double* it = std::upper_bound(kr, kr + n, r);
    std::size_t i1 = static_cast<std::size_t>(it - kr);
    if (i1 >= n) i1 = n - 1;
    if (i1 == 0) i1 = 1;
    b.i0 = i1 - 1;
    b.i1 = i1;
    b.w = (r - kr[b.i0]) / (kr[b.i1] - kr[b.i0]);
    b.ok = true;
    return b;
}

void check_alpha(const Axis& alpha, bool periodic)
{
    if (!(alpha.step > 0) || alpha.size < 1) {
        throw Error(ErrorCode::spectral_axis, "angular axis must be uniform and increasing");
    }
    if (periodic && std::abs(alpha.step * static_cast<double>(alpha.size) - 2.0 * kPi) > 1e-9) {
        throw Error(ErrorCode::spectral_axis, "periodic angular axis must span 2 pi");
    }
}

void check_kr(const std::vector<double>& kr)
{
    for (std::size_t i = 0; i < kr.size(); ++i) {
        if (!(kr[i] > 0) || (i > 0 && !(kr[i] > kr[i - 1]))) {
            throw Error(ErrorCode::spectral_axis, "k_r samples must be positive and increasing");
        }
    }
}

// Regrids one polar slice; `at(ia, ir)` returns the polar sample.
template <class At>
void regrid_slice(const Axis& alpha, bool periodic, const double* kr, std::size_t nkr, At at,
                  const Axis& kx, const Axis& kz, cplx* dst, std::size_t dst_stride)
{
    for (std::size_t ix = 0; ix < kx.size; ++ix) {
        for (std::size_t iz = 0; iz < kz.size; ++iz) {
            const double x = kx[ix], z = kz[iz];
            const Bracket rb = radial_bracket(kr, nkr, std::hypot(x, z));
            if (!rb.ok) continue;
            const Bracket ab = angle_bracket(alpha, periodic, std::atan2(z, x));
            if (!ab.ok) continue;
            const cplx v0 = (1.0 - rb.w) * at(ab.i0, rb.i0) + rb.w * at(ab.i0, rb.i1);
            const cplx v1 = (1.0 - rb.w) * at(ab.i1, rb.i0) + rb.w * at(ab.i1, rb.i1);
            dst[(ix * kz.size + iz) * dst_stride] = (1.0 - ab.w) * v0 + ab.w * v1;
        }
    }
}

SpectralGrid spectral_output(std::vector<Axis> axes)
{
    SpectralGrid g;
    for (const auto& a : axes) {
        g.spatial.push_back(Axis{-static_cast<double>(a.size / 2) * 2.0 * kPi / (static_cast<double>(a.size) * a.step),
                                 2.0 * kPi / (static_cast<double>(a.size) * a.step), a.size});
    }
    g.axes = std::move(axes);
    g.spectral.assign(g.axes.size(), true);
    g.values.assign(element_count(g.shape()), cplx{});
    return g;
}

}  // namespace

SpectralGrid polar_regrid(const PolarSpectrum& polar, const Axis& kx, const Axis& kz)
{
    check_alpha(polar.alpha, polar.periodic);
    check_kr(polar.kr);
    const std::size_t nkr = polar.kr.size();
    if (polar.values.size() != polar.alpha.size * nkr) {
        throw Error(ErrorCode::spectral_axis, "polar samples do not match their axes");
    }
    SpectralGrid out = spectral_output({kx, kz});
    auto at = [&](std::size_t ia, std::size_t ir) { return polar.values[ia * nkr + ir]; };
    regrid_slice(polar.alpha, polar.periodic, polar.kr.data(), nkr, at, kx, kz, out.values.data(), 1);
    return out;
}

SpectralGrid polar_regrid(const CylindricalPolarSpectrum& polar, const Axis& kx, const Axis& kz)
{
    check_alpha(polar.alpha, polar.periodic);
    const std::size_t ny = polar.ky.size;
    if (polar.kr.size() != ny || polar.values.size() != polar.alpha.size * ny * polar.kr_len) {
        throw Error(ErrorCode::spectral_axis, "polar samples do not match their axes");
    }
    SpectralGrid out = spectral_output({kx, polar.ky, kz});
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const auto& kr = polar.kr[iy];
        if (kr.size() > polar.kr_len) throw Error(ErrorCode::spectral_axis, "k_r slice too long");
        check_kr(kr);
        auto at = [&](std::size_t ia, std::size_t ir) {
            return polar.values[(ia * ny + iy) * polar.kr_len + ir];
        };
        // Output index (ix, iy, iz) = (ix * ny + iy) * nz + iz.
        cplx* base = out.values.data() + iy * kz.size;
        for (std::size_t ix = 0; ix < kx.size; ++ix) {
            regrid_slice(polar.alpha, polar.periodic, kr.data(), kr.size(), at, Axis{kx[ix], kx.step, 1}, kz,
                         base + ix * ny * kz.size, 1);
        }
    }
    return out;
}

}  // namespace nfsar
