// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/spectral.hpp"

namespace nfsar {

SpectralGrid stolt_resample(const SpectralGrid& spec, const Axis& kz_axis, double Z_phase,
                            double z_origin)
{
    if (spec.rank() < 1) throw Error(ErrorCode::spectral_axis, "Stolt input needs a wavenumber dim");
    if (!(kz_axis.step > 0) || kz_axis.size < 1) {
        throw Error(ErrorCode::spectral_axis, "k_z target axis must be uniform and increasing");
    }
    const std::size_t last = spec.rank() - 1;
    for (std::size_t d = 0; d < last; ++d) {
        if (!spec.spectral[d]) throw Error(ErrorCode::spectral_axis, "transverse dims must be spectral");
    }
    const Axis kaxis = spec.axes[last];
    if (!(kaxis.step > 0)) throw Error(ErrorCode::spectral_axis, "wavenumber axis must be increasing");

    const auto shape = spec.shape();
    const std::size_t nk = kaxis.size;
    const std::size_t ncol = spec.values.size() / nk;
    const std::size_t nz = kz_axis.size;

    SpectralGrid out;
    out.axes = spec.axes;
    out.spatial = spec.spatial;
    out.spectral = spec.spectral;
    out.axes[last] = kz_axis;
    out.spatial[last] = Axis{z_origin, 2.0 * kPi / (static_cast<double>(nz) * kz_axis.step), nz};
    out.spectral[last] = true;
    out.values.assign(ncol * nz, cplx{});

    std::vector<double> src_kz(nk);
    std::vector<cplx> src_v(nk);
    bool any = false;
    for (std::size_t c = 0; c < ncol; ++c) {
        // Transverse wavenumber of column c.
        double kp2 = 0.0;
        std::size_t rem = c;
        for (std::size_t d = last; d-- > 0;) {
            const std::size_t idx = rem % shape[d];
            rem /= shape[d];
            const double kd = spec.axes[d][idx];
            kp2 += kd * kd;
        }

        std::size_t m = 0;
        for (std::size_t i = 0; i < nk; ++i) {
            const double arg = 4.0 * kaxis[i] * kaxis[i] - kp2;
            if (arg <= 0) continue;
            const double kz = std::sqrt(arg);
            src_kz[m] = kz;
            src_v[m] = spec.values[c * nk + i] * std::polar(1.0, -kz * Z_phase);
            ++m;
        }
        if (m < 2) continue;
        any = true;

        cplx* dst = &out.values[c * nz];
        std::size_t j = 0;
        for (std::size_t t = 0; t < nz; ++t) {
            const double kz = kz_axis[t];
            if (kz < src_kz[0] || kz > src_kz[m - 1]) continue;
            while (j + 2 < m && src_kz[j + 1] < kz) ++j;
            const double w = (kz - src_kz[j]) / (src_kz[j + 1] - src_kz[j]);
            dst[t] = (1.0 - w) * src_v[j] + w * src_v[j + 1];
        }
    }
    if (!any) throw Error(ErrorCode::empty_support, "no propagating k_z support in any column");
    return out;
}

}  // namespace nfsar
