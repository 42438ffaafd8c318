// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/spectral.hpp"

namespace nfsar {

double msp_check_linear(double r, double w, double x, const Axis& u_axis, const Axis& ku_axis)
{
    if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorCode::undersampled, "r must be positive");
    if (!(w > 0) || !std::isfinite(x)) throw Error(ErrorCode::undersampled, "standoff must be positive");
    if (u_axis.size < 2 || ku_axis.size < 2 || !(u_axis.step > 0) || !(ku_axis.step > 0)) {
        throw Error(ErrorCode::spectral_axis, "axes must be uniform with at least two samples");
    }

    const double umax = std::max(std::abs(u_axis.start), std::abs(u_axis.back()));
    // Fastest spatial phase rate of the spherical wave and of the plane-wave sum.
    const double rate = r * umax / std::hypot(umax, w);
    if (rate * u_axis.step >= kPi) throw Error(ErrorCode::undersampled, "u axis aliases the spherical phase");
    if (ku_axis.step * umax >= kPi) throw Error(ErrorCode::undersampled, "k_u axis aliases the plane-wave sum");

    std::vector<cplx> rhs_terms;
    std::vector<double> kus;
    for (std::size_t m = 0; m < ku_axis.size; ++m) {
        const double ku = ku_axis[m];
        if (std::abs(ku) >= r) continue;
        kus.push_back(ku);
        rhs_terms.push_back(std::polar(ku_axis.step, std::sqrt(r * r - ku * ku) * w));
    }
    if (kus.empty()) throw Error(ErrorCode::undersampled, "k_u axis has no propagating samples");

    cplx inner{};
    double nl = 0.0, nr = 0.0;
    for (std::size_t i = 0; i < u_axis.size; ++i) {
        const double du = u_axis[i];  // u - x
        const cplx lhs = std::polar(1.0, r * std::hypot(du, w));
        cplx rhs{};
        for (std::size_t m = 0; m < kus.size(); ++m) rhs += rhs_terms[m] * std::polar(1.0, kus[m] * du);
        inner += lhs * std::conj(rhs);
        nl += std::norm(lhs);
        nr += std::norm(rhs);
    }
    if (nr == 0.0) return 0.0;
    return std::min(1.0, std::abs(inner) / std::sqrt(nl * nr));
}

}  // namespace nfsar
