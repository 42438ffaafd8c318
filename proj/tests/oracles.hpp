// SPDX-License-Identifier: Apache-2.0
// Brute-force reference computations, written without the library's helpers.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <array>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double c0 = 299792458.0;
constexpr double pi = 3.14159265358979323846;

/// k_i = 2 pi (f0 + K i T / (N - 1)) / c
inline std::vector<double> wavenumbers(double f0, double K, double T, std::size_t n)
{
    std::vector<double> k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = 2.0 * pi * (f0 + K * T * double(i) / double(n - 1)) / c0;
    return k;
}

/// Noiseless single-element beat sample sum_n sigma/R^2 exp(j 2k (R + bias)) exp(j phi0).
inline cplx beat(const std::vector<std::array<double, 4>>& targets, const std::array<double, 3>& elem, double k,
                 double bias = 0.0, double phi0 = 0.0, bool path_loss = true)
{
    cplx s{};
    for (const auto& t : targets) {
        const double R = std::sqrt((t[0] - elem[0]) * (t[0] - elem[0]) + (t[1] - elem[1]) * (t[1] - elem[1]) +
                                   (t[2] - elem[2]) * (t[2] - elem[2]));
        const double a = path_loss ? t[3] / (R * R) : t[3];
        s += a * std::exp(cplx(0, 2.0 * k * (R + bias) + phi0));
    }
    return s;
}

/// Direct unitary DFT S(k_m) = N^-1/2 sum_n x_n exp(-j k_m u_n) on an arbitrary spectral axis.
inline std::vector<cplx> dft(const std::vector<cplx>& x, double u0, double du, double k0, double dk)
{
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cplx acc{};
        const double km = k0 + dk * double(m);
        for (std::size_t i = 0; i < n; ++i) acc += x[i] * std::exp(cplx(0, -km * (u0 + du * double(i))));
        out[m] = acc / std::sqrt(double(n));
    }
    return out;
}

/// Direct unitary inverse DFT.
inline std::vector<cplx> idft(const std::vector<cplx>& s, double u0, double du, double k0, double dk)
{
    const std::size_t n = s.size();
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc{};
        const double u = u0 + du * double(i);
        for (std::size_t m = 0; m < n; ++m) acc += s[m] * std::exp(cplx(0, (k0 + dk * double(m)) * u));
        out[i] = acc / std::sqrt(double(n));
    }
    return out;
}

inline std::vector<cplx> random_complex(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = {d(rng), d(rng)};
    return v;
}

inline double energy(const std::vector<cplx>& v)
{
    double e = 0.0;
    for (const auto& x : v) e += std::norm(x);
    return e;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(const std::vector<cplx>& a)
{
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, std::abs(x));
    return m;
}

/// Pearson correlation of two real sequences.
inline double pearson(const std::vector<double>& a, const std::vector<double>& b)
{
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) ma += a[i], mb += b[i];
    ma /= double(a.size());
    mb /= double(b.size());
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace oracle
