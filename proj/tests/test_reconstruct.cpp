// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "nfsar/analysis.hpp"
#include "nfsar/error.hpp"
#include "oracles.hpp"
#include "scenarios.hpp"

using namespace nfsar;

namespace {

double rel_diff(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    return oracle::max_abs_diff(a, b) / std::max(oracle::max_abs(a), 1e-300);
}

bool finite(const ImageVolume& img)
{
    return std::all_of(img.values.begin(), img.values.end(),
                       [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

// Cheaper variants of the shared cases for exact algebraic properties.
std::vector<scenario::Case> small_cases()
{
    auto cs = scenario::all_cases();
    cs[4].aperture = Aperture::circular(Axis{0, 2 * kPi / 256, 256}, 0.2);
    cs[4].grid = ReconGrid{{Axis::centered(0, 0.0006, 21), Axis::centered(0, 0.0006, 21)}, 0.0};
    cs[5].aperture = Aperture::cylindrical(Axis{0, 2 * kPi / 128, 128}, Axis::centered(0, scenario::lambda / 2, 8), 0.1);
    cs[5].grid = ReconGrid{{Axis::centered(0, 0.0006, 11), Axis::centered(0, 0.002, 5), Axis::centered(0, 0.0006, 11)}, 0.0};
    cs[3].grid.axes[2] = Axis::centered(0.25, 0.009, 11);
    return cs;
}

BeatCube random_cube(const scenario::Case& c, std::uint64_t seed)
{
    BeatCube cube = c.simulate({});
    cube.samples = oracle::random_complex(cube.samples.size(), seed);
    return cube;
}

}  // namespace

TEST_CASE("a lone scatterer peaks within one voxel of the truth")
{
    for (const auto& c : scenario::all_cases()) {
        for (std::uint64_t seed : {7u, 8u}) {
            std::mt19937_64 rng(seed);
            const Vec3 p = c.random_point(rng);
            const ImageVolume img = c.recon(c.simulate({p}), c.grid);
            INFO(c.name << " seed " << seed);
            CHECK(img.shape() == ImageVolume{c.grid.axes, {}}.shape());
            CHECK(finite(img));
            CHECK(scenario::within_one_voxel(img, c.grid_coords(p)));
        }
    }
}

TEST_CASE("reconstructions track the matched-filter oracle")
{
    auto cs = scenario::all_cases();
    cs.erase(cs.begin() + 4, cs.end());
    for (const auto& c : cs) {
        std::mt19937_64 rng(99);
        const BeatCube cube = c.simulate({c.random_point(rng), c.random_point(rng)});
        INFO(c.name);
        CHECK(normalized_cross_correlation(c.recon(cube, c.grid), backprojection_oracle(cube, c.grid)) >= 0.9);
    }
}

TEST_CASE("reconstructions are linear in the beat samples")
{
    const cplx a(0.8, -0.3), b(-0.4, 1.2);
    for (const auto& c : small_cases()) {
        const BeatCube c1 = random_cube(c, 1), c2 = random_cube(c, 2);
        BeatCube mix = c1;
        for (std::size_t i = 0; i < mix.samples.size(); ++i) mix.samples[i] = a * c1.samples[i] + b * c2.samples[i];
        const ImageVolume r1 = c.recon(c1, c.grid), r2 = c.recon(c2, c.grid), rm = c.recon(mix, c.grid);
        std::vector<cplx> expect(rm.values.size());
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = a * r1.values[i] + b * r2.values[i];
        INFO(c.name);
        CHECK(rel_diff(expect, rm.values) <= 1e-12);

        BeatCube zero = c1;
        std::fill(zero.samples.begin(), zero.samples.end(), cplx{});
        CHECK(oracle::max_abs(c.recon(zero, c.grid).values) == 0.0);
    }
}

TEST_CASE("the oracle is the adjoint of the simulator")
{
    for (const auto& c : small_cases()) {
        const BeatCube cube = random_cube(c, 5);
        const ImageVolume bp = backprojection_oracle(cube, c.grid);
        const std::size_t stride = std::max<std::size_t>(1, bp.values.size() / 7);
        for (std::size_t flat = 0; flat < bp.values.size(); flat += stride) {
            const Vec3 v = voxel_position(c.aperture.geometry(), c.grid, bp.coordinates(flat));
            Scene s;
            s.scatterers = {{v, 1.0}};
            SimulationOptions opt;
            opt.path_loss = false;
            const BeatCube g = simulate_beat(s, c.aperture, c.chirp, {}, 1, opt);
            cplx inner{};
            for (std::size_t i = 0; i < g.samples.size(); ++i) inner += std::conj(g.samples[i]) * cube.samples[i];
            INFO(c.name << " voxel " << flat);
            CHECK(std::abs(inner - bp.values[flat]) <= 1e-9 * std::abs(inner));
        }
    }
}

TEST_CASE("linear FFT image of a symmetric pair is symmetric")
{
    const Aperture ap = Aperture::linear(Axis::centered(0, scenario::lambda / 4, 65), 0.0);
    Scene s;
    s.scatterers = {{{0, -0.012, 0.3}, 1.0}, {{0, 0.012, 0.3}, 1.0}};
    const ReconGrid grid{{Axis::centered(0, 0.004, 21)}, 0.3};
    const auto mag = linear_fft_1d(simulate_beat(s, ap, scenario::chirp(64), {}, 1), grid).magnitude();
    double worst = 0;
    for (std::size_t i = 0; i < mag.size(); ++i) worst = std::max(worst, std::abs(mag[i] - mag[mag.size() - 1 - i]));
    CHECK(worst <= 1e-9 * *std::max_element(mag.begin(), mag.end()));
    const auto peaks = find_peaks(linear_fft_1d(simulate_beat(s, ap, scenario::chirp(64), {}, 1), grid), 0.5);
    REQUIRE(peaks.size() == 2);
    CHECK(std::abs(std::abs(peaks[0].position[0]) - 0.012) <= 0.004);
}

TEST_CASE("moving the whole set-up moves the image")
{
    const double d = 0.004 * 3;
    SECTION("linear RMA along y")
    {
        auto c = scenario::all_cases()[1];
        const Vec3 p{0, 0.005, 0.29};
        const auto a = c.recon(c.simulate({p}), c.grid);
        const auto& y = c.aperture.axes()[0];
        c.aperture = Aperture::linear(Axis{y.start + d, y.step, y.size}, 0.0);
        c.grid.axes[0].start += d;
        const auto b = c.recon(c.simulate({{p.x, p.y + d, p.z}}), c.grid);
        CHECK(rel_diff(a.values, b.values) <= 1e-9);
    }
    SECTION("rectilinear FFT along x and y")
    {
        // Odd element count keeps voxel centers off the midpoints between native samples.
        auto c = scenario::all_cases()[2];
        c.aperture = Aperture::rectilinear(Axis::centered(0, scenario::lambda / 2, 33),
                                           Axis::centered(0, scenario::lambda / 2, 33), 0.0);
        const Vec3 p{-0.006, 0.01, 0.25};
        const auto a = c.recon(c.simulate({p}), c.grid);
        const auto& ax = c.aperture.axes();
        c.aperture = Aperture::rectilinear(Axis{ax[0].start + d, ax[0].step, ax[0].size},
                                           Axis{ax[1].start - d, ax[1].step, ax[1].size}, 0.0);
        c.grid.axes[0].start += d;
        c.grid.axes[1].start -= d;
        const auto b = c.recon(c.simulate({{p.x + d, p.y - d, p.z}}), c.grid);
        CHECK(rel_diff(a.values, b.values) <= 1e-9);
    }
    SECTION("cylindrical PFA along y")
    {
        auto c = small_cases()[5];
        const Vec3 p{0.001, 0.002, -0.002};
        const auto a = c.recon(c.simulate({p}), c.grid);
        const auto& ax = c.aperture.axes();
        c.aperture = Aperture::cylindrical(ax[0], Axis{ax[1].start + d, ax[1].step, ax[1].size}, 0.1);
        c.grid.axes[1].start += d;
        const auto b = c.recon(c.simulate({{p.x, p.y + d, p.z}}), c.grid);
        CHECK(rel_diff(a.values, b.values) <= 1e-9);
    }
}

TEST_CASE("circular PFA of a centered scatterer has quarter-turn symmetry")
{
    const auto c = small_cases()[4];
    const auto img = c.recon(c.simulate({{0, 0, 0}}), c.grid);
    const auto mag = img.magnitude();
    const std::size_t n = c.grid.axes[0].size;
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(mag[i * n + j] - mag[(n - 1 - j) * n + i]));
    }
    CHECK(worst <= 1e-9 * *std::max_element(mag.begin(), mag.end()));
    CHECK(scenario::within_one_voxel(img, {0, 0}));
}

TEST_CASE("range migration separates scatterers two resolution cells apart")
{
    const double dz = 2 * range_resolution(scenario::chirp(64));
    auto equal_strength = [](const scenario::Case& c, const std::vector<Vec3>& pts) {
        Scene s;
        for (const auto& p : pts) s.scatterers.push_back({p, 1.0});
        SimulationOptions opt;
        opt.path_loss = false;
        return simulate_beat(s, c.aperture, c.chirp, {}, 1, opt);
    };
    SECTION("linear")
    {
        const auto c = scenario::all_cases()[1];
        const auto peaks = find_peaks(c.recon(equal_strength(c, {{0, 0.004, 0.25}, {0, 0.004, 0.25 + dz}}), c.grid), 0.5);
        REQUIRE(peaks.size() == 2);
        CHECK(std::abs(std::abs(peaks[0].position[1] - peaks[1].position[1]) - dz) <= 0.009 * 1.5);
    }
    SECTION("rectilinear")
    {
        const auto c = scenario::all_cases()[3];
        const auto peaks = find_peaks(c.recon(equal_strength(c, {{0.004, 0, 0.21}, {0.004, 0, 0.21 + dz}}), c.grid), 0.5);
        REQUIRE(peaks.size() == 2);
        CHECK(std::abs(std::abs(peaks[0].position[2] - peaks[1].position[2]) - dz) <= 0.009 * 1.5);
    }
}

TEST_CASE("rectilinear FFT resolves an L of three scatterers")
{
    const auto c = scenario::all_cases()[2];
    const std::vector<Vec3> pts{{0, 0, 0.25}, {0.016, 0, 0.25}, {0, 0.016, 0.25}};
    const auto peaks = find_peaks(c.recon(c.simulate(pts), c.grid), 0.5);
    REQUIRE(peaks.size() == 3);
    for (const auto& p : pts) {
        const bool found = std::any_of(peaks.begin(), peaks.end(), [&](const Peak& k) {
            return std::abs(k.position[0] - p.x) <= 0.004 && std::abs(k.position[1] - p.y) <= 0.004;
        });
        CHECK(found);
    }
}

TEST_CASE("mismatched geometry or grid rank is rejected")
{
    const auto cs = small_cases();
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode{};
    };
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        const auto& other = cs[(i + 2) % cs.size()];
        INFO(c.name);
        const BeatCube foreign = other.simulate({});
        CHECK(code_of([&] { c.recon(foreign, c.grid); }) == ErrorCode::recon_geometry);
        ReconGrid bad = c.grid;
        bad.axes.push_back(Axis::centered(0, 0.01, 3));
        CHECK(code_of([&] { c.recon(c.simulate({}), bad); }) == ErrorCode::recon_grid);
    }
}

TEST_CASE("conjugating the cube mirrors range migration images about the aperture plane")
{
    SECTION("linear")
    {
        auto c = scenario::all_cases()[1];
        c.grid.axes[1] = Axis::centered(0, 0.009, 89);
        BeatCube cube = c.simulate({{0, 0.008, 0.3}});
        const auto a = c.recon(cube, c.grid).coordinates(c.recon(cube, c.grid).argmax());
        for (auto& v : cube.samples) v = std::conj(v);
        const auto img = c.recon(cube, c.grid);
        const auto b = img.coordinates(img.argmax());
        CHECK(b[0] == a[0]);
        CHECK(std::abs(b[1] + a[1]) <= 1e-9);
    }
    SECTION("rectilinear")
    {
        auto c = scenario::all_cases()[3];
        c.grid.axes[2] = Axis::centered(0, 0.009, 61);
        BeatCube cube = c.simulate({{0.004, -0.008, 0.2}});
        const auto i1 = c.recon(cube, c.grid);
        const auto a = i1.coordinates(i1.argmax());
        for (auto& v : cube.samples) v = std::conj(v);
        const auto i2 = c.recon(cube, c.grid);
        const auto b = i2.coordinates(i2.argmax());
        CHECK(b[0] == a[0]);
        CHECK(b[1] == a[1]);
        CHECK(std::abs(b[2] + a[2]) <= 1e-9);
    }
}

TEST_CASE("peaks follow moved scatterers")
{
    SECTION("linear FFT along y")
    {
        const auto c = scenario::all_cases()[0];
        for (double y : {-0.02, 0.0, 0.012}) {
            CHECK(scenario::within_one_voxel(c.recon(c.simulate({{0, y, 0.31}}), c.grid), {y}));
        }
    }
    SECTION("circular PFA under quarter turns")
    {
        const auto c = scenario::all_cases()[4];
        Vec3 p{0.003, 0, 0.0012};
        for (int turn = 0; turn < 4; ++turn) {
            CHECK(scenario::within_one_voxel(c.recon(c.simulate({p}), c.grid), {p.x, p.z}));
            p = {-p.z, 0, p.x};
        }
    }
    SECTION("cylindrical PFA on the axis")
    {
        const auto c = scenario::all_cases()[5];
        CHECK(scenario::within_one_voxel(c.recon(c.simulate({{0, 0.004, 0}}), c.grid), {0, 0.004, 0}));
    }
}
