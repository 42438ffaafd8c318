// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nfsar/error.hpp"
#include "nfsar/radar_core.hpp"
#include "oracles.hpp"

using namespace nfsar;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace {

ChirpConfig chirp(double f0, double K, double T, double fs, std::size_t n)
{
    return ChirpConfig{f0, K, T, fs, n};
}

}  // namespace

TEST_CASE("wavenumber_axis samples [0, T] inclusive")
{
    SECTION("zero slope gives a flat axis")
    {
        const auto k = wavenumber_axis(chirp(77e9, 0.0, 40e-6, 5e6, 2));
        REQUIRE(k.size() == 2);
        CHECK(k[0] == k[1]);
        CHECK_THAT(k[0], WithinRel(2.0 * oracle::pi * 77e9 / oracle::c0, 1e-15));
    }
    SECTION("60 GHz start, 4 GHz bandwidth, three samples")
    {
        const auto k = wavenumber_axis(chirp(60e9, 4e9 / 1e-6, 1e-6, 5e6, 3));
        for (int i = 0; i < 3; ++i) {
            CHECK_THAT(k[i], WithinRel(2.0 * oracle::pi * (60e9 + 2e9 * i) / oracle::c0, 1e-14));
        }
    }
    SECTION("77 GHz, 100 MHz/us over 40 us: last/first = 81/77")
    {
        const auto k = wavenumber_axis(chirp(77e9, 100e12, 40e-6, 5e6, 64));
        REQUIRE(k.size() == 64);
        CHECK_THAT(k.back() / k.front(), WithinRel(81.0 / 77.0, 1e-14));
    }
    SECTION("matches the direct formula sample by sample")
    {
        const auto c = chirp(77e9, 70e12, 57e-6, 5e6, 256);
        const auto k = wavenumber_axis(c);
        const auto ref = oracle::wavenumbers(77e9, 70e12, 57e-6, 256);
        for (std::size_t i = 0; i < k.size(); ++i) CHECK_THAT(k[i], WithinRel(ref[i], 1e-14));
        const Axis g = wavenumber_grid(c);
        CHECK(g.size == 256);
        CHECK_THAT(g.back(), WithinRel(k.back(), 1e-14));
    }
}

TEST_CASE("wavenumber_axis is strictly increasing and affine")
{
    for (std::size_t n : {2u, 17u, 512u}) {
        const auto k = wavenumber_axis(chirp(60e9, 66e12, 60e-6, 10e6, n));
        for (std::size_t i = 1; i < n; ++i) CHECK(k[i] > k[i - 1]);
        for (std::size_t i = 2; i < n; ++i) {
            CHECK(std::abs(k[i] - 2 * k[i - 1] + k[i - 2]) < 1e-9 * k[i]);
        }
    }
}

TEST_CASE("range resolution")
{
    CHECK_THAT(range_resolution(chirp(77e9, 100e12, 40e-6, 5e6, 64)), WithinRel(0.0375, 1e-3));
    CHECK_THAT(range_resolution(chirp(77e9, oracle::c0 / 2.0, 1.0, 5e6, 64)), WithinRel(1.0, 1e-15));
    CHECK_THAT(range_resolution(chirp(77e9, 1e9 / 10e-6, 10e-6, 5e6, 64)), WithinAbs(0.1499, 1e-4));

    SECTION("depends only on bandwidth")
    {
        const double base = range_resolution(chirp(77e9, 80e12, 50e-6, 5e6, 64));
        for (double a : {0.25, 3.0, 17.5}) {
            CHECK_THAT(range_resolution(chirp(77e9, 80e12 / a, 50e-6 * a, 5e6, 64)), WithinRel(base, 1e-12));
        }
    }
}

TEST_CASE("maximum range")
{
    const double K = 70e12;
    CHECK_THAT(max_range(chirp(77e9, K, 40e-6, 2 * K / oracle::c0, 64)), WithinRel(1.0, 1e-15));
    CHECK_THAT(max_range(chirp(77e9, 70e12, 40e-6, 5e6, 64)), WithinAbs(10.71, 0.005));
    const double r = max_range(chirp(77e9, K, 40e-6, 5e6, 64));
    CHECK_THAT(max_range(chirp(77e9, K, 40e-6, 10e6, 64)), WithinRel(2 * r, 1e-15));
    CHECK_THAT(max_range(chirp(77e9, 2 * K, 40e-6, 5e6, 64)), WithinRel(r / 2, 1e-15));
}

TEST_CASE("chirp validation")
{
    CHECK_NOTHROW(chirp(77e9, 1e12, 1e-6, 1e6, 2).validate());
    CHECK_THROWS_AS(chirp(0.0, 1e12, 1e-6, 1e6, 2).validate(), Error);
    CHECK_THROWS_AS(chirp(77e9, 0.0, 1e-6, 1e6, 2).validate(), Error);
    CHECK_THROWS_AS(chirp(77e9, 1e12, 0.0, 1e6, 2).validate(), Error);
    CHECK_THROWS_AS(chirp(77e9, 1e12, 1e-6, 0.0, 2).validate(), Error);
    CHECK_THROWS_AS(chirp(77e9, 1e12, 1e-6, 1e6, 1).validate(), Error);
    try {
        chirp(77e9, 1e12, 1e-6, 1e6, 1).validate();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_chirp);
        CHECK(e.qualified_code() == "radar-core:101");
    }
}

TEST_CASE("aperture element positions")
{
    SECTION("linear")
    {
        const auto ap = Aperture::linear(Axis{-0.01, 0.002, 11}, 0.05);
        REQUIRE(ap.element_count() == 11);
        const Vec3 p = ap.element_position(3);
        CHECK(p.x == 0.0);
        CHECK_THAT(p.y, WithinAbs(-0.004, 1e-15));
        CHECK(p.z == 0.05);
    }
    SECTION("rectilinear, y fastest")
    {
        const auto ap = Aperture::rectilinear(Axis{0, 0.001, 4}, Axis{0, 0.002, 3}, 0.0);
        CHECK(ap.shape() == std::vector<std::size_t>{4, 3});
        const Vec3 p = ap.element_position(2 * 3 + 1);
        CHECK_THAT(p.x, WithinAbs(0.002, 1e-15));
        CHECK_THAT(p.y, WithinAbs(0.002, 1e-15));
    }
    SECTION("circular elements at (R0 cos, 0, R0 sin)")
    {
        const auto ap = Aperture::circular(Axis{0, oracle::pi / 2, 4}, 0.3);
        CHECK(ap.full_circle());
        const Vec3 p = ap.element_position(1);
        CHECK_THAT(p.x, WithinAbs(0.0, 1e-15));
        CHECK_THAT(p.z, WithinAbs(0.3, 1e-15));
    }
    SECTION("cylindrical")
    {
        const auto ap = Aperture::cylindrical(Axis{0, 0.1, 10}, Axis{-0.01, 0.01, 3}, 0.2);
        CHECK_FALSE(ap.full_circle());
        const Vec3 p = ap.element_position(4 * 3 + 2);
        CHECK_THAT(p.x, WithinAbs(0.2 * std::cos(0.4), 1e-15));
        CHECK_THAT(p.y, WithinAbs(0.01, 1e-15));
        CHECK_THAT(p.z, WithinAbs(0.2 * std::sin(0.4), 1e-15));
    }
    SECTION("invalid apertures")
    {
        CHECK_THROWS_AS(Aperture::linear(Axis{0, -0.001, 4}, 0.0), Error);
        CHECK_THROWS_AS(Aperture::circular(Axis{0, 0.1, 4}, 0.0), Error);
        CHECK_THROWS_AS(Aperture::linear(Axis{0, 0.001, 4}, 0.0).translated_x(0.01), Error);
    }
}

TEST_CASE("validate_scene warnings")
{
    const auto c = chirp(77e9, 100e12, 40e-6, 5e6, 64);
    const auto ap = Aperture::linear(Axis::centered(0, 0.001, 8), 0.0);
    const double rmax = max_range(c);

    CHECK(validate_scene(Scene{{{Vec3{0, 0.01, 0.5}, 1.0}}}, c, ap).empty());

    auto far = validate_scene(Scene{{{Vec3{0, 0, 2 * rmax}, 1.0}}}, c, ap);
    REQUIRE(far.size() == 1);
    CHECK(far[0].find("exceeds maximum range") != std::string::npos);

    auto off = validate_scene(Scene{{{Vec3{0.02, 0, 0.5}, 1.0}}}, c, ap);
    REQUIRE(off.size() == 1);
    CHECK(off[0].find("plane") != std::string::npos);

    CHECK(validate_scene(Scene{}, c, ap).size() == 1);
}

TEST_CASE("beat cube and image invariants")
{
    const auto c = chirp(77e9, 100e12, 40e-6, 5e6, 4);
    auto cube = BeatCube::zeros(Aperture::linear(Axis{0, 0.001, 3}, 0.0), c);
    CHECK(cube.shape() == std::vector<std::size_t>{3, 4});
    CHECK_NOTHROW(cube.validate());
    cube.at(1, 2) = cplx(std::nan(""), 0);
    CHECK_THROWS_AS(cube.validate(), Error);

    ImageVolume img;
    img.axes = {Axis{0, 1, 2}, Axis{0, 1, 3}};
    img.values.assign(6, cplx{});
    img.values[4] = {0, -3};
    CHECK_NOTHROW(img.validate());
    CHECK(img.argmax() == 4);
    CHECK(img.coordinates(4) == std::vector<double>{1.0, 1.0});
    img.values.pop_back();
    CHECK_THROWS_AS(img.validate(), Error);
}

TEST_CASE("axis helpers")
{
    const Axis a{-1.0, 0.5, 8};
    CHECK(a.nearest_periodic(-1.0) == 0);
    CHECK(a.nearest_periodic(0.26) == 3);
    CHECK(a.nearest_periodic(3.0) == 0);    // one period later
    CHECK(a.nearest_periodic(-1.5) == 7);   // wraps backwards
    CHECK(next_pow2(1) == 1);
    CHECK(next_pow2(65) == 128);
    const Axis c = Axis::centered(0.0, 0.1, 5);
    CHECK_THAT(c.start, WithinAbs(-0.2, 1e-15));
}
