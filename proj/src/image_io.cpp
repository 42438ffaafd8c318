// SPDX-License-Identifier: Apache-2.0
#include "nfsar/image_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nfsar/error.hpp"

namespace nfsar {

namespace {

using json = nlohmann::json;

template <class T>
void put_le(std::string& out, T v)
{
    static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);
    char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b, b + sizeof(T));
    out.append(b, sizeof(T));
}

template <class T>
T get_le(const char* p)
{
    char b[sizeof(T)];
    std::memcpy(b, p, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(b, b + sizeof(T));
    T v;
    std::memcpy(&v, b, sizeof(T));
    return v;
}

void write_file(const std::string& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) throw Error(ErrorCode::io_failure, "cannot write '" + path + "'");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_failure, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json axis_json(const Axis& a) { return {{"start", a.start}, {"step", a.step}, {"size", a.size}}; }

Axis axis_from(const json& j) { return Axis{j.at("start").get<double>(), j.at("step").get<double>(), j.at("size").get<std::size_t>()}; }

std::string data_path(const std::string& json_path, const std::string& name)
{
    return (std::filesystem::path(json_path).parent_path() / name).string();
}

}  // namespace

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::io_failure, "SHA-256 failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

std::vector<std::string> write_cube(const BeatCube& cube, const std::string& stem)
{
    cube.validate();
    std::string bytes;
    bytes.reserve(cube.samples.size() * 16);
    for (const auto& v : cube.samples) {
        put_le(bytes, v.real());
        put_le(bytes, v.imag());
    }
    const std::string bin = stem + ".bin";
    json meta;
    meta["format"] = "nfsar-beat-cube";
    meta["dtype"] = "complex128le";
    meta["data"] = std::filesystem::path(bin).filename().string();
    meta["shape"] = cube.shape();
    meta["geometry"] = to_string(cube.aperture.geometry());
    meta["aperture_axes"] = json::array();
    for (const auto& a : cube.aperture.axes()) meta["aperture_axes"].push_back(axis_json(a));
    meta["standoff_m"] = cube.aperture.standoff();
    meta["radius_m"] = cube.aperture.radius();
    meta["chirp"] = {{"start_freq_hz", cube.chirp.start_freq},
                     {"slope_hz_per_s", cube.chirp.slope},
                     {"duration_s", cube.chirp.duration},
                     {"sample_rate_hz", cube.chirp.sample_rate},
                     {"num_samples", cube.chirp.num_samples}};
    write_file(bin, bytes);
    write_file(stem + ".json", meta.dump(2) + "\n");
    return {bin, stem + ".json"};
}

BeatCube read_cube(const std::string& json_path)
{
    json meta;
    try {
        meta = json::parse(read_file(json_path));
        if (meta.at("format") != "nfsar-beat-cube" || meta.at("dtype") != "complex128le") {
            throw Error(ErrorCode::invalid_cube, "'" + json_path + "' is not a beat cube sidecar");
        }
        ChirpConfig chirp;
        const auto& c = meta.at("chirp");
        chirp.start_freq = c.at("start_freq_hz");
        chirp.slope = c.at("slope_hz_per_s");
        chirp.duration = c.at("duration_s");
        chirp.sample_rate = c.at("sample_rate_hz");
        chirp.num_samples = c.at("num_samples");

        std::vector<Axis> axes;
        for (const auto& a : meta.at("aperture_axes")) axes.push_back(axis_from(a));
        const std::string g = meta.at("geometry");
        const double standoff = meta.at("standoff_m"), radius = meta.at("radius_m");
        auto need = [&](std::size_t n) {
            if (axes.size() != n) throw Error(ErrorCode::invalid_cube, "aperture axes do not match geometry");
        };
        std::optional<Aperture> ap;
        if (g == "linear") need(1), ap = Aperture::linear(axes[0], standoff);
        else if (g == "rectilinear") need(2), ap = Aperture::rectilinear(axes[0], axes[1], standoff);
        else if (g == "circular") need(1), ap = Aperture::circular(axes[0], radius);
        else if (g == "cylindrical") need(2), ap = Aperture::cylindrical(axes[0], axes[1], radius);
        else throw Error(ErrorCode::invalid_cube, "unknown geometry '" + g + "'");

        BeatCube cube = BeatCube::zeros(*ap, chirp);
        const std::string bytes = read_file(data_path(json_path, meta.at("data")));
        if (bytes.size() != cube.samples.size() * 16) {
            throw Error(ErrorCode::invalid_cube, "cube data size does not match its sidecar");
        }
        for (std::size_t i = 0; i < cube.samples.size(); ++i) {
            cube.samples[i] = {get_le<double>(&bytes[16 * i]), get_le<double>(&bytes[16 * i + 8])};
        }
        cube.validate();
        return cube;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::invalid_cube, "bad cube sidecar '" + json_path + "': " + e.what());
    }
}

std::vector<std::string> emit_image(const ImageVolume& image, const std::vector<std::string>& axis_names,
                                    const std::string& format, const std::string& stem,
                                    const std::string& config_sha256)
{
    image.validate();
    const auto shape = image.shape();
    const auto mag = image.magnitude();

    if (format == "raw") {
        std::string bytes;
        bytes.reserve(mag.size() * 4);
        for (double m : mag) put_le(bytes, static_cast<float>(m));
        json meta;
        meta["format"] = "nfsar-image";
        meta["dtype"] = "float32le";
        meta["value"] = "magnitude";
        meta["data"] = std::filesystem::path(stem + ".f32").filename().string();
        meta["shape"] = shape;
        meta["axes"] = json::array();
        for (std::size_t d = 0; d < image.axes.size(); ++d) {
            json a = axis_json(image.axes[d]);
            a["name"] = d < axis_names.size() ? axis_names[d] : "axis" + std::to_string(d);
            a["unit"] = "m";
            meta["axes"].push_back(a);
        }
        meta["config_sha256"] = config_sha256;
        write_file(stem + ".f32", bytes);
        write_file(stem + ".json", meta.dump(2) + "\n");
        return {stem + ".f32", stem + ".json"};
    }

    if (format == "csv") {
        if (shape.size() > 2) throw Error(ErrorCode::unsupported_format, "CSV supports 1-D and 2-D images only");
        const std::size_t cols = shape.back();
        std::string text;
        char buf[32];
        for (std::size_t i = 0; i < mag.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(static_cast<float>(mag[i])));
            text += buf;
            text += (i + 1) % cols == 0 ? "\n" : ",";
        }
        write_file(stem + ".csv", text);
        return {stem + ".csv"};
    }

    if (format == "pgm") {
        if (shape.size() < 2 || shape.size() > 3) {
            throw Error(ErrorCode::unsupported_format, "PGM needs a 2-D or 3-D image");
        }
        const std::size_t rows = shape[0], cols = shape[1];
        std::vector<double> slice(rows * cols);
        if (shape.size() == 2) {
            slice = mag;
        } else {
            const std::size_t depth = shape[2];
            const std::size_t zpeak = image.argmax() % depth;
            for (std::size_t i = 0; i < rows * cols; ++i) slice[i] = mag[i * depth + zpeak];
        }
        const double top = *std::max_element(slice.begin(), slice.end());
        std::string bytes = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
        for (double v : slice) {
            const double g = top > 0 ? std::round(255.0 * v / top) : 0.0;
            bytes.push_back(static_cast<char>(static_cast<unsigned char>(std::clamp(g, 0.0, 255.0))));
        }
        write_file(stem + ".pgm", bytes);
        return {stem + ".pgm"};
    }
    throw Error(ErrorCode::unsupported_format, "unsupported image format '" + format + "'");
}

StoredImage read_image(const std::string& json_path)
{
    try {
        const json meta = json::parse(read_file(json_path));
        if (meta.at("format") != "nfsar-image" || meta.at("dtype") != "float32le") {
            throw Error(ErrorCode::invalid_image, "'" + json_path + "' is not an image sidecar");
        }
        StoredImage img;
        for (const auto& a : meta.at("axes")) {
            img.axes.push_back(axis_from(a));
            img.axis_names.push_back(a.at("name"));
        }
        img.config_sha256 = meta.value("config_sha256", "");
        std::size_t n = 1;
        for (const auto& a : img.axes) n *= a.size;
        const std::string bytes = read_file(data_path(json_path, meta.at("data")));
        if (bytes.size() != n * 4) throw Error(ErrorCode::invalid_image, "image data size does not match its sidecar");
        img.magnitude.resize(n);
        for (std::size_t i = 0; i < n; ++i) img.magnitude[i] = get_le<float>(&bytes[4 * i]);
        return img;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::invalid_image, "bad image sidecar '" + json_path + "': " + e.what());
    }
}

}  // namespace nfsar
