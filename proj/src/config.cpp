// SPDX-License-Identifier: Apache-2.0
#include "nfsar/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nfsar/error.hpp"

namespace nfsar {

namespace {

std::string at_line(const YAML::Node& n)
{
    const auto m = n.Mark();
    return m.line >= 0 ? " (line " + std::to_string(m.line + 1) + ")" : "";
}

// Map node with a fixed key vocabulary.
class Section {
public:
    Section(YAML::Node node, std::string path, std::set<std::string> allowed)
        : node_(std::move(node)), path_(std::move(path))
    {
        if (!node_.IsMap()) {
            throw Error(ErrorCode::config_syntax, "'" + path_ + "' must be a mapping" + at_line(node_));
        }
        for (const auto& kv : node_) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.count(key)) {
                throw Error(ErrorCode::config_unknown_key,
                            "unknown key '" + qualified(key) + "'" + at_line(kv.first));
            }
        }
    }

    bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }
    YAML::Node node(const std::string& key) const { return node_[key]; }
    std::string qualified(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    YAML::Node required(const std::string& key) const
    {
        if (!has(key)) {
            throw Error(ErrorCode::config_missing_key, "missing key '" + qualified(key) + "'" + at_line(node_));
        }
        return node_[key];
    }

    double number(const std::string& key) const { return to_number(required(key), key); }
    double number(const std::string& key, double fallback) const
    {
        return has(key) ? to_number(node_[key], key) : fallback;
    }
    double positive(const std::string& key) const
    {
        const double v = number(key);
        if (!(v > 0)) throw unit_error(key, "must be > 0");
        return v;
    }
    double positive(const std::string& key, double fallback) const
    {
        if (!has(key)) return fallback;
        return positive(key);
    }
    std::size_t count(const std::string& key) const
    {
        const double v = number(key);
        if (!(v >= 1) || v != std::floor(v) || v > 1e9) throw unit_error(key, "must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    std::string text(const std::string& key, const std::string& fallback) const
    {
        if (!has(key)) return fallback;
        const auto n = node_[key];
        if (!n.IsScalar()) throw unit_error(key, "must be a string");
        return n.as<std::string>();
    }
    bool flag(const std::string& key, bool fallback) const
    {
        if (!has(key)) return fallback;
        try {
            return node_[key].as<bool>();
        } catch (const YAML::Exception&) {
            throw unit_error(key, "must be true or false");
        }
    }

    Error unit_error(const std::string& key, const std::string& what) const
    {
        return Error(ErrorCode::config_unit, "'" + qualified(key) + "' " + what + at_line(node_[key]));
    }

private:
    double to_number(const YAML::Node& n, const std::string& key) const
    {
        double v = 0.0;
        try {
            v = n.as<double>();
        } catch (const YAML::Exception&) {
            throw Error(ErrorCode::config_unit, "'" + qualified(key) + "' must be a number" + at_line(n));
        }
        if (!std::isfinite(v)) throw Error(ErrorCode::config_unit, "'" + qualified(key) + "' must be finite" + at_line(n));
        return v;
    }

    YAML::Node node_;
    std::string path_;
};

constexpr double kMm = 1e-3;
constexpr double kDeg = kPi / 180.0;

ChirpConfig parse_chirp(const Section& s)
{
    ChirpConfig c;
    c.start_freq = s.positive("start_freq_ghz") * 1e9;
    c.slope = s.positive("slope_mhz_per_us") * 1e12;
    c.sample_rate = s.positive("sample_rate_msps") * 1e6;
    c.num_samples = s.count("num_samples");
    if (c.num_samples < 2) throw s.unit_error("num_samples", "must be >= 2");
    c.duration = s.positive("duration_us", static_cast<double>(c.num_samples - 1) / c.sample_rate * 1e6) * 1e-6;
    return c;
}

Axis element_axis(const Section& s, const std::string& prefix)
{
    const double step = s.positive(prefix + "_step_mm") * kMm;
    const std::size_t n = s.count("num_" + prefix + "_steps");
    if (s.has(prefix + "_start_mm")) return Axis{s.number(prefix + "_start_mm") * kMm, step, n};
    return Axis::centered(0.0, step, n);
}

void forbid(const Section& s, const std::string& geometry, std::initializer_list<const char*> keys)
{
    for (const char* k : keys) {
        if (s.has(k)) {
            throw Error(ErrorCode::config_geometry_mismatch,
                        "'" + s.qualified(k) + "' does not apply to a " + geometry + " aperture" + at_line(s.node(k)));
        }
    }
}

Aperture parse_aperture(const Section& s, double& delta_x)
{
    const std::string g = s.text("geometry", "");
    if (g.empty()) s.required("geometry");
    delta_x = s.number("delta_x_mm", 0.0) * kMm;

    auto theta_axis = [&]() {
        const std::size_t n = s.count("num_theta_steps");
        const double step = s.positive("theta_step_deg", 360.0 / static_cast<double>(n)) * kDeg;
        return Axis{s.number("theta_start_deg", 0.0) * kDeg, step, n};
    };
    if (g == "linear") {
        forbid(s, g, {"x_step_mm", "num_x_steps", "x_start_mm", "radius_mm", "num_theta_steps", "theta_start_deg",
                      "theta_step_deg", "delta_x_mm"});
        return Aperture::linear(element_axis(s, "y"), s.number("z0_mm", 0.0) * kMm);
    }
    if (g == "rectilinear") {
        forbid(s, g, {"radius_mm", "num_theta_steps", "theta_start_deg", "theta_step_deg"});
        return Aperture::rectilinear(element_axis(s, "x"), element_axis(s, "y"), s.number("z0_mm", 0.0) * kMm);
    }
    if (g == "circular") {
        forbid(s, g, {"x_step_mm", "num_x_steps", "x_start_mm", "y_step_mm", "num_y_steps", "y_start_mm", "z0_mm",
                      "delta_x_mm"});
        return Aperture::circular(theta_axis(), s.positive("radius_mm") * kMm);
    }
    if (g == "cylindrical") {
        forbid(s, g, {"x_step_mm", "num_x_steps", "x_start_mm", "z0_mm", "delta_x_mm"});
        return Aperture::cylindrical(theta_axis(), element_axis(s, "y"), s.positive("radius_mm") * kMm);
    }
    throw Error(ErrorCode::config_unit, "unknown aperture geometry '" + g + "'" + at_line(s.node("geometry")));
}

Scene parse_scene(const Section& s)
{
    Scene scene;
    if (!s.has("targets")) return scene;
    const auto list = s.node("targets");
    if (!list.IsSequence()) throw Error(ErrorCode::config_syntax, "'scene.targets' must be a list" + at_line(list));
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Section t(list[i], "scene.targets[" + std::to_string(i) + "]", {"x_mm", "y_mm", "z_mm", "sigma"});
        Scatterer sc;
        sc.position = {t.number("x_mm", 0.0) * kMm, t.number("y_mm", 0.0) * kMm, t.number("z_mm", 0.0) * kMm};
        sc.sigma = t.number("sigma", 1.0);
        if (sc.sigma < 0) throw t.unit_error("sigma", "must be >= 0");
        scene.scatterers.push_back(sc);
    }
    return scene;
}

Axis grid_axis(const Section& s)
{
    const double step = s.positive("step_mm") * kMm;
    const std::size_t n = s.count("count");
    if (s.has("start_mm")) {
        if (s.has("center_mm")) {
            throw Error(ErrorCode::config_unit, "'" + s.qualified("start_mm") + "' and center_mm are exclusive");
        }
        return Axis{s.number("start_mm") * kMm, step, n};
    }
    return Axis::centered(s.number("center_mm", 0.0) * kMm, step, n);
}

ReconSection parse_recon(const Section& s, const std::optional<Aperture>& aperture)
{
    ReconSection r;
    r.algorithm = s.text("algorithm", "");
    if (r.algorithm.empty()) s.required("algorithm");
    const auto needs = algorithm_geometry(r.algorithm);
    std::vector<std::string> axes = algorithm_axes(r.algorithm);
    if (axes.empty() && r.algorithm != "backprojection") {
        throw Error(ErrorCode::config_unit, "unknown algorithm '" + r.algorithm + "'" + at_line(s.node("algorithm")));
    }
    if (!aperture) throw Error(ErrorCode::config_missing_key, "recon needs an aperture section");
    if (needs && *needs != aperture->geometry()) {
        throw Error(ErrorCode::config_geometry_mismatch,
                    "algorithm '" + r.algorithm + "' needs a " + to_string(*needs) + " aperture, config has " +
                        to_string(aperture->geometry()) + at_line(s.node("algorithm")));
    }
    if (r.algorithm == "backprojection") {
        for (const char* a : {"x", "y", "z"}) {
            if (s.has(a)) axes.push_back(a);
        }
    }
    for (const char* a : {"x", "y", "z"}) {
        const bool wanted = std::find(axes.begin(), axes.end(), a) != axes.end();
        if (s.has(a) && !wanted) {
            throw Error(ErrorCode::config_geometry_mismatch,
                        "'" + s.qualified(a) + "' is not an output axis of " + r.algorithm + at_line(s.node(a)));
        }
        if (!s.has(a) && wanted) s.required(a);
    }
    for (const auto& a : axes) {
        r.grid.axes.push_back(grid_axis(Section(s.node(a), s.qualified(a), {"start_mm", "center_mm", "step_mm", "count"})));
    }
    r.axis_names = axes;
    r.grid.target_plane = s.number("target_plane_mm", 0.0) * kMm;
    if (r.algorithm == "backprojection") {
        try {
            (void)voxel_position(aperture->geometry(), r.grid, std::vector<double>(r.grid.axes.size(), 0.0));
        } catch (const Error& e) {
            throw Error(ErrorCode::config_geometry_mismatch, e.what());
        }
    }
    return r;
}

SyncSection parse_sync(const Section& s)
{
    SyncSection y;
    y.drive.mm_per_rev = s.positive("mm_per_rev");
    y.drive.pulses_per_rev = s.count("pulses_per_rev");
    y.drive.axis = s.text("axis", "x");
    y.profile.travel = s.positive("travel_mm");
    y.profile.v_max = s.positive("v_max_mm_s");
    y.profile.accel = s.positive("accel_mm_s2");
    y.plan.x_offset = s.number("x_offset_mm", 0.0);
    if (y.plan.x_offset < 0) throw s.unit_error("x_offset_mm", "must be >= 0");
    y.plan.step = s.positive("x_step_mm");
    y.plan.count = s.count("num_x_steps");
    y.plan.delta_x = s.number("delta_x_mm", 0.0);
    y.periodicity = s.number("periodicity", 0.0);
    y.bidirectional = s.flag("bidirectional", false);
    return y;
}

}  // namespace

std::vector<std::string> algorithm_axes(const std::string& a)
{
    static const std::map<std::string, std::vector<std::string>> table{
        {"linear_fft_1d", {"y"}},           {"linear_rma_2d", {"y", "z"}},
        {"rectilinear_fft_2d", {"x", "y"}}, {"rectilinear_rma_3d", {"x", "y", "z"}},
        {"circular_pfa_2d", {"x", "z"}},    {"cylindrical_pfa_3d", {"x", "y", "z"}}};
    auto it = table.find(a);
    return it == table.end() ? std::vector<std::string>{} : it->second;
}

std::optional<Geometry> algorithm_geometry(const std::string& a)
{
    if (a.rfind("linear_", 0) == 0) return Geometry::linear;
    if (a.rfind("rectilinear_", 0) == 0) return Geometry::rectilinear;
    if (a.rfind("circular_", 0) == 0) return Geometry::circular;
    if (a.rfind("cylindrical_", 0) == 0) return Geometry::cylindrical;
    return std::nullopt;
}

RunConfig parse_config(const std::string& text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw Error(ErrorCode::config_syntax, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (root.IsNull()) throw Error(ErrorCode::config_syntax, "config is empty");

    const Section top(root, "",
                      {"name", "seed", "scan_notes", "chirp", "chirp2", "aperture", "scene", "errors", "recon",
                       "calibration", "sync", "output"});
    RunConfig cfg;
    cfg.name = top.text("name", cfg.name);
    if (cfg.name.empty() || cfg.name.find('/') != std::string::npos || cfg.name == "." || cfg.name == "..") {
        throw top.unit_error("name", "must be a plain file name");
    }
    if (top.has("seed")) {
        const double s = top.number("seed");
        if (s < 0 || s != std::floor(s) || s > 9.0e15) throw top.unit_error("seed", "must be a non-negative integer");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    cfg.scan_notes = top.text("scan_notes", "");

    const std::set<std::string> chirp_keys{"start_freq_ghz", "slope_mhz_per_us", "duration_us", "sample_rate_msps",
                                           "num_samples"};
    if (top.has("chirp")) cfg.chirp = parse_chirp(Section(top.node("chirp"), "chirp", chirp_keys));
    if (top.has("chirp2")) cfg.chirp2 = parse_chirp(Section(top.node("chirp2"), "chirp2", chirp_keys));
    if (top.has("aperture")) {
        cfg.aperture = parse_aperture(
            Section(top.node("aperture"), "aperture",
                    {"geometry", "z0_mm", "x_step_mm", "num_x_steps", "x_start_mm", "y_step_mm", "num_y_steps",
                     "y_start_mm", "radius_mm", "num_theta_steps", "theta_start_deg", "theta_step_deg", "delta_x_mm"}),
            cfg.delta_x);
    }
    if (top.has("scene")) cfg.scene = parse_scene(Section(top.node("scene"), "scene", {"targets"}));
    if (top.has("errors")) {
        const Section e(top.node("errors"), "errors", {"phase_offset_rad", "range_bias_mm", "noise_sigma"});
        cfg.errors.phase_offset = e.number("phase_offset_rad", 0.0);
        cfg.errors.range_bias = e.number("range_bias_mm", 0.0) * kMm;
        cfg.errors.noise_sigma = e.number("noise_sigma", 0.0);
        if (cfg.errors.noise_sigma < 0) throw e.unit_error("noise_sigma", "must be >= 0");
    }
    if (top.has("recon")) {
        cfg.recon = parse_recon(Section(top.node("recon"), "recon",
                                        {"algorithm", "target_plane_mm", "x", "y", "z"}),
                                cfg.aperture);
    }
    if (top.has("calibration")) {
        const Section c(top.node("calibration"), "calibration", {"range_mm"});
        cfg.calibration = CalibrationSection{c.positive("range_mm", 300.0) * kMm};
    }
    if (top.has("sync")) {
        cfg.sync = parse_sync(Section(top.node("sync"), "sync",
                                      {"mm_per_rev", "pulses_per_rev", "axis", "x_offset_mm", "x_step_mm",
                                       "num_x_steps", "delta_x_mm", "v_max_mm_s", "accel_mm_s2", "travel_mm",
                                       "periodicity", "bidirectional"}));
    }
    if (top.has("output")) {
        const Section o(top.node("output"), "output", {"dir", "format", "oracle", "date"});
        cfg.output.dir = o.text("dir", cfg.output.dir);
        cfg.output.format = o.text("format", cfg.output.format);
        cfg.output.oracle = o.flag("oracle", false);
        cfg.output.date = o.text("date", "");
    }
    if (cfg.output.format != "raw" && cfg.output.format != "csv" && cfg.output.format != "pgm") {
        throw Error(ErrorCode::unsupported_format, "unsupported output format '" + cfg.output.format + "'");
    }

    // Cross-section checks.
    if (cfg.aperture && !cfg.chirp) throw Error(ErrorCode::config_missing_key, "missing key 'chirp'");
    if (!cfg.aperture && !cfg.sync) {
        throw Error(ErrorCode::config_missing_key, "config needs an aperture or a sync section");
    }
    if (cfg.chirp2 && (!cfg.aperture || cfg.aperture->geometry() != Geometry::rectilinear)) {
        throw Error(ErrorCode::config_geometry_mismatch, "chirp2 needs a rectilinear aperture");
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_failure, "cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace nfsar
