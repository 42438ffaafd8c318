// SPDX-License-Identifier: Apache-2.0
#include "nfsar/pipeline.hpp"

#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>

#include "nfsar/analysis.hpp"
#include "nfsar/error.hpp"
#include "nfsar/image_io.hpp"
#include "report.hpp"

namespace nfsar {

namespace fs = std::filesystem;

std::string iso_date_today()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[16];
    std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
    return buf;
}

void apply_options(RunConfig& cfg, const RunOptions& opts)
{
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.out_dir) cfg.output.dir = *opts.out_dir;
    if (opts.format) {
        if (*opts.format != "raw" && *opts.format != "csv" && *opts.format != "pgm") {
            throw Error(ErrorCode::unsupported_format, "unsupported output format '" + *opts.format + "'");
        }
        cfg.output.format = *opts.format;
    }
    if (opts.oracle) cfg.output.oracle = true;
}

namespace {

// Output directory whose files are removed again unless commit() is reached.
class Artifacts {
public:
    explicit Artifacts(const RunConfig& cfg)
    {
        const std::string date = cfg.output.date.empty() ? iso_date_today() : cfg.output.date;
        dir_ = fs::path(cfg.output.dir) / date / cfg.name;
        // Remember the first missing ancestor so a failed run leaves no empty dirs.
        for (fs::path p = dir_; !p.empty() && !fs::exists(p); p = p.parent_path()) created_root_ = p;
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw Error(ErrorCode::io_failure, "cannot create '" + dir_.string() + "': " + ec.message());
    }
    ~Artifacts()
    {
        if (committed_) return;
        std::error_code ec;
        for (const auto& f : files_) fs::remove(f, ec);
        if (!created_root_.empty()) fs::remove_all(created_root_, ec);
    }
    Artifacts(const Artifacts&) = delete;
    Artifacts& operator=(const Artifacts&) = delete;

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void add(const std::vector<std::string>& files) { files_.insert(files_.end(), files.begin(), files.end()); }
    void text(const std::string& name, const std::string& body)
    {
        const std::string p = path(name);
        files_.push_back(p);
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        out << body;
        out.close();
        if (!out) throw Error(ErrorCode::io_failure, "cannot write '" + p + "'");
    }
    RunResult commit(std::vector<std::string> warnings, bool ok)
    {
        committed_ = true;
        return RunResult{dir_.string(), files_, std::move(warnings), ok};
    }
    const std::vector<std::string>& files() const { return files_; }

private:
    fs::path dir_;
    fs::path created_root_;
    std::vector<std::string> files_;
    bool committed_ = false;
};

void require_capture(const RunConfig& cfg)
{
    if (!cfg.aperture) throw Error(ErrorCode::config_missing_key, "missing key 'aperture'");
    if (!cfg.chirp) throw Error(ErrorCode::config_missing_key, "missing key 'chirp'");
}

void require_recon(const RunConfig& cfg)
{
    if (!cfg.recon) throw Error(ErrorCode::config_missing_key, "missing key 'recon'");
}

std::string scan_notes(const RunConfig& cfg)
{
    std::string s = cfg.scan_notes;
    if (!s.empty() && s.back() != '\n') s += '\n';
    return s;
}

// Keeps aperture columns x_i of `cube` for i in [first, first + n).
BeatCube crop_columns(const BeatCube& cube, std::size_t first, std::size_t n)
{
    const Axis x = cube.aperture.axes()[0];
    const Axis y = cube.aperture.axes()[1];
    const Axis xs{x[first], x.step, n};
    BeatCube out = BeatCube::zeros(Aperture::rectilinear(xs, y, cube.aperture.standoff()), cube.chirp);
    const std::size_t row = y.size * cube.num_k();
    std::copy(cube.samples.begin() + static_cast<std::ptrdiff_t>(first * row),
              cube.samples.begin() + static_cast<std::ptrdiff_t>((first + n) * row), out.samples.begin());
    return out;
}

struct Capture {
    std::optional<BeatCube> cube;
    std::vector<std::pair<std::string, CalibrationResult>> calibrations;
    std::vector<std::string> warnings;
};

CalibrationResult calibrate_radar(const RunConfig& cfg, const ChirpConfig& chirp, std::uint64_t seed)
{
    const double range = cfg.calibration->reflector_range;
    const Aperture single = Aperture::linear(Axis{0.0, 1e-3, 1}, 0.0);
    const Scene reflector{{{Vec3{0.0, 0.0, range}, 1.0}}};
    return calibrate(simulate_beat(reflector, single, chirp, cfg.errors, seed), range);
}

Capture capture(const RunConfig& cfg)
{
    require_capture(cfg);
    Capture c;
    c.warnings = validate_scene(cfg.scene, *cfg.chirp, *cfg.aperture);
    if (cfg.scene.scatterers.empty()) throw Error(ErrorCode::invalid_scene, "scene has no targets");

    if (!cfg.chirp2) {
        c.cube = simulate_beat(cfg.scene, *cfg.aperture, *cfg.chirp, cfg.errors, cfg.seed);
        if (cfg.calibration) {
            auto cal = calibrate_radar(cfg, *cfg.chirp, cfg.seed + 1);
            c.cube = apply_calibration(*c.cube, cal);
            c.calibrations.emplace_back("radar 1", cal);
        }
        return c;
    }

    // Dual radar: radar 2 sits delta_x along x; keep the columns both radars saw.
    auto [cube1, cube2] = simulate_dual(cfg.scene, *cfg.aperture, *cfg.chirp, *cfg.chirp2, DualRadarLayout{cfg.delta_x},
                                        cfg.errors, cfg.errors, cfg.seed);
    if (cfg.calibration) {
        auto cal1 = calibrate_radar(cfg, *cfg.chirp, cfg.seed + 1);
        auto cal2 = calibrate_radar(cfg, *cfg.chirp2, cfg.seed + 2);
        cube1 = apply_calibration(cube1, cal1);
        cube2 = apply_calibration(cube2, cal2);
        c.calibrations.emplace_back("radar 1", cal1);
        c.calibrations.emplace_back("radar 2", cal2);
    }
    const Axis x = cfg.aperture->axes()[0];
    const double ratio = cfg.delta_x / x.step;
    const long long m = std::llround(ratio);
    if (std::abs(ratio - static_cast<double>(m)) > 1e-6 || std::llabs(m) >= static_cast<long long>(x.size)) {
        throw Error(ErrorCode::config_geometry_mismatch,
                    "aperture.delta_x_mm must be a multiple of x_step_mm smaller than the scan length");
    }
    // Radar 2 column j sits at x_{j+m}.
    const std::size_t n = x.size - static_cast<std::size_t>(std::llabs(m));
    const std::size_t first1 = m > 0 ? static_cast<std::size_t>(m) : 0;
    const std::size_t first2 = m < 0 ? static_cast<std::size_t>(-m) : 0;
    BeatCube a = crop_columns(cube1, first1, n);
    BeatCube b = crop_columns(cube2, first2, n);
    b.aperture = a.aperture;
    const bool first_is_low = wavenumber_grid(a.chirp).start <= wavenumber_grid(b.chirp).start;
    c.cube = first_is_low ? merge_dual_band(a, b) : merge_dual_band(b, a);
    return c;
}

ImageVolume reconstruct(const ReconSection& r, const BeatCube& cube)
{
    ImageVolume img;
    if (r.algorithm == "linear_fft_1d") img = linear_fft_1d(cube, r.grid);
    else if (r.algorithm == "linear_rma_2d") img = linear_rma_2d(cube, r.grid);
    else if (r.algorithm == "rectilinear_fft_2d") img = rectilinear_fft_2d(cube, r.grid);
    else if (r.algorithm == "rectilinear_rma_3d") img = rectilinear_rma_3d(cube, r.grid);
    else if (r.algorithm == "circular_pfa_2d") img = circular_pfa_2d(cube, r.grid);
    else if (r.algorithm == "cylindrical_pfa_3d") img = cylindrical_pfa_3d(cube, r.grid);
    else if (r.algorithm == "backprojection") img = backprojection_oracle(cube, r.grid);
    else throw Error(ErrorCode::config_unit, "unknown algorithm '" + r.algorithm + "'");
    try {
        img.validate();
    } catch (const Error& e) {
        throw Error(ErrorCode::invariant_violation, std::string("reconstructed image: ") + e.what());
    }
    return img;
}

detail::RunReport base_report(const RunConfig& cfg, const char* command)
{
    detail::RunReport rep;
    rep.name = cfg.name;
    rep.command = command;
    rep.seed = cfg.seed;
    rep.chirp = cfg.chirp;
    rep.chirp2 = cfg.chirp2;
    if (cfg.aperture) {
        rep.geometry = to_string(cfg.aperture->geometry());
        rep.elements = cfg.aperture->element_count();
    }
    rep.targets = cfg.scene.scatterers.size();
    return rep;
}

RunResult image_run(const RunConfig& cfg, const RunOptions& opts, const char* command, bool from_input)
{
    require_recon(cfg);
    if (!from_input) require_capture(cfg);
    if (opts.dry_run) {
        if (from_input) (void)read_cube(*opts.input_cube);
        return {};
    }

    Capture cap;
    if (from_input) {
        cap.cube = read_cube(*opts.input_cube);
        if (algorithm_geometry(cfg.recon->algorithm) &&
            *algorithm_geometry(cfg.recon->algorithm) != cap.cube->aperture.geometry()) {
            throw Error(ErrorCode::config_geometry_mismatch, "input cube geometry does not fit the algorithm");
        }
    } else {
        cap = capture(cfg);
    }

    Artifacts art(cfg);
    detail::RunReport rep = base_report(cfg, command);
    if (from_input) {
        rep.chirp = cap.cube->chirp;
        rep.chirp2.reset();
        rep.geometry = to_string(cap.cube->aperture.geometry());
        rep.elements = cap.cube->aperture.element_count();
    } else {
        art.add(write_cube(*cap.cube, art.path("beat_cube")));
    }
    rep.calibrations = cap.calibrations;
    rep.warnings = cap.warnings;

    const ImageVolume img = reconstruct(*cfg.recon, *cap.cube);
    art.add(emit_image(img, cfg.recon->axis_names, cfg.output.format, art.path("image"), opts.config_sha256));
    rep.algorithm = cfg.recon->algorithm;
    rep.axis_names = cfg.recon->axis_names;
    rep.peaks = find_peaks(img, 0.5);

    if (cfg.output.oracle) {
        const ImageVolume bp = backprojection_oracle(*cap.cube, cfg.recon->grid);
        rep.oracle_ncc = normalized_cross_correlation(img, bp);
    }

    art.text("scan_notes.txt", scan_notes(cfg));
    rep.artifacts = art.files();
    for (auto& a : rep.artifacts) a = fs::path(a).filename().string();
    rep.artifacts.push_back("report.txt");
    art.text("report.txt", detail::format_run_report(rep));
    return art.commit(rep.warnings, true);
}

}  // namespace

RunResult run_simulate(const RunConfig& cfg, const RunOptions& opts)
{
    require_capture(cfg);
    if (opts.dry_run) return {};
    Capture cap = capture(cfg);
    Artifacts art(cfg);
    art.add(write_cube(*cap.cube, art.path("beat_cube")));
    art.text("scan_notes.txt", scan_notes(cfg));
    detail::RunReport rep = base_report(cfg, "simulate");
    rep.calibrations = cap.calibrations;
    rep.warnings = cap.warnings;
    rep.artifacts = {"beat_cube.bin", "beat_cube.json", "scan_notes.txt", "report.txt"};
    art.text("report.txt", detail::format_run_report(rep));
    return art.commit(rep.warnings, true);
}

RunResult run_reconstruct(const RunConfig& cfg, const RunOptions& opts)
{
    return image_run(cfg, opts, "reconstruct", opts.input_cube.has_value());
}

RunResult run_pipeline(const RunConfig& cfg, const RunOptions& opts)
{
    if (cfg.sync_only()) return run_sync(cfg, opts);
    return image_run(cfg, opts, "pipeline", false);
}

RunResult run_sync(const RunConfig& cfg, const RunOptions& opts)
{
    if (!cfg.sync) throw Error(ErrorCode::config_missing_key, "missing key 'sync'");
    const SyncSection& s = *cfg.sync;
    s.drive.validate();
    s.profile.validate();
    s.plan.validate();
    if (opts.dry_run) return {};

    std::vector<detail::SyncSweep> sweeps;
    MotionProfile prof = s.profile;
    prof.direction = +1;
    const PulseStream fwd = generate_pulse_stream(prof, s.drive);
    TriggerRecord rec = run_synchronizer(fwd, s.plan, s.drive);
    sweeps.push_back({"forward", rec, verify_uniform_grid(rec, s.plan, s.drive)});
    for (const auto& w : fwd.warnings) sweeps.back().report.messages.push_back(w);

    std::optional<double> agreement;
    if (s.bidirectional) {
        prof.direction = -1;
        const PulseStream rev = generate_pulse_stream(prof, s.drive);
        TriggerRecord rrec = run_synchronizer(rev, s.plan, s.drive);
        sweeps.push_back({"reverse", rrec, verify_uniform_grid(rrec, s.plan, s.drive)});
        std::map<std::size_t, double> fpos;
        for (const auto& e : rec.radar1) fpos[e.breakpoint] = e.position;
        double worst = 0.0;
        for (const auto& e : rrec.radar1) {
            auto it = fpos.find(e.breakpoint);
            if (it != fpos.end()) worst = std::max(worst, std::abs(it->second - e.position));
        }
        agreement = worst;
    }

    Artifacts art(cfg);
    const std::string body = detail::format_sync_report(cfg.name, cfg.seed, s, sweeps, agreement);
    art.text("sync_report.txt", body);
    const bool ok = body.find("status: PASS") != std::string::npos;
    std::vector<std::string> warnings;
    for (const auto& sw : sweeps) warnings.insert(warnings.end(), sw.report.messages.begin(), sw.report.messages.end());
    return art.commit(warnings, ok);
}

RunResult run_calibrate(const RunConfig& cfg, const RunOptions& opts)
{
    if (!cfg.chirp) throw Error(ErrorCode::config_missing_key, "missing key 'chirp'");
    if (!cfg.calibration) throw Error(ErrorCode::config_missing_key, "missing key 'calibration'");
    if (opts.dry_run) return {};

    detail::RunReport rep = base_report(cfg, "calibrate");
    rep.calibrations.emplace_back("radar 1", calibrate_radar(cfg, *cfg.chirp, cfg.seed));
    if (cfg.chirp2) rep.calibrations.emplace_back("radar 2", calibrate_radar(cfg, *cfg.chirp2, cfg.seed + 1));

    nlohmann::json j = nlohmann::json::array();
    for (const auto& [label, cal] : rep.calibrations) {
        j.push_back({{"radar", label},
                     {"phase_offset_rad", cal.phase_offset},
                     {"range_bias_m", cal.range_bias},
                     {"reflector_range_m", cfg.calibration->reflector_range},
                     {"start_freq_hz", cal.chirp.start_freq}});
    }
    Artifacts art(cfg);
    art.text("calibration.json", j.dump(2) + "\n");
    art.text("scan_notes.txt", scan_notes(cfg));
    rep.artifacts = {"calibration.json", "scan_notes.txt", "report.txt"};
    art.text("report.txt", detail::format_run_report(rep));
    return art.commit({}, true);
}

}  // namespace nfsar
