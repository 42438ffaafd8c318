// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <cstdarg>
#include <cstdio>

namespace nfsar::detail {

namespace {

void line(std::string& out, const char* fmt, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    out += buf;
    out += '\n';
}

void chirp_lines(std::string& out, const char* label, const ChirpConfig& c)
{
    line(out, "%s: f0 %.6g GHz, slope %.6g MHz/us, T %.6g us, fs %.6g Msps, Nk %zu", label, c.start_freq * 1e-9,
         c.slope * 1e-12, c.duration * 1e6, c.sample_rate * 1e-6, c.num_samples);
    line(out, "  bandwidth %.6g GHz, range resolution %.4f mm, max range %.4f m", c.bandwidth() * 1e-9,
         range_resolution(c) * 1e3, max_range(c));
}

}  // namespace

std::string format_run_report(const RunReport& r)
{
    std::string out;
    line(out, "nfsar %s report", r.command.c_str());
    line(out, "name: %s", r.name.c_str());
    line(out, "seed: %llu", static_cast<unsigned long long>(r.seed));
    if (r.chirp) chirp_lines(out, "chirp", *r.chirp);
    if (r.chirp2) chirp_lines(out, "chirp2", *r.chirp2);
    if (!r.geometry.empty()) line(out, "aperture: %s, %zu elements", r.geometry.c_str(), r.elements);
    line(out, "targets: %zu", r.targets);

    for (const auto& [label, cal] : r.calibrations) {
        line(out, "calibration %s: phase offset %.9f rad, range bias %.6f mm", label.c_str(), cal.phase_offset,
             cal.range_bias * 1e3);
    }

    if (!r.algorithm.empty()) {
        line(out, "algorithm: %s", r.algorithm.c_str());
        line(out, "peaks (>= 0.5 max): %zu", r.peaks.size());
        for (std::size_t i = 0; i < r.peaks.size() && i < 32; ++i) {
            std::string pos;
            for (std::size_t d = 0; d < r.peaks[i].position.size(); ++d) {
                char buf[64];
                const char* name = d < r.axis_names.size() ? r.axis_names[d].c_str() : "?";
                std::snprintf(buf, sizeof buf, "%s%s=%.3f mm", d ? ", " : "", name, r.peaks[i].position[d] * 1e3);
                pos += buf;
            }
            line(out, "  peak %zu: %s, |p| = %.6g", i + 1, pos.c_str(), r.peaks[i].magnitude);
        }
    }
    if (r.oracle_ncc) line(out, "oracle NCC: %.6f", *r.oracle_ncc);

    line(out, "warnings: %zu", r.warnings.size());
    for (const auto& w : r.warnings) line(out, "  %s", w.c_str());
    line(out, "artifacts:");
    for (const auto& a : r.artifacts) line(out, "  %s", a.c_str());
    return out;
}

std::string format_sync_report(const std::string& name, std::uint64_t seed, const SyncSection& s,
                               const std::vector<SyncSweep>& sweeps, std::optional<double> sweep_agreement)
{
    std::string out;
    const double mpp = mm_per_pulse(s.drive);
    line(out, "nfsar sync report");
    line(out, "name: %s", name.c_str());
    line(out, "seed: %llu", static_cast<unsigned long long>(seed));
    line(out, "drive: %s axis, %.6g mm/rev, %zu pulses/rev, %.6g mm/pulse", s.drive.axis.c_str(), s.drive.mm_per_rev,
         s.drive.pulses_per_rev, mpp);
    line(out, "profile: travel %.6g mm, v_max %.6g mm/s, accel %.6g mm/s^2, duration %.6f s", s.profile.travel,
         s.profile.v_max, s.profile.accel, s.profile.duration());
    line(out, "plan: x_offset %.6g mm, step %.6g mm, count %zu, delta_x %.6g mm, periodicity %.6g mm",
         s.plan.x_offset, s.plan.step, s.plan.count, s.plan.delta_x, s.periodicity);
    bool ok = true;
    for (const auto& sw : sweeps) {
        line(out, "sweep %s:", sw.label.c_str());
        line(out, "  triggers: radar 1 %zu, radar 2 %zu", sw.report.triggers_radar1, sw.report.triggers_radar2);
        line(out, "  max position error: %.9f mm", sw.report.max_position_error);
        line(out, "  max cross-radar error: %.9f mm", sw.report.max_alignment_error);
        line(out, "  within one pulse: %s", sw.report.within_bound ? "yes" : "no");
        for (const auto& m : sw.report.messages) line(out, "  note: %s", m.c_str());
        ok = ok && sw.report.within_bound;
    }
    if (sweep_agreement) {
        line(out, "forward/reverse max disagreement: %.9f mm", *sweep_agreement);
        ok = ok && *sweep_agreement <= mpp * (1.0 + 1e-9);
    }
    line(out, "status: %s", ok ? "PASS" : "FAIL");
    return out;
}

}  // namespace nfsar::detail
