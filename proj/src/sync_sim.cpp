// SPDX-License-Identifier: Apache-2.0
#include "nfsar/sync_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "nfsar/error.hpp"

namespace nfsar {

void DriveConfig::validate() const
{
    if (!(mm_per_rev > 0) || !std::isfinite(mm_per_rev) || pulses_per_rev < 1) {
        throw Error(ErrorCode::invalid_drive, "drive needs mm_per_rev > 0 and pulses_per_rev >= 1");
    }
}

double mm_per_pulse(const DriveConfig& drive)
{
    drive.validate();
    return drive.mm_per_rev / static_cast<double>(drive.pulses_per_rev);
}

void MotionProfile::validate() const
{
    if (!(travel > 0) || !(v_max > 0) || !(accel > 0) || !std::isfinite(travel) || !std::isfinite(v_max) ||
        !std::isfinite(accel) || (direction != 1 && direction != -1)) {
        throw Error(ErrorCode::invalid_profile, "profile needs travel, v_max, accel > 0 and direction +-1");
    }
}

namespace {

struct Phases {
    double v_peak, t_acc, d_acc, t_total;
};

Phases phases(const MotionProfile& p)
{
    Phases ph;
    ph.v_peak = std::min(p.v_max, std::sqrt(p.accel * p.travel));
    ph.t_acc = ph.v_peak / p.accel;
    ph.d_acc = 0.5 * ph.v_peak * ph.t_acc;
    ph.t_total = 2.0 * ph.t_acc + (p.travel - 2.0 * ph.d_acc) / ph.v_peak;
    return ph;
}

}  // namespace

double MotionProfile::duration() const
{
    validate();
    return phases(*this).t_total;
}

double MotionProfile::position(double t) const
{
    validate();
    const Phases ph = phases(*this);
    if (t <= 0) return 0.0;
    if (t >= ph.t_total) return travel;
    if (t <= ph.t_acc) return 0.5 * accel * t * t;
    const double t_dec = ph.t_total - ph.t_acc;
    if (t <= t_dec) return ph.d_acc + ph.v_peak * (t - ph.t_acc);
    const double r = ph.t_total - t;
    return travel - 0.5 * accel * r * r;
}

double MotionProfile::time_at(double x) const
{
    validate();
    const Phases ph = phases(*this);
    x = std::clamp(x, 0.0, travel);
    if (x <= ph.d_acc) return std::sqrt(2.0 * x / accel);
    if (x <= travel - ph.d_acc) return ph.t_acc + (x - ph.d_acc) / ph.v_peak;
    return ph.t_total - std::sqrt(2.0 * (travel - x) / accel);
}

PulseStream generate_pulse_stream(const MotionProfile& profile, const DriveConfig& drive)
{
    profile.validate();
    PulseStream out;
    out.mm_per_pulse = mm_per_pulse(drive);
    out.direction = profile.direction;
    const auto total = static_cast<std::size_t>(std::floor(profile.travel / out.mm_per_pulse + 1e-9));
    if (total == 0) {
        out.warnings.push_back("travel is shorter than one pulse; no pulses emitted");
        return out;
    }
    out.times.reserve(total);
    for (std::size_t p = 0; p < total; ++p) {
        out.times.push_back(profile.time_at(static_cast<double>(p + 1) * out.mm_per_pulse));
    }
    return out;
}

void TriggerPlan::validate() const
{
    if (!(step > 0) || count < 1 || !(x_offset >= 0) || !std::isfinite(delta_x) || !std::isfinite(step)) {
        throw Error(ErrorCode::invalid_plan, "plan needs step > 0, count >= 1, x_offset >= 0, finite delta_x");
    }
}

namespace {

// Tracks one radar's breakpoints against the pulse counter.
struct Tracker {
    const TriggerPlan& plan;
    double mpp;
    bool forward;
    bool integer_offset;
    long long offset_counts;  // radar offset in pulses when integer_offset
    double offset;            // mm
    std::size_t visited = 0;  // breakpoints handled so far
    std::vector<TriggerEntry>* out;

    double radar_position(long long count) const
    {
        if (integer_offset) return static_cast<double>(count - offset_counts) * mpp;
        return static_cast<double>(count) * mpp - offset;
    }

    std::size_t next_breakpoint() const { return forward ? visited : plan.count - 1 - visited; }

    // Breakpoints strictly behind the starting position are never reached.
    void skip_passed(long long count)
    {
        while (visited < plan.count) {
            const double pos = radar_position(count);
            const double b = plan.breakpoint(next_breakpoint());
            if (forward ? pos <= b : pos >= b) break;
            ++visited;
        }
    }

    void observe(long long count, std::size_t pulses, double time)
    {
        while (visited < plan.count) {
            const double pos = radar_position(count);
            const double b = plan.breakpoint(next_breakpoint());
            const bool reached = forward ? pos >= b : pos <= b;
            if (!reached) break;
            out->push_back({next_breakpoint(), pulses, pos, time});
            ++visited;
        }
    }
};

}  // namespace

TriggerRecord run_synchronizer(const PulseStream& pulses, const TriggerPlan& plan, const DriveConfig& drive)
{
    plan.validate();
    const double mpp = mm_per_pulse(drive);
    if (pulses.mm_per_pulse != 0.0 && std::abs(pulses.mm_per_pulse - mpp) > 1e-12 * mpp) {
        throw Error(ErrorCode::invalid_plan, "pulse stream was generated for a different drive");
    }

    TriggerRecord rec;
    rec.direction = pulses.direction;
    const bool forward = pulses.direction >= 0;

    const double ratio = plan.delta_x / mpp;
    const bool integer_offset = std::abs(ratio - std::round(ratio)) < 1e-6;
    Tracker r1{plan, mpp, forward, true, 0, 0.0, 0, &rec.radar1};
    Tracker r2{plan, mpp, forward, integer_offset, std::llround(ratio), plan.delta_x, 0, &rec.radar2};

    const auto total = static_cast<long long>(pulses.times.size());
    long long count = forward ? 0 : total;
    r1.skip_passed(count);
    r2.skip_passed(count);
    r1.observe(count, 0, 0.0);
    r2.observe(count, 0, 0.0);
    for (std::size_t p = 0; p < pulses.times.size(); ++p) {
        count += forward ? 1 : -1;
        r1.observe(count, p + 1, pulses.times[p]);
        r2.observe(count, p + 1, pulses.times[p]);
    }

    for (const auto& [name, list] : {std::pair{"radar 1", &rec.radar1}, std::pair{"radar 2", &rec.radar2}}) {
        if (list->size() < plan.count) {
            rec.warnings.push_back(std::string(name) + " recorded " + std::to_string(list->size()) + " of " +
                                   std::to_string(plan.count) + " triggers");
        }
    }
    return rec;
}

SyncReport verify_uniform_grid(const TriggerRecord& record, const TriggerPlan& plan, const DriveConfig& drive)
{
    const double mpp = mm_per_pulse(drive);
    SyncReport rep;
    rep.triggers_radar1 = record.radar1.size();
    rep.triggers_radar2 = record.radar2.size();
    rep.messages = record.warnings;

    std::map<std::size_t, double> pos1;
    for (const auto& e : record.radar1) {
        rep.max_position_error = std::max(rep.max_position_error, std::abs(e.position - plan.breakpoint(e.breakpoint)));
        pos1[e.breakpoint] = e.position;
    }
    for (const auto& e : record.radar2) {
        rep.max_position_error = std::max(rep.max_position_error, std::abs(e.position - plan.breakpoint(e.breakpoint)));
        auto it = pos1.find(e.breakpoint);
        if (it != pos1.end()) {
            rep.max_alignment_error = std::max(rep.max_alignment_error, std::abs(it->second - e.position));
        }
    }

    const bool empty = record.radar1.empty() && record.radar2.empty();
    if (empty) rep.messages.push_back("trigger record is empty");
    const double tol = mpp * (1.0 + 1e-9);
    rep.within_bound = !empty && rep.max_position_error <= tol && rep.max_alignment_error <= tol;
    if (!empty && rep.max_position_error > tol) rep.messages.push_back("position error exceeds one pulse");
    if (!empty && rep.max_alignment_error > tol) rep.messages.push_back("cross-radar alignment exceeds one pulse");
    return rep;
}

}  // namespace nfsar
