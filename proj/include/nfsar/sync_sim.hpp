// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace nfsar {

/// Stepper drive settings. Lengths in mm.
struct DriveConfig {
    double mm_per_rev = 0.0;           // actuator travel per motor revolution
    std::size_t pulses_per_rev = 0;    // driver microstep setting
    std::string axis = "x";

    void validate() const;
};

/// M / N.
double mm_per_pulse(const DriveConfig& drive);

/// Symmetric trapezoidal move (triangle when v_max is not reached). mm, mm/s, mm/s^2.
struct MotionProfile {
    double travel = 0.0;
    double v_max = 0.0;
    double accel = 0.0;
    int direction = +1;

    void validate() const;
    /// Move duration in s.
    double duration() const;
    /// Distance covered at time t, clamped to [0, travel].
    double position(double t) const;
    /// Earliest time the distance covered reaches x, x clamped to [0, travel].
    double time_at(double x) const;
};

/// Step pulses emitted by the motion controller during one sweep.
struct PulseStream {
    std::vector<double> times;  // s, strictly increasing; pulse p completes (p+1) steps
    int direction = +1;
    double mm_per_pulse = 0.0;
    std::vector<std::string> warnings;
};

/// Pulse p is emitted when the ideal profile first covers (p+1) mm_per_pulse;
/// floor(travel / mm_per_pulse) pulses in total.
PulseStream generate_pulse_stream(const MotionProfile& profile, const DriveConfig& drive);

/// Breakpoint layout, mm. Radar 1 breakpoints are x_offset + n step, n < count; radar 2
/// samples the same physical positions while sitting delta_x behind the platform reference.
struct TriggerPlan {
    double x_offset = 0.0;
    double step = 0.0;
    std::size_t count = 0;
    double delta_x = 0.0;

    void validate() const;
    double breakpoint(std::size_t n) const { return x_offset + step * static_cast<double>(n); }
};

struct TriggerEntry {
    std::size_t breakpoint = 0;   // n
    std::size_t pulse_count = 0;  // pulses counted when the trigger fired
    double position = 0.0;        // mm, radar phase center
    double time = 0.0;            // s
};

struct TriggerRecord {
    std::vector<TriggerEntry> radar1;
    std::vector<TriggerEntry> radar2;
    int direction = +1;
    std::vector<std::string> warnings;
};

/// Pulse-counting synchronizer.
///
/// Forward sweeps count up from 0, reverse sweeps count down from the stream's pulse
/// total; platform position is count * mm_per_pulse. A radar fires on the first count
/// whose radar position is >= its next breakpoint (<= on reverse sweeps); the starting
/// count fires only for breakpoints it sits on exactly. Breakpoints already behind the
/// start are never reached. Missing breakpoints are reported in warnings.
TriggerRecord run_synchronizer(const PulseStream& pulses, const TriggerPlan& plan, const DriveConfig& drive);

struct SyncReport {
    double max_position_error = 0.0;   // mm, over both radars
    double max_alignment_error = 0.0;  // mm, |pos_r1(n) - pos_r2(n)|
    std::size_t triggers_radar1 = 0;
    std::size_t triggers_radar2 = 0;
    bool within_bound = false;         // record non-empty and both errors <= mm_per_pulse
    std::vector<std::string> messages;
};

SyncReport verify_uniform_grid(const TriggerRecord& record, const TriggerPlan& plan, const DriveConfig& drive);

}  // namespace nfsar
