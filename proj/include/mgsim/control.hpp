#pragma once

// =============================================================================
// mgsim - Supervisory control: secondary restoration, comm link, schedule
// =============================================================================

#include "mgsim/pi_controller.hpp"

#include <deque>
#include <vector>

namespace mgsim {

/// Bus-voltage regime in force at a given time.
enum class ControlMode {
    Centralized = 0,   ///< secondary PI correction broadcast over the link
    None = 1,          ///< primary loops only, references at nominal
    Decentralized = 2, ///< local feeder-drop compensation per converter
};

/// Centralized secondary restoration loop: senses the bus voltage, compares
/// it to the nominal value and produces one correction voltage that is
/// broadcast identically to every converter.
class SecondaryController {
public:
    SecondaryController(PiGains gains, double v_nominal, double correction_limit);

    /// PI update on (v_nominal - v_pcc). Non-finite measurements are ignored
    /// and the previous correction is held.
    double update(double v_pcc_measured, double dt);

    /// Disabling forces the correction to zero and resets the integrator;
    /// enabling also starts from a fresh integrator.
    void set_enabled(bool enabled);

    bool enabled() const { return enabled_; }
    double correction() const { return correction_; }
    double v_nominal() const { return v_nominal_; }

private:
    PiController pi_;
    double v_nominal_;
    bool enabled_ = false;
    double correction_ = 0.0;
};

/// What the receiver uses while the link is down.
enum class LinkLossPolicy {
    Hold, ///< keep the last delivered correction (stale-hold)
    Zero, ///< fall back to zero correction
};

/// Sampled communication link with a whole-period transport delay and
/// up/down outage state. One value is transmitted per link period.
class CommLink {
public:
    CommLink(double period, int delay_periods, LinkLossPolicy on_loss);

    /// Sends value at time t and returns what the receiver holds afterwards:
    /// the value sent delay periods earlier when the link is up, otherwise
    /// the stale (or zeroed) previous delivery. t must not decrease.
    double transmit(double value, double t);

    void set_up(bool up);
    bool up() const { return up_; }
    double last_delivered() const { return last_delivered_; }
    double period() const { return period_; }

private:
    double period_;
    std::size_t delay_;
    LinkLossPolicy policy_;
    bool up_ = true;
    std::deque<double> in_flight_;
    double last_delivered_ = 0.0;
    double last_t_ = 0.0;
    bool transmitted_ = false;
};

/// Local reference of the decentralized scheme: v_nominal + i_out * r_est.
/// Pure function of the converter's own measurements.
double decentralized_reference(double v_nominal, double i_out, double r_est);

/// Timed mode switch.
struct ModeEvent {
    double t = 0.0;
    ControlMode mode = ControlMode::None;
};

/// Converter trip: feeder opens and the converter is disabled.
struct TripEvent {
    double t = 0.0;
    int converter = 0; ///< zero-based index
};

/// Link outage boundary.
struct LinkEvent {
    double t = 0.0;
    bool up = true;
};

/// Timeline of mode switches, trips and link outages. Load steps live in the
/// scenario's LoadProfile.
struct ControlSchedule {
    std::vector<ModeEvent> mode_timeline;
    std::vector<TripEvent> trips;
    std::vector<LinkEvent> link_events;

    /// Throws std::invalid_argument on ordering violations or an empty /
    /// late-starting mode timeline.
    void validate() const;
};

/// Mode of the last timeline entry with time <= t.
/// Throws std::out_of_range for t before the first entry.
ControlMode active_mode(const ControlSchedule& schedule, double t);

} // namespace mgsim
