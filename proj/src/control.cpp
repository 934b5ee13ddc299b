#include "mgsim/control.hpp"

#include <cmath>
#include <stdexcept>

namespace mgsim {

SecondaryController::SecondaryController(PiGains gains, double v_nominal, double correction_limit)
    : pi_(gains, -correction_limit, correction_limit), v_nominal_(v_nominal) {
    if (!(correction_limit > 0.0))
        throw std::invalid_argument("secondary: correction limit must be > 0");
}

double SecondaryController::update(double v_pcc_measured, double dt) {
    if (!enabled_) return 0.0;
    if (!std::isfinite(v_pcc_measured)) return correction_; // hold on bad measurement
    correction_ = pi_.step(v_nominal_ - v_pcc_measured, dt);
    return correction_;
}

void SecondaryController::set_enabled(bool enabled) {
    enabled_ = enabled;
    pi_.reset();
    correction_ = 0.0;
}

CommLink::CommLink(double period, int delay_periods, LinkLossPolicy on_loss)
    : period_(period), delay_(static_cast<std::size_t>(delay_periods)), policy_(on_loss) {
    if (!(period > 0.0)) throw std::invalid_argument("comm link: period must be > 0");
    if (delay_periods < 0) throw std::invalid_argument("comm link: delay must be >= 0 periods");
}

double CommLink::transmit(double value, double t) {
    if (transmitted_ && t < last_t_)
        throw std::invalid_argument("link_transmit: time must be non-decreasing");
    last_t_ = t;
    transmitted_ = true;

    // The sender always transmits; an outage only blocks delivery.
    in_flight_.push_back(value);
    if (in_flight_.size() > delay_ + 1) in_flight_.pop_front();
    if (up_ && in_flight_.size() == delay_ + 1) last_delivered_ = in_flight_.front();
    return last_delivered_;
}

void CommLink::set_up(bool up) {
    if (up_ && !up && policy_ == LinkLossPolicy::Zero) last_delivered_ = 0.0;
    up_ = up;
}

double decentralized_reference(double v_nominal, double i_out, double r_est) {
    return v_nominal + i_out * r_est;
}

void ControlSchedule::validate() const {
    if (mode_timeline.empty())
        throw std::invalid_argument("schedule: mode timeline must not be empty");
    if (mode_timeline.front().t != 0.0)
        throw std::invalid_argument("schedule: first mode entry must be at t = 0");
    double prev = -1.0;
    for (const auto& entry : mode_timeline) {
        if (!std::isfinite(entry.t) || entry.t <= prev)
            throw std::invalid_argument("schedule: mode times must be finite and strictly increasing");
        prev = entry.t;
    }
    prev = -1.0;
    for (const auto& trip : trips) {
        if (!std::isfinite(trip.t) || trip.t < 0.0)
            throw std::invalid_argument("schedule: trip times must be finite and >= 0");
        if (trip.t < prev)
            throw std::invalid_argument("schedule: trip times must be non-decreasing");
        prev = trip.t;
    }
    prev = -1.0;
    for (const auto& ev : link_events) {
        if (!std::isfinite(ev.t) || ev.t < 0.0)
            throw std::invalid_argument("schedule: link event times must be finite and >= 0");
        if (ev.t < prev)
            throw std::invalid_argument("schedule: link event times must be non-decreasing");
        prev = ev.t;
    }
}

ControlMode active_mode(const ControlSchedule& schedule, double t) {
    if (schedule.mode_timeline.empty() || t < schedule.mode_timeline.front().t)
        throw std::out_of_range("active_mode: t precedes the first mode entry");
    ControlMode mode = schedule.mode_timeline.front().mode;
    for (const auto& entry : schedule.mode_timeline) {
        if (entry.t <= t) mode = entry.mode;
        else break;
    }
    return mode;
}

} // namespace mgsim
