#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgsim {

/// Proportional + integral pair, without state. Used for configuration.
struct PiGains {
    double kp = 0.0;
    double ki = 0.0; ///< [1/s]
};

/// Discrete PI regulator: forward-Euler integrator, saturated output,
/// conditional anti-windup (the integrator is frozen whenever the output
/// would saturate against the sign of the error).
struct PiController {
    double kp = 0.0;
    double ki = 0.0;
    double out_min = 0.0;
    double out_max = 0.0;
    double integrator = 0.0;

    PiController() = default;
    PiController(PiGains gains, double lo, double hi)
        : kp(gains.kp), ki(gains.ki), out_min(lo), out_max(hi) {
        if (!(lo < hi)) throw std::invalid_argument("PiController: out_min must be < out_max");
    }

    /// Advances the integrator and returns the saturated output
    /// clamp(kp*error + integrator', out_min, out_max).
    double step(double error, double dt) {
        if (!std::isfinite(error)) throw std::invalid_argument("pi_step: non-finite error");
        if (!(dt > 0.0)) throw std::invalid_argument("pi_step: dt must be > 0");
        const double candidate = integrator + ki * error * dt;
        const double raw = kp * error + candidate;
        const bool windup = (raw > out_max && error > 0.0) || (raw < out_min && error < 0.0);
        if (!windup) integrator = candidate;
        return std::clamp(kp * error + integrator, out_min, out_max);
    }

    void reset() { integrator = 0.0; }
};

} // namespace mgsim
