#pragma once

// =============================================================================
// mgsim - Fixed-step deterministic simulation loop
// =============================================================================

#include "mgsim/control.hpp"
#include "mgsim/converter.hpp"
#include "mgsim/network.hpp"
#include "mgsim/timeseries.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mgsim {

/// Parameters and primary-loop gains of one converter in a scenario.
struct ConverterSpec {
    ConverterParams params;
    PiGains voltage_gains{7.0, 100.0};
    PiGains current_gains{1.0, 500.0};
};

/// Secondary-layer configuration (controller plus link).
struct SecondarySpec {
    PiGains gains{1.5, 150.0};
    double correction_limit = 40.0; ///< [V], defaults to 0.1 * v_nominal
    double link_period = 1e-3;      ///< correction broadcast interval [s]
    int link_delay = 0;             ///< transport delay in whole periods
    LinkLossPolicy on_loss = LinkLossPolicy::Hold;
};

/// Complete, deterministic description of one run. No randomness anywhere.
struct Scenario {
    std::vector<ConverterSpec> converters;
    std::vector<FeederLine> feeders; ///< one per converter
    LoadProfile load;
    ControlSchedule schedule;
    SecondarySpec secondary;
    double v_nominal = 400.0; ///< desired bus voltage [V]
    double duration = 0.0;    ///< [s]
    double plant_dt = 1e-5;   ///< plant integration step [s]
    double control_period = 2e-4;
    double decimate = 1e-3;   ///< recording interval [s]

    /// Checks structural invariants: matching converter/feeder counts, step
    /// divisibility (plant_dt | control_period | link_period), schedule
    /// coverage, and per-element validity. Throws std::invalid_argument.
    void validate() const;
};

/// Raised when the network becomes unsolvable mid-run (for example every
/// converter tripped while a constant-current load still draws current).
class SimulationAbort : public std::runtime_error {
public:
    SimulationAbort(const std::string& what, double t)
        : std::runtime_error(what), time_(t) {}
    double time() const { return time_; }

private:
    double time_;
};

/// Runs the scenario and records one sample every `decimate` seconds,
/// including t = 0. Identical scenarios produce bit-identical series.
TimeSeries run_scenario(const Scenario& scenario);

} // namespace mgsim
