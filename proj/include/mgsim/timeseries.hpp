#pragma once

#include "mgsim/control.hpp"

#include <span>
#include <utility>
#include <vector>

namespace mgsim {

/// Per-converter slice of one recorded sample.
struct ConverterSample {
    double v_ref = 0.0;    ///< effective voltage reference [V]
    double v_term = 0.0;   ///< terminal voltage [V]
    double i_branch = 0.0; ///< feeder current into the bus [A]
    double p_term = 0.0;   ///< v_term * i_branch [W]
    double comp = 0.0;     ///< decentralized compensation voltage [V]
    bool connected = true;
};

/// One recorded simulation step.
struct Sample {
    double t = 0.0;
    double v_pcc = 0.0;
    double i_load = 0.0;
    double p_load = 0.0; ///< v_pcc * i_load [W]
    ControlMode mode = ControlMode::None;
    std::vector<ConverterSample> converters;
};

/// Decimated recording of a run.
struct TimeSeries {
    double decimate = 1e-3; ///< seconds between recorded samples
    std::vector<Sample> samples;

    int converter_count() const {
        return samples.empty() ? 0 : static_cast<int>(samples.front().converters.size());
    }
};

/// Per-converter window aggregates.
struct ConverterWindowStats {
    double mean_current = 0.0;
    double mean_power = 0.0;
    double mean_comp = 0.0;
    double mean_v_term = 0.0;
};

/// Steady-state aggregates over one analysis window.
struct WindowMetrics {
    double t_start = 0.0;
    double t_end = 0.0;
    double mean_v_pcc = 0.0;
    double max_v_pcc_deviation = 0.0; ///< max |v_pcc - v_nominal| over the window
    double settling_time = 0.0;       ///< time from t_start until v_pcc stays in the band
    double sharing_error = 0.0;       ///< max pairwise current difference, connected converters
    std::vector<ConverterWindowStats> converters;
};

struct Metrics {
    double v_nominal = 400.0;
    double settle_band = 0.5; ///< [V]
    std::vector<WindowMetrics> windows;
};

/// Aggregates the samples strictly inside each (t_start, t_end) window.
/// Windows must lie inside the recorded span and contain at least ten
/// samples; violations throw std::invalid_argument.
Metrics compute_metrics(const TimeSeries& series,
                        std::span<const std::pair<double, double>> windows,
                        double v_nominal, double settle_band = 0.5);

} // namespace mgsim
