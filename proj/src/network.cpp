#include "mgsim/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgsim {

double LoadProfile::value_at(double t) const {
    if (steps.empty()) throw std::invalid_argument("load profile: no steps defined");
    if (t < steps.front().first)
        throw std::invalid_argument("load profile: t precedes the first step");
    double value = steps.front().second;
    for (const auto& [time, v] : steps) {
        if (time <= t) value = v;
        else break;
    }
    return value;
}

void LoadProfile::validate() const {
    if (steps.empty()) throw std::invalid_argument("load profile: no steps defined");
    if (steps.front().first != 0.0)
        throw std::invalid_argument("load profile: first step must be at t = 0");
    double prev = -1.0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& [time, value] = steps[i];
        if (!std::isfinite(time) || !std::isfinite(value))
            throw std::invalid_argument("load profile: step " + std::to_string(i) + " is not finite");
        if (time <= prev)
            throw std::invalid_argument("load profile: step times must be strictly increasing");
        prev = time;
        if (kind == LoadKind::ConstantCurrent && value < 0.0)
            throw std::invalid_argument("load profile: constant-current value must be >= 0 (step " +
                                        std::to_string(i) + ")");
        if (kind == LoadKind::ConstantResistance && value <= 0.0)
            throw std::invalid_argument("load profile: constant-resistance value must be > 0 (step " +
                                        std::to_string(i) + ")");
    }
}

BusSolution solve_bus(std::span<const double> terminal_voltages,
                      std::span<const FeederLine> feeders,
                      double load_value, LoadKind kind) {
    if (terminal_voltages.size() != feeders.size())
        throw std::invalid_argument("solve_bus: one terminal voltage per feeder required");
    if (!std::isfinite(load_value))
        throw std::invalid_argument("solve_bus: non-finite load value");

    // Conductance-weighted sums over the connected feeders.
    double sum_g = 0.0;
    double sum_vg = 0.0;
    for (std::size_t i = 0; i < feeders.size(); ++i) {
        if (!feeders[i].connected) continue;
        if (!(feeders[i].r_true > 0.0))
            throw std::invalid_argument("solve_bus: feeder " + std::to_string(i) +
                                        " resistance must be > 0");
        if (!std::isfinite(terminal_voltages[i]))
            throw std::invalid_argument("solve_bus: non-finite terminal voltage at feeder " +
                                        std::to_string(i));
        const double g = 1.0 / feeders[i].r_true;
        sum_g += g;
        sum_vg += terminal_voltages[i] * g;
    }

    BusSolution solution;
    solution.branch_currents.assign(feeders.size(), 0.0);

    if (sum_g == 0.0) {
        // No path to the bus: feasible only without a forced load current.
        if (kind == LoadKind::ConstantCurrent && load_value != 0.0)
            throw std::runtime_error("infeasible network: constant-current load with no connected feeder");
        solution.v_pcc = 0.0;
        solution.i_load = 0.0;
        return solution;
    }

    if (kind == LoadKind::ConstantCurrent) {
        solution.v_pcc = (sum_vg - load_value) / sum_g;
        solution.i_load = load_value;
    } else {
        solution.v_pcc = sum_vg / (sum_g + 1.0 / load_value);
        solution.i_load = solution.v_pcc / load_value;
    }

    for (std::size_t i = 0; i < feeders.size(); ++i) {
        if (!feeders[i].connected) continue;
        solution.branch_currents[i] = (terminal_voltages[i] - solution.v_pcc) / feeders[i].r_true;
    }
    return solution;
}

double feeder_drop(double current, double resistance) {
    return current * resistance;
}

double equal_share(double i_load, int n_connected) {
    if (n_connected < 1) throw std::domain_error("equal_share: n_connected must be >= 1");
    return i_load / static_cast<double>(n_connected);
}

} // namespace mgsim
