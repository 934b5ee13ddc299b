#pragma once

// =============================================================================
// mgsim - Resistive star network: converter terminals -> feeders -> common bus
// =============================================================================

#include <span>
#include <utility>
#include <vector>

namespace mgsim {

/// One feeder cable between a converter terminal and the common DC bus.
struct FeederLine {
    double r_true = 0.0;   ///< actual feeder resistance [ohm], must be > 0
    double r_est = 0.0;    ///< resistance estimate used by local compensation [ohm], >= 0
    bool connected = true; ///< an open feeder carries exactly zero current
};

/// Bus load model: fixed current draw or fixed resistance.
enum class LoadKind {
    ConstantCurrent,
    ConstantResistance,
};

/// Piecewise-constant load, defined by (time, value) steps.
/// Values are amperes for ConstantCurrent, ohms for ConstantResistance.
struct LoadProfile {
    LoadKind kind = LoadKind::ConstantCurrent;
    std::vector<std::pair<double, double>> steps;

    /// Value of the last step with time <= t. Throws if t precedes the first step.
    double value_at(double t) const;

    /// Checks step ordering and value signs; throws std::invalid_argument.
    void validate() const;
};

/// Result of one algebraic solve of the star network.
struct BusSolution {
    double v_pcc = 0.0;                  ///< common bus voltage [V]
    std::vector<double> branch_currents; ///< per feeder [A], zero for open feeders
    double i_load = 0.0;                 ///< current drawn by the bus load [A]
};

/// Solves the single-node Kirchhoff balance
///   sum_i (v_i - v_pcc) / R_fi = i_load            (constant current)
///   sum_i (v_i - v_pcc) / R_fi = v_pcc / R_load    (constant resistance)
/// over the connected feeders and returns the unique bus voltage with the
/// per-feeder branch currents.
///
/// With no connected feeder: a nonzero constant-current load is infeasible
/// (throws std::runtime_error); otherwise the passive endpoint v_pcc = 0 is
/// returned. Non-finite inputs throw std::invalid_argument.
BusSolution solve_bus(std::span<const double> terminal_voltages,
                      std::span<const FeederLine> feeders,
                      double load_value, LoadKind kind);

/// Voltage drop current * resistance across one feeder.
double feeder_drop(double current, double resistance);

/// Ideal share i_load / n_connected of identical parallel converters.
/// Throws std::domain_error when n_connected < 1.
double equal_share(double i_load, int n_connected);

} // namespace mgsim
