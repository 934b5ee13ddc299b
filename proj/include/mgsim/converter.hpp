#pragma once

// =============================================================================
// mgsim - Per-converter plant and primary control
// =============================================================================
// Cycle-averaged boost converter with cascaded PI loops (outer voltage loop
// producing an inductor current reference, inner current loop producing the
// duty cycle), plus a first-order ideal-source variant for fast runs.
// =============================================================================

#include "mgsim/pi_controller.hpp"

namespace mgsim {

/// Plant variant selection.
enum class ConverterModel {
    AveragedBoost, ///< averaged inductor/capacitor dynamics under a duty input
    IdealSource,   ///< first-order lag of the terminal voltage to its reference
};

/// Electrical and control-timing parameters of one converter.
struct ConverterParams {
    double v_in = 250.0;          ///< input source voltage [V]
    double inductance = 1e-3;     ///< boost inductor [H]
    double capacitance = 10e-3;   ///< output capacitor [F]
    double v_rated = 400.0;       ///< rated terminal voltage [V]
    double p_rated = 5000.0;      ///< rated power [W]
    double i_rated = 12.5;        ///< rated output current [A]
    double f_sw = 5000.0;         ///< switching frequency [Hz] (informational)
    double control_period = 2e-4; ///< update period of the PI loops [s]
    ConverterModel model = ConverterModel::AveragedBoost;
    double ideal_tau = 10e-3;     ///< lag time constant of the ideal model [s]

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

/// Dynamic state of one converter.
struct ConverterState {
    double i_ind = 0.0; ///< inductor current [A]
    double v_out = 0.0; ///< terminal capacitor voltage [V]
    double duty = 0.0;  ///< commanded duty cycle in [0, kDutyMax]
    bool enabled = true;
};

/// Time derivative of the averaged boost state.
struct PlantDerivative {
    double di_ind_dt = 0.0;
    double dv_out_dt = 0.0;
};

/// di/dt = (v_in - (1-duty) v_out) / L,  dv/dt = ((1-duty) i_ind - i_out) / C.
PlantDerivative boost_derivative(const ConverterParams& params, double i_ind, double v_out,
                                 double duty, double i_out);

inline constexpr double kDutyMax = 0.98;
/// Clamp on the outer loop's current reference, in multiples of i_rated.
inline constexpr double kCurrentRefSafetyFactor = 1.6;
/// Clamp on the inductor current state, in multiples of i_rated.
inline constexpr double kInductorCurrentSafetyFactor = 2.0;

/// One boost converter with its primary control loops.
///
/// control_step() runs once per control period (zero-order hold on the duty
/// between updates); plant_step() integrates the averaged dynamics with RK4
/// over substeps no longer than the control period.
class Converter {
public:
    Converter(ConverterParams params, PiGains voltage_gains, PiGains current_gains);

    /// Advances both PI loops against v_ref and returns the new duty command.
    /// A disabled converter returns duty 0 without touching the integrators.
    double control_step(double v_ref, double dt);

    /// Integrates the plant over dt with the output current held at i_out.
    /// A disabled converter keeps i_ind = 0 and discharges only through i_out.
    void plant_step(double i_out, double dt);

    /// Pre-charges the terminal to v0 with zero current and fresh integrators.
    void reset(double v0);

    void set_enabled(bool enabled);

    const ConverterParams& params() const { return params_; }
    const ConverterState& state() const { return state_; }
    double v_out() const { return state_.v_out; }
    double i_ind() const { return state_.i_ind; }
    double duty() const { return state_.duty; }
    bool enabled() const { return state_.enabled; }
    /// Inductor current reference issued by the last control_step.
    double last_current_ref() const { return last_current_ref_; }
    const PiController& voltage_loop() const { return voltage_loop_; }
    const PiController& current_loop() const { return current_loop_; }

private:
    void step_averaged(double i_out, double dt);
    void step_ideal(double i_out, double dt);

    ConverterParams params_;
    PiController voltage_loop_; ///< volts error -> inductor current reference
    PiController current_loop_; ///< amperes error -> switch-node voltage command
    ConverterState state_;
    double v_ref_latched_ = 0.0;
    double last_current_ref_ = 0.0;
};

} // namespace mgsim
