#include "mgsim/converter.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgsim {

void ConverterParams::validate() const {
    if (!(v_in > 0.0)) throw std::invalid_argument("converter: v_in must be > 0");
    if (!(inductance > 0.0)) throw std::invalid_argument("converter: inductance must be > 0");
    if (!(capacitance > 0.0)) throw std::invalid_argument("converter: capacitance must be > 0");
    if (!(control_period > 0.0)) throw std::invalid_argument("converter: control_period must be > 0");
    if (!(i_rated > 0.0)) throw std::invalid_argument("converter: i_rated must be > 0");
    if (model == ConverterModel::AveragedBoost && !(v_rated > v_in))
        throw std::invalid_argument("converter: v_rated must exceed v_in for the boost topology");
    if (model == ConverterModel::IdealSource && !(ideal_tau > 0.0))
        throw std::invalid_argument("converter: ideal_tau must be > 0");
}

PlantDerivative boost_derivative(const ConverterParams& params, double i_ind, double v_out,
                                 double duty, double i_out) {
    const double off = 1.0 - duty;
    return {
        (params.v_in - off * v_out) / params.inductance,
        (off * i_ind - i_out) / params.capacitance,
    };
}

Converter::Converter(ConverterParams params, PiGains voltage_gains, PiGains current_gains)
    : params_(params),
      voltage_loop_(voltage_gains, -kCurrentRefSafetyFactor * params.i_rated,
                    kCurrentRefSafetyFactor * params.i_rated),
      current_loop_(current_gains, -params.v_rated, params.v_rated) {
    params_.validate();
    reset(params_.v_rated);
}

void Converter::reset(double v0) {
    state_ = ConverterState{};
    state_.v_out = v0;
    v_ref_latched_ = v0;
    last_current_ref_ = 0.0;
    voltage_loop_.reset();
    current_loop_.reset();
}

void Converter::set_enabled(bool enabled) {
    state_.enabled = enabled;
    if (!enabled) {
        state_.i_ind = 0.0;
        state_.duty = 0.0;
    }
}

double Converter::control_step(double v_ref, double dt) {
    if (!state_.enabled) {
        state_.duty = 0.0;
        return 0.0;
    }
    v_ref_latched_ = v_ref;
    if (params_.model == ConverterModel::IdealSource) return state_.duty;

    const double i_ref = voltage_loop_.step(v_ref - state_.v_out, dt);
    last_current_ref_ = i_ref;
    // The current loop commands the volt-seconds applied to the inductor;
    // the duty realizing that command is d = 1 - (v_in - w) / v_out.
    const double w = current_loop_.step(i_ref - state_.i_ind, dt);
    const double v_sense = std::max(state_.v_out, 1e-3);
    state_.duty = std::clamp(1.0 - (params_.v_in - w) / v_sense, 0.0, kDutyMax);
    return state_.duty;
}

void Converter::plant_step(double i_out, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("plant_step: dt must be > 0");
    if (!state_.enabled) {
        state_.i_ind = 0.0;
        state_.duty = 0.0;
        state_.v_out = std::max(state_.v_out - dt * i_out / params_.capacitance, 0.0);
        return;
    }
    if (params_.model == ConverterModel::IdealSource) step_ideal(i_out, dt);
    else step_averaged(i_out, dt);
}

void Converter::step_averaged(double i_out, double dt) {
    const double duty = state_.duty;
    const auto k1 = boost_derivative(params_, state_.i_ind, state_.v_out, duty, i_out);
    const auto k2 = boost_derivative(params_, state_.i_ind + 0.5 * dt * k1.di_ind_dt,
                                     state_.v_out + 0.5 * dt * k1.dv_out_dt, duty, i_out);
    const auto k3 = boost_derivative(params_, state_.i_ind + 0.5 * dt * k2.di_ind_dt,
                                     state_.v_out + 0.5 * dt * k2.dv_out_dt, duty, i_out);
    const auto k4 = boost_derivative(params_, state_.i_ind + dt * k3.di_ind_dt,
                                     state_.v_out + dt * k3.dv_out_dt, duty, i_out);
    state_.i_ind += dt / 6.0 *
                    (k1.di_ind_dt + 2.0 * k2.di_ind_dt + 2.0 * k3.di_ind_dt + k4.di_ind_dt);
    state_.v_out += dt / 6.0 *
                    (k1.dv_out_dt + 2.0 * k2.dv_out_dt + 2.0 * k3.dv_out_dt + k4.dv_out_dt);

    const double i_limit = kInductorCurrentSafetyFactor * params_.i_rated;
    state_.i_ind = std::clamp(state_.i_ind, -i_limit, i_limit);
    state_.v_out = std::max(state_.v_out, 0.0);
}

void Converter::step_ideal(double i_out, double dt) {
    state_.v_out += dt * (v_ref_latched_ - state_.v_out) / params_.ideal_tau;
    state_.v_out = std::max(state_.v_out, 0.0);
    // Boost-equilibrium proxies so both models report comparable internals.
    state_.duty = std::clamp(1.0 - params_.v_in / std::max(state_.v_out, params_.v_in), 0.0, kDutyMax);
    state_.i_ind = i_out / (1.0 - state_.duty);
}

} // namespace mgsim
