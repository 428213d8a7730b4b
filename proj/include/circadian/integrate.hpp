#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "circadian/model.hpp"

namespace circadian {

// Fixed-step time series of the full system. Deterministic: identical inputs
// produce bit-identical trajectories.
struct Trajectory {
    std::vector<double> times;      // strictly increasing, uniform step
    std::vector<FullState> states;  // same length as times
};

// Dense record of PN over the trailing delay window: uniform grid samples of
// (value, derivative), interpolated with cubic Hermite so the delayed lookup
// matches the fourth-order stepping. Before t = 0 the history is the constant
// initial value.
class DelayHistory {
  public:
    DelayHistory(double initial_pn, double step);

    void push(double pn, double dpn_dt);
    // PN at absolute time t; t must not exceed the last stored sample time.
    double at(double t) const;

  private:
    double initial_pn_;
    double step_;
    std::vector<double> values_;       // values_[i] = PN(i * step_)
    std::vector<double> derivatives_;
};

// Peak-to-peak amplitudes and period statistics of a trajectory after an
// initial transient is discarded.
struct OscillationMetrics {
    std::array<double, 5> amplitude{};  // per component M, P0, P1, P2, PN
    std::optional<double> period;       // mean spacing of M maxima (h)
    double period_stddev = 0;           // per-cycle standard deviation
    std::size_t cycles = 0;             // number of inter-peak intervals
    double transient_cut = 0;

    // Period when one was detected; throws InsufficientData otherwise.
    double period_or_throw() const;
};

// Classical fixed-step RK4 on the closed loop (feedback read from the current
// state). Throws NonFinite if a component leaves the representable range,
// which signals a too-large step.
Trajectory integrate_ode(const FullState& x0, const ModelParams& p,
                         double t_end, double h);

// Method of steps for the delayed loop: RK4 where the dM/dt equation reads
// PN(t - tau) from the interpolated history. Initial history is constant at
// x0.PN. Requires h <= tau; tau = 0 falls back to integrate_ode.
Trajectory integrate_dde(const FullState& x0, const ModelParams& p, double tau,
                         double t_end, double h);

// Generic steady-state search: integrates dx/dt = rhs(x) with RK4 until the
// sup norm of the right-hand side drops below tol. Returns nullopt if t_max
// is reached first.
std::optional<std::vector<double>> steady_state(
    const std::vector<double>& x0,
    const std::function<std::vector<double>(const std::vector<double>&)>& rhs,
    double tol = 1e-9, double t_max = 1e4, double h = 0.01);

// Peak-to-peak amplitude per component and period statistics from the maxima
// of M, counting strict local maxima above min + 0.25 * amplitude. With fewer
// than two peaks the period is absent; amplitude fields are always filled.
OscillationMetrics oscillation_metrics(const Trajectory& traj,
                                       double transient_cut);

}  // namespace circadian
