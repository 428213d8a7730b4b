#include "circadian/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace circadian {

namespace {

using Vec5 = std::array<double, 5>;

Vec5 axpy(const Vec5& x, double a, const Vec5& d) {
    Vec5 r;
    for (std::size_t i = 0; i < 5; ++i) r[i] = x[i] + a * d[i];
    return r;
}

void check_finite(const Vec5& x, double t) {
    for (double v : x)
        if (!std::isfinite(v))
            throw NonFinite("state became non-finite at t = " +
                            std::to_string(t) + " (step too large?)");
}

FullState make_state(const Vec5& a) {
    FullState s;
    s.M = a[0];
    s.P0 = a[1];
    s.P1 = a[2];
    s.P2 = a[3];
    s.PN = a[4];
    return s;
}

Vec5 rhs_at(const Vec5& x, const ModelParams& p, double pn_feedback) {
    return rhs_full(make_state(x), p, pn_feedback);
}

}  // namespace

DelayHistory::DelayHistory(double initial_pn, double step)
    : initial_pn_(initial_pn), step_(step) {}

void DelayHistory::push(double pn, double dpn_dt) {
    values_.push_back(pn);
    derivatives_.push_back(dpn_dt);
}

double DelayHistory::at(double t) const {
    if (t <= 0.0) return initial_pn_;
    const double pos = t / step_;
    std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= values_.size()) {
        if (pos > static_cast<double>(values_.size() - 1) + 1e-9)
            throw UsageError("delay history queried past its last sample");
        return values_.back();
    }
    // Cubic Hermite on [i, i+1], matching RK4's local order.
    const double s = pos - static_cast<double>(i);
    const double v0 = values_[i], v1 = values_[i + 1];
    const double d0 = derivatives_[i] * step_, d1 = derivatives_[i + 1] * step_;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * v0 + (s3 - 2 * s2 + s) * d0 +
           (-2 * s3 + 3 * s2) * v1 + (s3 - s2) * d1;
}

Trajectory integrate_ode(const FullState& x0, const ModelParams& p,
                         double t_end, double h) {
    if (!(h > 0) || !(t_end >= h))
        throw UsageError("integrate_ode requires h > 0 and t_end >= h");
    const std::size_t nsteps = static_cast<std::size_t>(std::llround(t_end / h));
    Trajectory traj;
    traj.times.reserve(nsteps + 1);
    traj.states.reserve(nsteps + 1);
    Vec5 x = x0.to_array();
    traj.times.push_back(0.0);
    traj.states.push_back(make_state(x));
    for (std::size_t i = 0; i < nsteps; ++i) {
        const Vec5 k1 = rhs_at(x, p, x[4]);
        const Vec5 x2 = axpy(x, h / 2, k1);
        const Vec5 k2 = rhs_at(x2, p, x2[4]);
        const Vec5 x3 = axpy(x, h / 2, k2);
        const Vec5 k3 = rhs_at(x3, p, x3[4]);
        const Vec5 x4 = axpy(x, h, k3);
        const Vec5 k4 = rhs_at(x4, p, x4[4]);
        for (std::size_t j = 0; j < 5; ++j)
            x[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        const double t = static_cast<double>(i + 1) * h;
        check_finite(x, t);
        traj.times.push_back(t);
        traj.states.push_back(make_state(x));
    }
    return traj;
}

Trajectory integrate_dde(const FullState& x0, const ModelParams& p, double tau,
                         double t_end, double h) {
    if (tau == 0.0) return integrate_ode(x0, p, t_end, h);
    if (!(tau > 0)) throw UsageError("delay must be nonnegative");
    if (h > tau)
        throw UsageError("integrate_dde requires h <= tau (got h=" +
                         std::to_string(h) + ", tau=" + std::to_string(tau) +
                         ")");
    if (!(h > 0) || !(t_end >= h))
        throw UsageError("integrate_dde requires h > 0 and t_end >= h");

    const std::size_t nsteps = static_cast<std::size_t>(std::llround(t_end / h));
    Trajectory traj;
    traj.times.reserve(nsteps + 1);
    traj.states.reserve(nsteps + 1);
    Vec5 x = x0.to_array();
    DelayHistory hist(x0.PN, h);
    // dPN/dt does not involve the delayed term.
    auto dpn = [&](const Vec5& s) { return p.k1 * s[3] - p.k2 * s[4]; };
    hist.push(x[4], dpn(x));
    traj.times.push_back(0.0);
    traj.states.push_back(make_state(x));
    for (std::size_t i = 0; i < nsteps; ++i) {
        const double t = static_cast<double>(i) * h;
        // Stage times never exceed t + h, and tau >= h keeps every delayed
        // query inside the recorded history.
        const Vec5 k1 = rhs_at(x, p, hist.at(t - tau));
        const Vec5 x2 = axpy(x, h / 2, k1);
        const Vec5 k2 = rhs_at(x2, p, hist.at(t + h / 2 - tau));
        const Vec5 x3 = axpy(x, h / 2, k2);
        const Vec5 k3 = rhs_at(x3, p, hist.at(t + h / 2 - tau));
        const Vec5 x4 = axpy(x, h, k3);
        const Vec5 k4 = rhs_at(x4, p, hist.at(t + h - tau));
        for (std::size_t j = 0; j < 5; ++j)
            x[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
        const double tn = static_cast<double>(i + 1) * h;
        check_finite(x, tn);
        hist.push(x[4], dpn(x));
        traj.times.push_back(tn);
        traj.states.push_back(make_state(x));
    }
    return traj;
}

std::optional<std::vector<double>> steady_state(
    const std::vector<double>& x0,
    const std::function<std::vector<double>(const std::vector<double>&)>& rhs,
    double tol, double t_max, double h) {
    const std::size_t n = x0.size();
    auto sup_norm = [](const std::vector<double>& v) {
        double m = 0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    };
    std::vector<double> x = x0;
    double t = 0;
    while (true) {
        const auto f = rhs(x);
        for (double v : x)
            if (!std::isfinite(v))
                throw NonFinite("steady_state: non-finite state at t = " +
                                std::to_string(t));
        if (sup_norm(f) < tol) return x;
        if (t >= t_max) return std::nullopt;

        auto step = [&](const std::vector<double>& base, double a,
                        const std::vector<double>& d) {
            std::vector<double> r(n);
            for (std::size_t i = 0; i < n; ++i) r[i] = base[i] + a * d[i];
            return r;
        };
        const auto k1 = f;
        const auto k2 = rhs(step(x, h / 2, k1));
        const auto k3 = rhs(step(x, h / 2, k2));
        const auto k4 = rhs(step(x, h, k3));
        for (std::size_t i = 0; i < n; ++i)
            x[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        t += h;
    }
}

double OscillationMetrics::period_or_throw() const {
    if (!period)
        throw InsufficientData(
            "fewer than two peaks detected; cannot estimate a period");
    return *period;
}

OscillationMetrics oscillation_metrics(const Trajectory& traj,
                                       double transient_cut) {
    if (traj.times.empty()) throw UsageError("empty trajectory");
    if (!(transient_cut < traj.times.back()))
        throw UsageError("transient_cut must precede the final time");

    OscillationMetrics m;
    m.transient_cut = transient_cut;

    std::size_t start = 0;
    while (start < traj.times.size() && traj.times[start] <= transient_cut)
        ++start;
    if (start >= traj.times.size()) start = traj.times.size() - 1;

    std::array<double, 5> lo, hi;
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    for (std::size_t i = start; i < traj.states.size(); ++i) {
        const auto a = traj.states[i].to_array();
        for (std::size_t j = 0; j < 5; ++j) {
            lo[j] = std::min(lo[j], a[j]);
            hi[j] = std::max(hi[j], a[j]);
        }
    }
    for (std::size_t j = 0; j < 5; ++j) m.amplitude[j] = hi[j] - lo[j];

    // Peaks of M: strict local maxima above min + 0.25 * amplitude.
    const double threshold = lo[0] + 0.25 * m.amplitude[0];
    std::vector<double> peak_times;
    for (std::size_t i = std::max<std::size_t>(start, 1);
         i + 1 < traj.states.size(); ++i) {
        const double a = traj.states[i - 1].M;
        const double b = traj.states[i].M;
        const double c = traj.states[i + 1].M;
        if (b > a && b > c && b > threshold) peak_times.push_back(traj.times[i]);
    }
    if (peak_times.size() >= 2) {
        std::vector<double> gaps(peak_times.size() - 1);
        for (std::size_t i = 0; i + 1 < peak_times.size(); ++i)
            gaps[i] = peak_times[i + 1] - peak_times[i];
        double mean = 0;
        for (double g : gaps) mean += g;
        mean /= static_cast<double>(gaps.size());
        double var = 0;
        for (double g : gaps) var += (g - mean) * (g - mean);
        var /= static_cast<double>(gaps.size());
        m.period = mean;
        m.period_stddev = std::sqrt(var);
        m.cycles = gaps.size();
    }
    return m;
}

}  // namespace circadian
