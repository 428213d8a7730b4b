// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "circadian/characteristics.hpp"
#include "circadian/integrate.hpp"
#include "circadian/model.hpp"
#include "circadian/smallgain.hpp"

using namespace circadian;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = {}) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
              << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

ModelParams with_vs(double vs) {
    ModelParams p;
    p.vs = vs;
    return p;
}

double state_dist(const FullState& a, const FullState& b) {
    double m = 0;
    const auto x = a.to_array(), y = b.to_array();
    for (int i = 0; i < 5; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

void criterion1_conditions() {
    const ModelParams p;  // full table
    const double c_max = p.ks * 2.45;
    const auto cond = check_proposition_conditions(p, c_max);
    const auto near = [](double a, double b) { return std::abs(a - b) < 1e-9; };
    const bool sides_ok =
        near(cond.c1.lhs, 2.53) && near(cond.c1.rhs, 3.2) &&
        near(cond.c2.lhs, 5.7) && near(cond.c2.rhs, 6.58) &&
        near(cond.c4.lhs, 3.45) && near(cond.c4.rhs, 5.0) &&
        near(cond.c3.lhs, 0.931) && near(cond.c3.rhs, 0.95);
    report(1, "condition suite all true with table parameters",
           cond.overall && sides_ok);
}

void criterion2_characteristics() {
    bool ok = true;
    std::ostringstream detail;

    const ModelParams p4 = with_vs(0.4);
    double worst_m = 0;
    for (int i = 0; i <= 50 && ok; ++i) {
        const double u1 = 3.0 * i / 50.0;
        auto rhs = [&](const std::vector<double>& x) {
            return std::vector<double>{rhs_mrna(x[0], u1, p4)};
        };
        const auto r = steady_state({0.0}, rhs, 1e-10, 1e4, 0.02);
        if (!r) { ok = false; break; }
        worst_m = std::max(worst_m, std::abs((*r)[0] - char_mrna(u1, p4)));
    }
    if (worst_m >= 1e-5) ok = false;

    const ModelParams pt;  // table, for the PER cascade
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dist(0.0, 5.0);
    double worst_p = 0;
    for (int ic = 0; ic <= 20 && ok; ++ic) {
        const double c = 0.9 * ic / 20.0;
        const PerState eq = char_per(c, pt);
        for (int t = 0; t < 10; ++t) {
            std::vector<double> x0 = {dist(rng), dist(rng), dist(rng),
                                      dist(rng)};
            auto rhs = [&](const std::vector<double>& x) {
                const auto d =
                    rhs_per(PerState(std::max(x[0], 0.0), std::max(x[1], 0.0),
                                     std::max(x[2], 0.0), std::max(x[3], 0.0)),
                            c, pt);
                return std::vector<double>(d.begin(), d.end());
            };
            const auto r = steady_state(x0, rhs, 1e-9, 2e4, 0.05);
            if (!r) { ok = false; break; }
            const auto e = eq.to_array();
            for (int j = 0; j < 4; ++j)
                worst_p = std::max(worst_p, std::abs((*r)[j] - e[j]));
        }
    }
    if (worst_p >= 1e-5) ok = false;
    detail << "max mRNA err " << worst_m << ", max PER err " << worst_p;
    report(2, "closed-form characteristics match simulation steady states", ok,
           detail.str());
}

void criterion3_stable_regime() {
    const ModelParams p = with_vs(0.4);
    bool ok = true;
    std::ostringstream detail;

    // Spiderweb: all default seeds converge to a common limit.
    double u_star = -1;
    for (double seed : default_seeds()) {
        const auto trace = iterate_spiderweb(seed, p, 500, 1e-9);
        if (trace.verdict.kind != SpiderwebVerdict::Kind::Converged) {
            ok = false;
            break;
        }
        if (u_star < 0)
            u_star = trace.verdict.u_star;
        else if (std::abs(trace.verdict.u_star - u_star) > 1e-8)
            ok = false;
    }

    // Closed-loop ODE from 10 random initial states.
    const FullState eq = closed_loop_equilibrium(p, 1e-12);
    std::mt19937 rng(202);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double worst = 0;
    for (int t = 0; t < 10 && ok; ++t) {
        const FullState x0(u01(rng) * 2.45, u01(rng) * 5, u01(rng) * 5,
                           u01(rng) * 5, u01(rng) * 5);
        const auto traj = integrate_ode(x0, p, 1000.0, 0.01);
        worst = std::max(worst, state_dist(traj.states.back(), eq));
    }
    if (worst >= 1e-4) ok = false;

    // DDE with delays 10 and 100: trailing 500 h amplitude below 1e-3.
    for (double tau : {10.0, 100.0}) {
        if (!ok) break;
        const auto traj = integrate_dde(FullState(0.2, 0.2, 0.2, 0.2, 0.2), p,
                                        tau, 2000.0, 0.05);
        const auto m = oscillation_metrics(traj, 1500.0);
        for (double a : m.amplitude)
            if (a >= 1e-3) ok = false;
    }
    detail << "u* " << u_star << ", worst ODE dist " << worst;
    report(3, "vs=0.4: spiderweb, ODE and delayed loop all stable", ok,
           detail.str());
}

void criterion4_unstable_iteration() {
    const ModelParams p = with_vs(0.5);
    bool ok = true;
    for (double seed : default_seeds()) {
        const auto trace = iterate_spiderweb(seed, p, 500, 1e-9);
        if (trace.verdict.kind != SpiderwebVerdict::Kind::TwoCycle) ok = false;
    }
    const double u = closed_loop_equilibrium(p, 1e-12).PN;
    const double h = 1e-6;
    const double dF =
        (composed_map(u + h, p) - composed_map(u - h, p)) / (2 * h);
    if (!(std::abs(dF) > 1.0)) ok = false;
    std::ostringstream detail;
    detail << "|dF/du| = " << std::abs(dF);
    report(4, "vs=0.5: every seed yields a two-cycle and |dF/du| > 1", ok,
           detail.str());
}

void criterion5_delay_oscillation() {
    const ModelParams p = with_vs(0.5);
    const auto traj = integrate_dde(FullState(0.2, 0.2, 0.2, 0.2, 0.2), p,
                                    100.0, 2000.0, 0.05);
    const auto m = oscillation_metrics(traj, 1500.0);
    bool ok = m.amplitude[0] > 0.1;
    std::ostringstream detail;
    detail << "M amplitude " << m.amplitude[0];
    if (!m.period) {
        ok = false;
    } else {
        detail << ", period " << *m.period << " h, rel stddev "
               << m.period_stddev / *m.period;
        if (!(m.period_stddev < 0.02 * *m.period)) ok = false;
    }
    report(5, "vs=0.5, tau=100: sustained regular oscillation", ok,
           detail.str());
}

void criterion6_goldbeter_limit_cycle() {
    const auto traj = integrate_ode(FullState(0.2, 0.2, 0.2, 0.2, 0.2),
                                    ModelParams{}, 500.0, 0.01);
    const auto m = oscillation_metrics(traj, 200.0);
    bool ok = m.amplitude[0] > 0.5 && m.period.has_value();
    std::ostringstream detail;
    if (m.period) {
        detail << "period " << *m.period << " h";
        if (std::abs(*m.period - 24.0) > 0.2 * 24.0) ok = false;
    }
    report(6, "vs=0.76: limit cycle with a roughly 24 h period", ok,
           detail.str());
}

void criterion7_numerics() {
    bool ok = true;
    std::ostringstream detail;

    const ModelParams p4 = with_vs(0.4);
    const FullState x0(0.2, 0.2, 0.2, 0.2, 0.2);
    const FullState ref = integrate_ode(x0, p4, 10.0, 1e-4).states.back();
    const double e2 =
        state_dist(integrate_ode(x0, p4, 10.0, 0.02).states.back(), ref);
    const double e1 =
        state_dist(integrate_ode(x0, p4, 10.0, 0.01).states.back(), ref);
    const double ratio = e2 / e1;
    detail << "RK4 ratio " << ratio;
    if (!(ratio > 12.0 && ratio < 20.0)) ok = false;

    const ModelParams p5 = with_vs(0.5);
    const auto ode = integrate_ode(x0, p5, 50.0, 0.01);
    const auto dde = integrate_dde(x0, p5, 0.01, 50.0, 0.01);
    double gap = 0;
    for (std::size_t i = 0; i < ode.states.size(); ++i)
        gap = std::max(gap, state_dist(ode.states[i], dde.states[i]));
    detail << ", DDE/ODE gap " << gap;
    if (!(gap < 1e-3)) ok = false;

    // Mass-balance residual at two step sizes: second-order decay.
    auto residual = [&](double h) {
        const auto traj = integrate_ode(x0, p5, 50.0, h);
        auto total = [&](std::size_t i) {
            const auto& s = traj.states[i];
            return s.P0 + s.P1 + s.P2 + s.PN;
        };
        double worst = 0;
        for (std::size_t i = 1; i + 1 < traj.states.size(); ++i) {
            const double ddt = (total(i + 1) - total(i - 1)) / (2 * h);
            const auto& s = traj.states[i];
            worst = std::max(
                worst,
                std::abs(ddt - (p5.ks * s.M - mm_rate(p5.vd, p5.kd, s.P2))));
        }
        return worst;
    };
    const double r1 = residual(0.02), r2 = residual(0.01);
    detail << ", mass-balance " << r1 << " -> " << r2;
    if (!(r1 < 10 * 0.02 * 0.02 && r2 < 10 * 0.01 * 0.01)) ok = false;

    // Determinism: re-running the CLI from its own config echo reproduces
    // the trajectory byte for byte.
    const auto dir = fs::temp_directory_path();
    const auto csv = (dir / "acc_traj.csv").string();
    const auto csv2 = (dir / "acc_traj2.csv").string();
    auto shell = [](const std::string& cmd) {
        return std::system((cmd + " > /dev/null 2>&1").c_str());
    };
    int rc = shell(std::string(CIRCADIAN_BIN) +
                   " simulate --mode dde --vs 0.5 --delay 100 --init 0.2 "
                   "--t-end 100 --dt 0.05 --out " + csv);
    rc |= shell(std::string(CIRCADIAN_BIN) + " simulate --mode dde --config " +
                csv + ".config.json --out " + csv2);
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const bool repro = rc == 0 && slurp(csv) == slurp(csv2) &&
                       !slurp(csv).empty();
    if (!repro) ok = false;
    detail << ", echo rerun " << (repro ? "identical" : "DIFFERS");

    report(7, "RK4 order, DDE limit, mass balance and reproducibility", ok,
           detail.str());
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion1_conditions();
    criterion2_characteristics();
    criterion3_stable_regime();
    criterion4_unstable_iteration();
    criterion5_delay_oscillation();
    criterion6_goldbeter_limit_cycle();
    criterion7_numerics();
    const auto secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << secs << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
