#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circadian/characteristics.hpp"
#include "circadian/config.hpp"
#include "circadian/csv.hpp"
#include "circadian/integrate.hpp"
#include "circadian/model.hpp"
#include "circadian/smallgain.hpp"
#include "circadian/svg.hpp"

namespace {

using namespace circadian;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;   // analysis says "condition fails"
constexpr int kExitNumerical = 3;  // NonFinite, NoBracket, NotConverged, ...

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write to " + path);
    out << content;
}

// Effective-config echo: next to --out when given, else to stdout.
void echo_config(const RunConfig& cfg, const std::string& out_path) {
    const std::string echo = config_echo(cfg);
    if (!out_path.empty())
        write_file(out_path + ".config.json", echo + "\n");
    else
        std::cout << "# effective config\n" << echo << "\n";
}

void print_ineq(const char* name, const Inequality& q, const char* op) {
    std::cout << "  " << name << ": " << q.lhs << ' ' << op << ' ' << q.rhs
              << "  -> " << (q.ok ? "true" : "FALSE") << '\n';
}

int cmd_check(const RunConfig& cfg, const std::string& out_path) {
    echo_config(cfg, out_path);
    const double c_max = cfg.params.ks * cfg.mbar;
    const auto cond = check_proposition_conditions(cfg.params, c_max);
    const auto space = check_state_space(cfg.params, cfg.mbar);

    std::cout << "Equilibrium conditions (c_max = ks*mbar = " << c_max << "):\n";
    print_ineq("C1  (vd+V2 < V1)     ", cond.c1, "<");
    print_ineq("C2  (V1+V4 < V2+V3)  ", cond.c2, "<");
    print_ineq("C3  (c_max < vd)     ", cond.c3, "<");
    print_ineq("C4  (vd+V4 < V3)     ", cond.c4, "<");
    print_ineq("C1' (c_max+V2 < V1)  ", cond.c1p, "<");
    std::cout << "  overall: " << (cond.overall ? "PASS" : "FAIL") << "\n";

    std::cout << "State-space constraints (mbar = " << cfg.mbar << "):\n";
    print_ineq("vs <= 0.54           ", space.vs_bound, "<=");
    print_ineq("vs < vm              ", space.vs_lt_vm, "<");
    print_ineq("vs*km/(vm-vs) <= mbar", space.mbar_lower, "<=");
    print_ineq("mbar < vd/ks         ", space.mbar_upper, "<");
    std::cout << "  overall: " << (space.overall ? "PASS" : "FAIL") << "\n";

    return (cond.overall && space.overall) ? kExitOk : kExitNegative;
}

int cmd_char(const RunConfig& cfg, const std::string& system,
             const std::string& out_path) {
    echo_config(cfg, out_path);
    std::vector<double> inputs, values;
    if (system == "mrna") {
        const int npts = 121;
        for (int i = 0; i < npts; ++i) {
            const double u = 3.0 * i / (npts - 1);
            inputs.push_back(u);
            values.push_back(char_mrna(u, cfg.params));
        }
    } else if (system == "per") {
        const double c_max = cfg.params.ks * cfg.mbar;
        const int npts = 121;
        for (int i = 0; i < npts; ++i) {
            const double c = c_max * i / (npts - 1);
            inputs.push_back(c);
            values.push_back(char_per(c, cfg.params).PN);
        }
    } else {
        throw UsageError("--system must be mrna or per, got '" + system + "'");
    }
    std::ostringstream csv;
    write_characteristic_csv(csv, inputs, values);
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    return kExitOk;
}

int cmd_spiderweb(const RunConfig& cfg, const std::string& out_path,
                  const std::string& svg_path) {
    echo_config(cfg, out_path);
    const auto trace =
        iterate_spiderweb(cfg.u0, cfg.params, cfg.max_iter, cfg.tol);
    std::ostringstream csv;
    write_spiderweb_csv(csv, trace);
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    if (!svg_path.empty())
        write_file(svg_path, render_cobweb_svg(cfg.params, trace));

    switch (trace.verdict.kind) {
        case SpiderwebVerdict::Kind::Converged:
            std::cout << "verdict: converged u* = " << trace.verdict.u_star
                      << " after " << trace.verdict.iterations
                      << " iterations\n";
            return kExitOk;
        case SpiderwebVerdict::Kind::TwoCycle:
            std::cout << "verdict: two-cycle {" << trace.verdict.lo << ", "
                      << trace.verdict.hi << "}\n";
            return kExitNegative;
        case SpiderwebVerdict::Kind::MaxIterReached:
        default:
            std::cout << "verdict: max iterations reached\n";
            return kExitNumerical;
    }
}

int cmd_equilibrium(const RunConfig& cfg, const std::string& out_path) {
    echo_config(cfg, out_path);
    const FullState eq = closed_loop_equilibrium(cfg.params, cfg.tol);
    std::ostringstream csv;
    csv << "M,P0,P1,P2,PN\n"
        << format_full(eq.M) << ',' << format_full(eq.P0) << ','
        << format_full(eq.P1) << ',' << format_full(eq.P2) << ','
        << format_full(eq.PN) << '\n';
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, const std::string& mode,
                 const std::string& out_path) {
    echo_config(cfg, out_path);
    const FullState x0(cfg.init[0], cfg.init[1], cfg.init[2], cfg.init[3],
                       cfg.init[4]);
    Trajectory traj;
    if (mode == "ode") {
        traj = integrate_ode(x0, cfg.params, cfg.t_end, cfg.h);
    } else if (mode == "dde") {
        traj = integrate_dde(x0, cfg.params, cfg.delay, cfg.t_end, cfg.h);
    } else {
        throw UsageError("--mode must be ode or dde, got '" + mode + "'");
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write to " + out_path);
        write_trajectory_csv(out, traj, cfg.stride);
    }
    const auto m = oscillation_metrics(traj, cfg.transient_cut);
    std::cout << "amplitude (M,P0,P1,P2,PN):";
    for (double a : m.amplitude) std::cout << ' ' << a;
    std::cout << '\n';
    if (m.period)
        std::cout << "period: " << *m.period << " h (stddev " << m.period_stddev
                  << ", " << m.cycles << " cycles)\n";
    else
        std::cout << "period: not detected (fewer than two peaks)\n";
    return kExitOk;
}

struct SweepRow {
    double vs, delay;
    std::string verdict;
    double value = 0;        // equilibrium PN or trailing PN amplitude
    std::string period;
};

int cmd_sweep(const RunConfig& cfg, const std::string& vs_list,
              const std::string& delay_list, unsigned threads,
              const std::string& out_path) {
    echo_config(cfg, out_path);
    auto parse_list = [](const std::string& s, const char* flag) {
        std::vector<double> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                out.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw UsageError(std::string("bad value '") + tok + "' in " +
                                 flag);
            }
        }
        if (out.empty()) throw UsageError(std::string(flag) + " is empty");
        return out;
    };
    const auto vs_values = parse_list(vs_list, "--vs-list");
    const auto delays = parse_list(delay_list, "--delay-list");

    std::vector<std::pair<double, double>> grid;
    for (double vs : vs_values)
        for (double d : delays) grid.emplace_back(vs, d);
    std::vector<SweepRow> rows(grid.size());

    if (const char* env = std::getenv("CIRCADIAN_THREADS"))
        threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < grid.size();
             i = next.fetch_add(1)) {
            const auto [vs, delay] = grid[i];
            SweepRow row;
            row.vs = vs;
            row.delay = delay;
            ModelParams p = cfg.params;
            p.vs = vs;
            try {
                const auto verdict =
                    small_gain_verdict(p, cfg.seeds, cfg.max_iter, cfg.tol);
                if (verdict == GainVerdict::Stable) {
                    row.verdict = "stable";
                    row.value = closed_loop_equilibrium(p, cfg.tol).PN;
                } else {
                    row.verdict = verdict == GainVerdict::Unstable
                                      ? "unstable"
                                      : "inconclusive";
                    const FullState x0(cfg.init[0], cfg.init[1], cfg.init[2],
                                       cfg.init[3], cfg.init[4]);
                    const auto traj =
                        integrate_dde(x0, p, delay, cfg.t_end, cfg.h);
                    const auto m =
                        oscillation_metrics(traj, 0.75 * cfg.t_end);
                    row.value = m.amplitude[4];
                    if (m.period) row.period = format_full(*m.period);
                }
            } catch (const AnalysisError& e) {
                row.verdict = std::string("error: ") + e.what();
            }
            rows[i] = row;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "vs,delay,verdict,PN_eq_or_amp,period\n";
    for (const auto& r : rows)
        csv << format_short(r.vs) << ',' << format_short(r.delay) << ','
            << r.verdict << ',' << format_full(r.value) << ',' << r.period
            << '\n';
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else
        std::cout << csv.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circadian oscillator: characteristics, small-gain analysis "
                 "and simulation"};
    app.require_subcommand(1);

    std::string config_file, out_path, svg_path, system = "mrna",
                mode = "ode", vs_list = "0.4,0.5,0.76", delay_list = "0,100";
    unsigned threads = 0;
    ConfigOverrides ov;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_file, "JSON config file");
        sub->add_option("--vs", ov.vs, "transcription rate override");
        sub->add_option("--delay", ov.delay, "feedback delay tau (h)");
        sub->add_option("--t-end", ov.t_end, "simulation horizon (h)");
        sub->add_option("--dt", ov.h, "integration step (h)");
        sub->add_option("--init", ov.init,
                        "initial state: one value or five comma-separated");
        sub->add_option("--u0", ov.u0, "spiderweb seed");
        sub->add_option("--max-iter", ov.max_iter, "iteration cap");
        sub->add_option("--tol", ov.tol, "tolerance");
        sub->add_option("--transient-cut", ov.transient_cut,
                        "discard t <= cut for metrics (h)");
        sub->add_option("--stride", ov.stride, "CSV decimation stride");
        sub->add_option("--out", out_path, "output CSV path");
        return sub;
    };

    auto* c_check = add_common(app.add_subcommand(
        "check", "evaluate the stability and state-space inequalities"));
    auto* c_char = add_common(
        app.add_subcommand("char", "tabulate a subsystem characteristic"));
    c_char->add_option("--system", system, "mrna or per");
    auto* c_spider = add_common(app.add_subcommand(
        "spiderweb", "run the discrete iteration of the composed map"));
    c_spider->add_option("--svg", svg_path, "write a cobweb SVG here");
    auto* c_eq = add_common(
        app.add_subcommand("equilibrium", "closed-loop equilibrium"));
    auto* c_sim = add_common(
        app.add_subcommand("simulate", "integrate the closed loop"));
    c_sim->add_option("--mode", mode, "ode or dde");
    auto* c_sweep = add_common(app.add_subcommand(
        "sweep", "classify a (vs, delay) grid"));
    c_sweep->add_option("--vs-list", vs_list, "comma-separated vs values");
    c_sweep->add_option("--delay-list", delay_list,
                        "comma-separated delays (h)");
    c_sweep->add_option("--threads", threads,
                        "worker threads (0 = hardware, env CIRCADIAN_THREADS "
                        "overrides)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        const RunConfig cfg = parse_config(
            config_file.empty() ? std::nullopt
                                : std::make_optional(config_file),
            ov);
        if (c_check->parsed()) return cmd_check(cfg, out_path);
        if (c_char->parsed()) return cmd_char(cfg, system, out_path);
        if (c_spider->parsed()) return cmd_spiderweb(cfg, out_path, svg_path);
        if (c_eq->parsed()) return cmd_equilibrium(cfg, out_path);
        if (c_sim->parsed()) return cmd_simulate(cfg, mode, out_path);
        if (c_sweep->parsed())
            return cmd_sweep(cfg, vs_list, delay_list, threads, out_path);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const AnalysisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
