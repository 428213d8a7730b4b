#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circadian/model.hpp"

namespace circadian {

// Effective run configuration. Precedence: built-in table defaults, then the
// JSON config file, then command-line flags. The resolved configuration is
// echoed alongside every output so runs are reproducible from the echo alone.
struct RunConfig {
    ModelParams params;
    double mbar = 2.45;

    // Numeric knobs.
    double h = 0.01;
    double tol = 1e-9;
    double t_end = 1000.0;
    std::size_t max_iter = 500;
    double delay = 0.0;
    double transient_cut = 0.0;
    double u0 = 0.0;
    std::array<double, 5> init = {0.2, 0.2, 0.2, 0.2, 0.2};
    std::vector<double> seeds = {0.0, 0.25, 0.5, 1.0, 2.0};
    std::size_t stride = 1;
};

// Flag overrides collected by the CLI; only the flags the user actually set.
struct ConfigOverrides {
    std::optional<double> vs, h, tol, t_end, delay, transient_cut, u0;
    std::optional<std::size_t> max_iter, stride;
    std::optional<std::string> init;  // scalar or five comma-separated values
};

// Loads the flat JSON config (all keys optional, unknown keys rejected) and
// applies the flag overrides on top. Throws UsageError naming the offending
// key or value.
RunConfig parse_config(const std::optional<std::string>& file,
                       const ConfigOverrides& overrides);

// Serializes the fully resolved configuration as a flat JSON object; feeding
// it back through parse_config reproduces the run bit-identically.
std::string config_echo(const RunConfig& cfg);

}  // namespace circadian
