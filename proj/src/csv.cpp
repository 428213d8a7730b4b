#include "circadian/csv.hpp"

#include <charconv>
#include <cstdio>

namespace circadian {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          std::size_t stride) {
    if (stride == 0) stride = 1;
    out << "t,M,P0,P1,P2,PN\n";
    const std::size_t n = traj.times.size();
    for (std::size_t i = 0; i < n; i += stride) {
        const auto& s = traj.states[i];
        out << format_full(traj.times[i]) << ',' << format_full(s.M) << ','
            << format_full(s.P0) << ',' << format_full(s.P1) << ','
            << format_full(s.P2) << ',' << format_full(s.PN) << '\n';
    }
    if (n != 0 && (n - 1) % stride != 0) {
        const auto& s = traj.states[n - 1];
        out << format_full(traj.times[n - 1]) << ',' << format_full(s.M) << ','
            << format_full(s.P0) << ',' << format_full(s.P1) << ','
            << format_full(s.P2) << ',' << format_full(s.PN) << '\n';
    }
}

void write_characteristic_csv(std::ostream& out,
                              const std::vector<double>& inputs,
                              const std::vector<double>& values) {
    out << "u,value\n";
    for (std::size_t i = 0; i < inputs.size(); ++i)
        out << format_full(inputs[i]) << ',' << format_full(values[i]) << '\n';
}

void write_spiderweb_csv(std::ostream& out, const SpiderwebTrace& trace) {
    out << "step,u,F_u\n";
    for (std::size_t k = 0; k + 1 < trace.iterates.size(); ++k)
        out << k << ',' << format_full(trace.iterates[k]) << ','
            << format_full(trace.iterates[k + 1]) << '\n';
}

}  // namespace circadian
