#pragma once

#include <ostream>
#include <string>

#include "circadian/integrate.hpp"
#include "circadian/smallgain.hpp"

namespace circadian {

// Trajectory CSV: header t,M,P0,P1,P2,PN, one row per retained step, full
// precision scientific notation. stride > 1 decimates (the first and last
// rows are always kept).
void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          std::size_t stride = 1);

// Characteristic CSV: header u,value.
void write_characteristic_csv(std::ostream& out,
                              const std::vector<double>& inputs,
                              const std::vector<double>& values);

// Spiderweb CSV: header step,u,F_u.
void write_spiderweb_csv(std::ostream& out, const SpiderwebTrace& trace);

// Full 17-digit form, for data columns that must round-trip exactly.
std::string format_full(double v);

// Shortest representation that still round-trips, for label-like columns
// (sweep grid coordinates).
std::string format_short(double v);

}  // namespace circadian
