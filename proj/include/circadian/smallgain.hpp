#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "circadian/characteristics.hpp"
#include "circadian/model.hpp"

namespace circadian {

// Outcome of the discrete iteration u_{k+1} = F(u_k) of the composed
// characteristic. Because F is continuous and strictly decreasing, the even
// and odd subsequences are each monotone, so convergence to a fixed point or
// to a two-cycle are the only limit behaviors the classifier needs.
struct SpiderwebVerdict {
    enum class Kind { Converged, TwoCycle, MaxIterReached };
    Kind kind = Kind::MaxIterReached;
    double u_star = 0;        // Converged
    std::size_t iterations = 0;
    double lo = 0, hi = 0;    // TwoCycle, lo < hi
};

struct SpiderwebTrace {
    std::vector<double> iterates;  // u0, F(u0), F(F(u0)), ...
    // Cobweb path for plotting: (u, F(u)) then (F(u), F(u)) per step.
    std::vector<std::pair<double, double>> segments;
    SpiderwebVerdict verdict;
};

// F(u) = PN component of char_per(ks * char_mrna(u)). Strictly decreasing
// (decreasing mRNA characteristic composed with the increasing PER cascade).
double composed_map(double u, const ModelParams& p);

// Runs the discrete iteration from u0. Converged when successive iterates
// differ by < tol; TwoCycle when the even and odd subsequences have each
// settled (successive difference < tol) at limits separated by more than
// 10*tol, which distinguishes a genuine cycle from slow convergence.
SpiderwebTrace iterate_spiderweb(double u0, const ModelParams& p,
                                 std::size_t max_iter = 500,
                                 double tol = 1e-9);

// Fixed point of F by bisection on F(u) - u over [0, F(0)]; F decreasing
// guarantees the bracket. Returns the full closed-loop equilibrium assembled
// from the two characteristics. Throws NoBracket if the sign conditions fail.
FullState closed_loop_equilibrium(const ModelParams& p, double tol = 1e-10);

enum class GainVerdict { Stable, Unstable, Inconclusive };

// Stable iff every seed converges to a common fixed point (within 10*tol);
// Unstable if any seed produces a two-cycle; Inconclusive on MaxIterReached.
GainVerdict small_gain_verdict(const ModelParams& p,
                               const std::vector<double>& seeds,
                               std::size_t max_iter = 500, double tol = 1e-9);

inline const std::vector<double>& default_seeds() {
    static const std::vector<double> s = {0.0, 0.25, 0.5, 1.0, 2.0};
    return s;
}

}  // namespace circadian
