#include "circadian/smallgain.hpp"

#include <cmath>
#include <cstdlib>

namespace circadian {

double composed_map(double u, const ModelParams& p) {
    return char_per(p.ks * char_mrna(u, p), p).PN;
}

SpiderwebTrace iterate_spiderweb(double u0, const ModelParams& p,
                                 std::size_t max_iter, double tol) {
    if (!(u0 >= 0.0)) throw UsageError("spiderweb seed must be nonnegative");
    SpiderwebTrace trace;
    auto& us = trace.iterates;
    us.push_back(u0);
    for (std::size_t k = 0; k < max_iter; ++k) {
        const double u = us.back();
        const double fu = composed_map(u, p);
        trace.segments.emplace_back(u, fu);
        trace.segments.emplace_back(fu, fu);
        us.push_back(fu);

        if (std::abs(fu - u) < tol) {
            trace.verdict.kind = SpiderwebVerdict::Kind::Converged;
            trace.verdict.u_star = fu;
            trace.verdict.iterations = k + 1;
            return trace;
        }
        if (us.size() >= 5) {
            const std::size_t m = us.size();
            const double even_diff = std::abs(us[m - 1] - us[m - 3]);
            const double odd_diff = std::abs(us[m - 2] - us[m - 4]);
            if (even_diff < tol && odd_diff < tol &&
                std::abs(fu - u) > 10.0 * tol) {
                trace.verdict.kind = SpiderwebVerdict::Kind::TwoCycle;
                trace.verdict.lo = std::min(u, fu);
                trace.verdict.hi = std::max(u, fu);
                trace.verdict.iterations = k + 1;
                return trace;
            }
        }
    }
    trace.verdict.kind = SpiderwebVerdict::Kind::MaxIterReached;
    trace.verdict.iterations = max_iter;
    return trace;
}

FullState closed_loop_equilibrium(const ModelParams& p, double tol) {
    double lo = 0.0;
    double hi = composed_map(0.0, p);
    if (!(composed_map(lo, p) - lo > 0.0) || !(composed_map(hi, p) - hi < 0.0))
        throw NoBracket("no sign change of F(u) - u on [0, F(0)]");
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (composed_map(mid, p) - mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double u_star = 0.5 * (lo + hi);
    const double m = char_mrna(u_star, p);
    const PerState per = char_per(p.ks * m, p);
    return FullState(m, per.P0, per.P1, per.P2, per.PN);
}

GainVerdict small_gain_verdict(const ModelParams& p,
                               const std::vector<double>& seeds,
                               std::size_t max_iter, double tol) {
    if (seeds.empty()) throw UsageError("small_gain_verdict: empty seed list");
    bool have_limit = false;
    double limit = 0;
    for (double s : seeds) {
        const auto trace = iterate_spiderweb(s, p, max_iter, tol);
        switch (trace.verdict.kind) {
            case SpiderwebVerdict::Kind::TwoCycle:
                return GainVerdict::Unstable;
            case SpiderwebVerdict::Kind::MaxIterReached:
                return GainVerdict::Inconclusive;
            case SpiderwebVerdict::Kind::Converged:
                if (have_limit &&
                    std::abs(trace.verdict.u_star - limit) > 10.0 * tol)
                    return GainVerdict::Inconclusive;
                limit = trace.verdict.u_star;
                have_limit = true;
                break;
        }
    }
    return GainVerdict::Stable;
}

}  // namespace circadian
