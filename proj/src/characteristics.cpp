#include "circadian/characteristics.hpp"

#include <string>

namespace circadian {

namespace {

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

Inequality less(double lhs, double rhs) { return {lhs, rhs, lhs < rhs}; }
Inequality leq(double lhs, double rhs) { return {lhs, rhs, lhs <= rhs}; }

}  // namespace

double char_mrna(double u1, const ModelParams& p) {
    // The steady state exists iff the transcription rate at this input stays
    // below the degradation capacity vm, i.e. the denominator is positive.
    // vs < vm guarantees that for every u1.
    const double kin = ipow(p.KI, p.n);
    const double denom = p.vm * kin + p.vm * ipow(u1, p.n) - p.vs * kin;
    if (!(denom > 0.0))
        throw ConstraintViolation(
            "mRNA steady state does not exist at u1 = " + std::to_string(u1) +
            ": transcription exceeds degradation capacity (vs=" +
            std::to_string(p.vs) + ", vm=" + std::to_string(p.vm) + ")");
    return p.vs * kin * p.km / denom;
}

double invert_mm(double V, double K, double a) {
    if (!(a < V))
        throw SaturationExceeded("cannot invert saturation term: target " +
                                 std::to_string(a) + " >= limit " +
                                 std::to_string(V));
    return K * a / (V - a);
}

PerState char_per(double c, const ModelParams& p) {
    auto stage = [&](double V, double K, double a, const char* name) {
        if (!(a < V))
            throw SaturationExceeded("cascade stage " + std::string(name) +
                                         " infeasible: target " +
                                         std::to_string(a) + " >= limit " +
                                         std::to_string(V),
                                     name);
        return K * a / (V - a);
    };
    // Solve the equilibrium cascade from the degradation stage upward.
    const double p2 = stage(p.vd, p.kd, c, "P2");
    const double pn = (p.k1 / p.k2) * p2;
    const double p1 = stage(p.V3, p.K3, c + mm_rate(p.V4, p.K4, p2), "P1");
    const double p0 = stage(p.V1, p.K1, c + mm_rate(p.V2, p.K2, p1), "P0");
    return PerState(p0, p1, p2, pn);
}

ConditionReport check_proposition_conditions(const ModelParams& p,
                                             double c_max) {
    ConditionReport r;
    r.c1 = less(p.vd + p.V2, p.V1);
    r.c2 = less(p.V1 + p.V4, p.V2 + p.V3);
    r.c3 = less(c_max, p.vd);
    r.c4 = less(p.vd + p.V4, p.V3);
    r.c1p = less(c_max + p.V2, p.V1);
    r.overall = r.c1.ok && r.c2.ok && r.c3.ok && r.c4.ok;
    return r;
}

StateSpaceReport check_state_space(const ModelParams& p, double mbar) {
    StateSpaceReport r;
    r.mbar = mbar;
    r.vs_bound = leq(p.vs, 0.54);
    r.vs_lt_vm = {p.vs, p.vm, p.vs < p.vm};
    r.mbar_lower = (p.vs < p.vm)
                       ? leq(p.vs * p.km / (p.vm - p.vs), mbar)
                       : Inequality{0, mbar, false};
    r.mbar_upper = less(mbar, p.vd / p.ks);
    r.overall =
        r.vs_bound.ok && r.vs_lt_vm.ok && r.mbar_lower.ok && r.mbar_upper.ok;
    return r;
}

}  // namespace circadian
