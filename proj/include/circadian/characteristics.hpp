#pragma once

#include "circadian/model.hpp"

namespace circadian {

// One inequality of the stability conditions, with both numeric sides kept
// so reports can be audited.
struct Inequality {
    double lhs = 0;
    double rhs = 0;
    bool ok = false;
};

// The four conditions guaranteeing a unique globally attractive equilibrium
// of the PER chain under constant input c, plus the implied c + V2 < V1.
struct ConditionReport {
    Inequality c1;       // vd + V2 < V1
    Inequality c2;       // V1 + V4 < V2 + V3
    Inequality c3;       // c < vd
    Inequality c4;       // vd + V4 < V3
    Inequality c1p;      // c + V2 < V1 (implied by c1 and c3)
    bool overall = false;  // c1 && c2 && c3 && c4
};

// State-space constraints for the scalar mRNA subsystem: the transcription
// rate cap, vs < vm, and the invariant interval [0, mbar].
struct StateSpaceReport {
    Inequality vs_bound;    // vs <= 0.54
    Inequality vs_lt_vm;    // vs < vm
    Inequality mbar_lower;  // vs*km/(vm - vs) <= mbar
    Inequality mbar_upper;  // mbar < vd/ks
    double mbar = 0;
    bool overall = false;
};

// Steady state of the mRNA subsystem under constant input u1:
//   vs*KI^n*km / (vm*KI^n + vm*u1^n - vs*KI^n).
// Strictly decreasing in u1. Throws ConstraintViolation when no steady state
// exists at this input (denominator <= 0; vs < vm rules that out for all u1).
double char_mrna(double u1, const ModelParams& p);

// Solves mm_rate(V, K, x) = a for x. Throws SaturationExceeded if a >= V.
double invert_mm(double V, double K, double a);

// Unique equilibrium of the PER chain under constant input c, computed in
// closed form by inverting the cascade from the degradation stage upward.
// Throws SaturationExceeded naming the failing stage (P2, P1 or P0) when an
// intermediate target exceeds its saturation limit.
PerState char_per(double c, const ModelParams& p);

ConditionReport check_proposition_conditions(const ModelParams& p,
                                             double c_max);

StateSpaceReport check_state_space(const ModelParams& p, double mbar);

// Default invariant upper bound for M with the table parameters.
inline constexpr double kDefaultMbar = 2.45;

}  // namespace circadian
