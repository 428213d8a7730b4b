#pragma once

#include <array>

#include "circadian/errors.hpp"

namespace circadian {

// Rate and threshold constants of the five-state PER/mRNA oscillator.
// Units are uM and 1/h throughout. Defaults are the published table values.
// Construction does not enforce any of the stability inequalities; parameter
// sets that oscillate (vs = 0.5, vs = 0.76) stay representable and the
// inequalities are evaluated by the explicit check operations in
// characteristics.hpp.
struct ModelParams {
    double vs = 0.76;  // maximum transcription rate
    double vm = 0.65;  // maximum mRNA degradation rate
    double km = 0.5;   // mRNA degradation Michaelis constant
    double ks = 0.38;  // translation rate constant
    double vd = 0.95;  // maximum PER degradation rate
    double kd = 0.2;   // PER degradation Michaelis constant
    double k1 = 1.9;   // nuclear import rate constant
    double k2 = 1.3;   // nuclear export rate constant
    double V1 = 3.2;   // phosphorylation P0 -> P1
    double V2 = 1.58;  // dephosphorylation P1 -> P0
    double V3 = 5.0;   // phosphorylation P1 -> P2
    double V4 = 2.5;   // dephosphorylation P2 -> P1
    double K1 = 2.0;
    double K2 = 2.0;
    double K3 = 2.0;
    double K4 = 2.0;
    double KI = 1.0;   // inhibition threshold
    int n = 4;         // Hill cooperativity

    // Throws ConstraintViolation unless every rate is strictly positive
    // and n >= 1.
    void validate() const;
};

// Tolerance for "nonnegative" states: fixed-step integration may undershoot
// zero by roundoff.
inline constexpr double kStateTol = 1e-9;

// Concentrations of the full closed loop (uM).
struct FullState {
    double M = 0, P0 = 0, P1 = 0, P2 = 0, PN = 0;

    FullState() = default;
    FullState(double M_, double P0_, double P1_, double P2_, double PN_);

    std::array<double, 5> to_array() const { return {M, P0, P1, P2, PN}; }
    static FullState from_array(const std::array<double, 5>& a) {
        return FullState(a[0], a[1], a[2], a[3], a[4]);
    }
};

// Concentrations of the open-loop PER subsystem (uM).
struct PerState {
    double P0 = 0, P1 = 0, P2 = 0, PN = 0;

    PerState() = default;
    PerState(double P0_, double P1_, double P2_, double PN_);

    std::array<double, 4> to_array() const { return {P0, P1, P2, PN}; }
};

// Input/output wiring of the two subsystems: u1 is the nuclear PER seen by
// the mRNA equation, y1 = ks*M drives the PER chain, y2 = PN closes the loop.
struct SubsystemIO {
    double u1 = 0;
    double y1 = 0;
    double u2 = 0;
    double y2 = 0;
};

// Hill inhibition vs*KI^n/(KI^n + u^n). Strictly decreasing in u, value in
// (0, vs]. u^n is computed by repeated multiplication (n is a small integer).
double hill_rate(double u, const ModelParams& p);

// Michaelis-Menten saturation V*x/(K+x).
double mm_rate(double V, double K, double x);

// dM/dt of the scalar mRNA subsystem under constant input u1.
double rhs_mrna(double M, double u1, const ModelParams& p);

// Derivatives of the four-state PER chain under constant input u2.
// Component sum equals u2 - mm_rate(vd, kd, P2) identically.
std::array<double, 4> rhs_per(const PerState& s, double u2, const ModelParams& p);

// Full five-state vector field. The nuclear PER used in the dM/dt equation is
// passed explicitly so the same code serves the undelayed loop
// (pn_feedback = s.PN) and the delayed loop (pn_feedback = PN(t - tau)).
std::array<double, 5> rhs_full(const FullState& s, const ModelParams& p,
                               double pn_feedback);

}  // namespace circadian
