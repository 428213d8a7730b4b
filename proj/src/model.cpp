#include "circadian/model.hpp"

#include <string>

namespace circadian {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw ConstraintViolation(std::string("parameter ") + name +
                                  " must be strictly positive, got " +
                                  std::to_string(v));
}

void require_nonneg(double v, const char* name) {
    if (!(v >= -kStateTol))
        throw ConstraintViolation(std::string("state component ") + name +
                                  " must be nonnegative, got " +
                                  std::to_string(v));
}

// Integer power by repeated multiplication; exact for the small exponents
// used here and avoids pow() edge cases.
double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

void ModelParams::validate() const {
    require_positive(vs, "vs");
    require_positive(vm, "vm");
    require_positive(km, "km");
    require_positive(ks, "ks");
    require_positive(vd, "vd");
    require_positive(kd, "kd");
    require_positive(k1, "k1");
    require_positive(k2, "k2");
    require_positive(V1, "V1");
    require_positive(V2, "V2");
    require_positive(V3, "V3");
    require_positive(V4, "V4");
    require_positive(K1, "K1");
    require_positive(K2, "K2");
    require_positive(K3, "K3");
    require_positive(K4, "K4");
    require_positive(KI, "KI");
    if (n < 1)
        throw ConstraintViolation("Hill exponent n must be >= 1, got " +
                                  std::to_string(n));
}

FullState::FullState(double M_, double P0_, double P1_, double P2_, double PN_)
    : M(M_), P0(P0_), P1(P1_), P2(P2_), PN(PN_) {
    require_nonneg(M, "M");
    require_nonneg(P0, "P0");
    require_nonneg(P1, "P1");
    require_nonneg(P2, "P2");
    require_nonneg(PN, "PN");
}

PerState::PerState(double P0_, double P1_, double P2_, double PN_)
    : P0(P0_), P1(P1_), P2(P2_), PN(PN_) {
    require_nonneg(P0, "P0");
    require_nonneg(P1, "P1");
    require_nonneg(P2, "P2");
    require_nonneg(PN, "PN");
}

double hill_rate(double u, const ModelParams& p) {
    const double kin = ipow(p.KI, p.n);
    return p.vs * kin / (kin + ipow(u, p.n));
}

double mm_rate(double V, double K, double x) { return V * x / (K + x); }

double rhs_mrna(double M, double u1, const ModelParams& p) {
    return hill_rate(u1, p) - mm_rate(p.vm, p.km, M);
}

std::array<double, 4> rhs_per(const PerState& s, double u2,
                              const ModelParams& p) {
    const double a0 = mm_rate(p.V1, p.K1, s.P0);  // P0 -> P1
    const double b0 = mm_rate(p.V2, p.K2, s.P1);  // P1 -> P0
    const double a1 = mm_rate(p.V3, p.K3, s.P1);  // P1 -> P2
    const double b1 = mm_rate(p.V4, p.K4, s.P2);  // P2 -> P1
    const double deg = mm_rate(p.vd, p.kd, s.P2);
    return {
        u2 - a0 + b0,
        a0 - b0 - a1 + b1,
        a1 - b1 - p.k1 * s.P2 + p.k2 * s.PN - deg,
        p.k1 * s.P2 - p.k2 * s.PN,
    };
}

std::array<double, 5> rhs_full(const FullState& s, const ModelParams& p,
                               double pn_feedback) {
    PerState per;
    per.P0 = s.P0;
    per.P1 = s.P1;
    per.P2 = s.P2;
    per.PN = s.PN;
    const auto dp = rhs_per(per, p.ks * s.M, p);
    return {rhs_mrna(s.M, pn_feedback, p), dp[0], dp[1], dp[2], dp[3]};
}

}  // namespace circadian
