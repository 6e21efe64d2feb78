#pragma once

#include "delab/parallel.hpp"
#include "delab/perturbation.hpp"
#include "delab/profile.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace delab {

struct DecayViolation : std::domain_error {
    using std::domain_error::domain_error;
};

// Kernel of the limit operator: -1 + t tanh t, -tanh t, sech t cos th, sech t sin th.
struct LimitKernel {
    static constexpr int kMembers = 4;
    static const std::array<const char*, kMembers>& names();
    static PhiJet jet(int i, double t, double th);
    static NormalPerturbation field(int i);
};

// L0 phi = Delta phi + 2 sech^2 t phi.
double limit_operator(const PhiJet& phi, double t);
double limit_operator(const NormalPerturbation& phi, double t, double th);

// Line integrals run over [-kTruncation, kTruncation] with 20-point
// Gauss-Legendre panels of width 0.5; the theta integral is the trapezoid rule
// on kThetaNodes nodes, exact for trigonometric polynomials of lower degree.
inline constexpr double kTruncation = 40.0;
inline constexpr double kPanelWidth = 0.5;
inline constexpr std::size_t kThetaNodes = 64;

// sup over |t| <= 30 of cosh t (|phi| + |grad phi| + |D^2 phi|), sampled.
double decay_weight(const NormalPerturbation& phi);
inline constexpr double kDecayLimit = 1e3;

// Integral of F(t, th) over the truncated strip. Panels are evaluated in
// parallel and summed in a fixed order.
double strip_integral(const std::function<double(double, double)>& F, Exec exec = Exec::parallel);

// Integral of w L0 phi; throws DecayViolation when phi fails the decay check.
double orthogonality_integral(int kernel_member, const NormalPerturbation& phi, Exec exec = Exec::parallel);

struct ObstructionIntegrals {
    double I1;      // integral of sech^2 (1 - t tanh t) over the line
    double I2;      // integral of (1 - t tanh t) g0(t) sin th over the strip
    double radial;  // integral of (1 - t tanh t) g0(t) over the line
};
ObstructionIntegrals obstruction_integrals();

// Pairing of 1 - t tanh t against L0 phi - 2 A sech^2 t, with the source
// g0(t) sin th added to the left side when with_g0 is set. Since the first
// term integrates to zero this equals -4 pi A I1.
double limit_equation_residual(double A_e2, const NormalPerturbation& phi, bool with_g0 = false,
                               Exec exec = Exec::parallel);

struct PointwiseBound {
    double lhs;        // |Delta phi + 2 phi| at (0, pi/2)
    double bound;      // (2 + sqrt 2) R1 / pi
    double slack;      // 1 - bound
    bool holds;        // lhs <= bound
    bool infeasible;   // bound < 1, so lhs = 1 is impossible
};
// Each of |phi|, |grad phi|, |D^2 phi| must stay below (R1/pi) sech t on a
// sample of |t| <= 10; otherwise throws std::domain_error.
PointwiseBound theorem2_pointwise_bound(double R1, const NormalPerturbation& phi);
double theorem2_threshold();  // pi / (2 + sqrt 2)

struct WeightedNormReport {
    double c2_weighted = 0.0;
    double holder_seminorm = 0.0;
};
// Sup of x^-1 (|phi| + |grad phi| + |D^2 phi|) over [-n tau, n tau] x [-pi, pi)
// on (400 n + 1) x 64 nodes, and the alpha-Holder seminorm of D^2 phi over node
// pairs closer than 0.5. nt_per_period and nth override the grid for
// refinement checks; with_holder = false skips the pair scan.
WeightedNormReport weighted_norms(const NormalPerturbation& phi, const DelaunayProfile& prof, int n, double alpha,
                                  std::size_t nt_per_period = 400, std::size_t nth = 64,
                                  Exec exec = Exec::parallel, bool with_holder = true);

struct AreaVolume {
    double area;           // 2 pi times the integral of x^2 over one period
    double area_elliptic;  // 4 pi (1+a) E(k_a)
    double volume;         // (1/3) integral of X . (X_t ^ X_th) over one period
    double area_dev;       // |area/4pi - (1+a) + (a^2/2) log|a|| / a^2
    double volume_dev;     // |-3 volume/4pi - 1 - 3a/2| / a^2
};
AreaVolume area_volume(const DelaunayProfile& prof);

}  // namespace delab
