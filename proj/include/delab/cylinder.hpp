#pragma once

#include "delab/parallel.hpp"
#include "delab/perturbation.hpp"
#include "delab/profile.hpp"
#include "delab/surface.hpp"

#include <array>
#include <string>
#include <vector>

namespace delab {

// X_a = (x cos th, x sin th, z); conformal with |X_t| = |X_th| = x.
class CylinderPatch : public SurfacePatch {
public:
    explicit CylinderPatch(const DelaunayProfile& prof) : prof_(prof) {}
    SurfaceJet jet(double t, double th) const override;
    bool orthogonal() const override { return true; }
    const DelaunayProfile& profile() const { return prof_; }

private:
    DelaunayProfile prof_;
};

struct JacobiValue {
    double op;           // Delta phi + 2(x^2 + g^2/x^2) phi
    double first_var;    // op / (2 x^2)
};

JacobiValue jacobi_apply(const DelaunayProfile& prof, const PhiJet& phi, double t);
// Potential 2(x^2 + g^2/x^2).
double jacobi_potential(const DelaunayProfile& prof, double t);

// The kernel functions of the Jacobi operator attached to a Delaunay profile:
//   w0+ = -(z'/x) dx/da + (x'/x) dz/da,  w0- = x'/x,
//   w1+ = z'/x,                           w1- = x' + z z'/x.
class JacobiKernelFamily {
public:
    explicit JacobiKernelFamily(const DelaunayProfile& prof, double t_max = -1.0);

    double w0p(double t) const;
    double w0m(double t) const;
    double w1p(double t) const;
    double w1m(double t) const;

    // Generators in the order w0+, w0-, w1+ cos, w1+ sin, w1- cos, w1- sin.
    static constexpr int kGenerators = 6;
    static const std::array<const char*, kGenerators>& names();
    double radial(int g, double t) const;
    static double angular(int g, double th);
    static double angular_order(int g);  // 0 or 1
    double generator(int g, double t, double th) const { return radial(g, t) * angular(g, th); }

    const DelaunayProfile& profile() const { return prof_; }

private:
    DelaunayProfile prof_;
    ProfileADerivatives ad_;
};

struct KernelResiduals {
    std::array<double, JacobiKernelFamily::kGenerators> residual{};
    std::array<bool, JacobiKernelFamily::kGenerators> degenerate{};  // generator vanishes identically
    double max_residual() const;
};

// Sup of |L_a w| for each generator on a grid over [-2 tau, 2 tau] x [-pi, pi).
// The t-derivatives are sixth-order central differences.
KernelResiduals kernel_residuals(const DelaunayProfile& prof, std::size_t nt = 201, std::size_t nth = 64,
                                 Exec exec = Exec::parallel);

struct SingularLimitReport {
    std::vector<double> a;
    std::vector<double> deviation;   // sup over [-5,5] of |w0+ - (-1 + t tanh t)|
    std::vector<double> growth_C;    // sup over [-tau, tau] of |w0+|/(1+|t|)
    bool monotone = true;
};

// Requires a in (-0.05, 0.05) \ {0}; a_grid ordered by decreasing |a|.
SingularLimitReport singular_limit_check(const std::vector<double>& a_grid);

// Sampled sup of the potential against the closed form a^2 + (1+a)^2.
struct PotentialBound {
    double sup_potential_half;  // sup of x^2 + g^2/x^2
    double formula;             // a^2 + (1+a)^2
    bool fourier_ok;            // j^2 >= 2 sup(...) for |j| >= 2
};
PotentialBound potential_bound(const DelaunayProfile& prof, std::size_t nt = 2001);

}  // namespace delab
