#pragma once

#include "delab/parallel.hpp"
#include "delab/perturbation.hpp"
#include "delab/profile.hpp"
#include "delab/report.hpp"
#include "delab/surface.hpp"

#include <optional>
#include <vector>

namespace delab {

struct TorusParam {
    double epsilon = 0.0;
    DelaunayParam a;
    std::optional<int> n;  // when set, epsilon = pi / (n h_a)
};

// X = R_{eps z}(x cos th, 1/eps + x sin th, 0), R_s the rotation about e1.
class TorusPatch : public SurfacePatch {
public:
    TorusPatch(const DelaunayProfile& prof, double epsilon);
    static TorusPatch closed(const DelaunayProfile& prof, int n);

    SurfaceJet jet(double t, double th) const override;
    bool orthogonal() const override { return true; }

    const DelaunayProfile& profile() const { return prof_; }
    const TorusParam& param() const { return param_; }
    double epsilon() const { return param_.epsilon; }

    static Mat3 R(double s);
    static Mat3 Q(double s);  // dR/ds

private:
    DelaunayProfile prof_;
    TorusParam param_;
};

// g_a = 2x^3 + 2z'x - 4z'^2 x - z'^3/x - 2 g z'^2/x.
double g_coefficient(const DelaunayProfile& prof, double t);
// Singular limit 4 sech^3 t - 5 sech^5 t.
double g_limit(double t);

struct TorusSweep {
    std::size_t nt = 201;
    std::size_t nth = 64;
    Exec exec = Exec::parallel;
};

// [2x^2 M - 2x^2 - eps g sin th] over eps; order 2, weighted by x^-2 / eps^2.
ExpansionReport mean_curvature_expansion(const DelaunayProfile& prof, const std::vector<double>& eps,
                                         const TorusSweep& sw = {});

// X_tt.N, X_thth.N, X_tth.N minus their printed order-0 and order-1 terms.
std::vector<ExpansionReport> second_form_expansion(const DelaunayProfile& prof, const std::vector<double>& eps,
                                                   const TorusSweep& sw = {});

// |N_t|^2, |N_th|^2 (order 2) and N_t.N_th, N_tt.X_t, N_tt.X_th, N_thth.X_t,
// N_thth.X_th (order 1) against their printed leading terms.
std::vector<ExpansionReport> normal_derivative_expansion(const DelaunayProfile& prof,
                                                         const std::vector<double>& eps,
                                                         const TorusSweep& sw = {});

// First-order correction of the linearised operator.
double linearized_first_order(const DelaunayProfile& prof, const PhiJet& phi, double t, double th);

// 2x^2 dM/ds (by central differences in s) minus L_a phi + eps L1 phi; order 2,
// weighted by x^-1 / eps^2.
ExpansionReport linearized_expansion(const DelaunayProfile& prof, const NormalPerturbation& phi,
                                     const std::vector<double>& eps, const TorusSweep& sw = {});

}  // namespace delab
