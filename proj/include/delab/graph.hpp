#pragma once

#include "delab/perturbation.hpp"
#include "delab/report.hpp"
#include "delab/surface.hpp"
#include "delab/torus.hpp"

#include <functional>
#include <string>

namespace delab {

// Second-order jet of Y = X + s phi N from the base jet and normal jet.
SurfaceJet graph_jet(const SurfaceJet& base, const NormalJet& n, const PhiJet& phi, double s);

// The normal graph X + s phi N over an orthogonal base patch.
class GraphPatch : public SurfacePatch {
public:
    GraphPatch(const SurfacePatch& base, NormalPerturbation phi, double s = 1.0)
        : base_(base), phi_(std::move(phi)), s_(s) {}
    SurfaceJet jet(double t, double th) const override;

private:
    const SurfacePatch& base_;
    NormalPerturbation phi_;
    double s_;
};

// Everything the variation formulas consume at one base point.
struct BasePoint {
    SurfaceJet X;
    NormalJet N;
    FundamentalForms f;
};
BasePoint base_point(const SurfacePatch& p, double t, double th);

double graph_mean_curvature(const BasePoint& b, const PhiJet& phi, double s);

// Closed forms of d/ds and d^2/ds^2 of M(X + s phi N) at s = 0 for an
// orthogonal base.
double first_variation(const BasePoint& b, const PhiJet& phi);
double second_variation(const BasePoint& b, const PhiJet& phi);
double first_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th);
double second_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th);

// Central differences in s with Richardson extrapolation
// (first: step 1e-6, one level; second: step 1e-4, two levels).
double fd_first_variation(const BasePoint& b, const PhiJet& phi, double h = 1e-6);
double fd_second_variation(const BasePoint& b, const PhiJet& phi, double h = 1e-4);
double fd_first_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th);
double fd_second_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th);

// (Y_t ^ Y_th) . N computed directly and from 1 - 2 M phi + (LN - M^2)/(EG) phi^2.
struct AreaFactor {
    double direct;
    double formula;
};
AreaFactor normal_area_factor(const BasePoint& b, const PhiJet& phi);

struct PerturbationBallSpec {
    double R = 1.0;
    double beta = 1.0;
};

// Function on the unit sphere.
struct SphereFunction {
    std::string id;
    std::function<double(const Vec3&)> value;
};
SphereFunction sphere_function(const std::string& id, double constant = 1.0);

// H(X) = 1 + A(X/|X|)/|X|^beta + H1(X)/|X|^(beta + nu).
struct PrescribedCurvature {
    SphereFunction A;
    double beta = 1.0;
    double nu = 1.0;
    std::function<double(const Vec3&)> H1;  // empty means zero

    double operator()(const Vec3& X) const;
    Vec3 gradient(const Vec3& X) const;  // central differences with Richardson
    double nu_tilde() const { return nu < 1.0 ? nu : 1.0; }
};

// From a JSON text {"A": "const|coord1|coord2|coord3|...", "beta": r, "nu": r,
// optional "A0": constant value, "H1": constant}.
PrescribedCurvature prescribed_from_json(const std::string& json_text);

// d^2M along phi on a torus minus its eps -> 0 limit; order 1, weighted by x^3 / eps.
ExpansionReport torus_second_variation_expansion(const DelaunayProfile& prof, const NormalPerturbation& phi,
                                                 const std::vector<double>& eps, const TorusSweep& sw = {});
double second_variation_limit(const DelaunayProfile& prof, const PhiJet& phi, double t);

// Builds the perturbation used at a given epsilon.
using PhiFactory = std::function<NormalPerturbation(double eps)>;

struct GraphExpansionReport {
    ExpansionReport rem;         // sup |numerator| per eps, expected order 2 beta
    std::vector<double> h_sup;   // sup |h| with h = numerator / eps^(2 beta)
    double h_ratio = 0.0;        // h_sup[i] / h_sup[i+1], max over pairs
    double min_margin = 0.0;     // min of the normal-area factor over the grid
    bool in_ball = true;
    bool pass = false;
};

// [2x^2 M(X + phi N) - 2x^2 M(X) - L phi] with L phi = 2x^2 dM/ds by differences in s.
GraphExpansionReport graph_expansion_residual(const DelaunayProfile& prof, const PhiFactory& phi,
                                              const PerturbationBallSpec& spec, const std::vector<double>& eps,
                                              const TorusSweep& sw = {});

// Minimum over the grid of (Y_t ^ Y_th).N / (|X_t||X_th|) for Y = X + phi N.
double regularity_margin(const SurfacePatch& base, const NormalPerturbation& phi, double t0, double t1,
                         std::size_t nt, std::size_t nth);

struct PrescribedReport {
    std::vector<double> eps;
    std::vector<double> xi_sup;       // sup |xi|
    std::vector<double> grad_term;    // sup |2x^2 (grad H . N) phi| / eps^(2 beta + 1)
    std::vector<double> remainder;    // sup of the raw numerator
    double xi_ratio = 0.0;
    double order_estimate = 0.0;
    bool pass = false;
};

PrescribedReport prescribed_expansion_residual(const DelaunayProfile& prof, const PrescribedCurvature& H,
                                               const PhiFactory& phi, const PerturbationBallSpec& spec,
                                               const std::vector<double>& eps, const TorusSweep& sw = {});

}  // namespace delab
