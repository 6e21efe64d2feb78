#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace delab {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct DegeneratePatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kDegeneracyThreshold = 1e-12;

// Position and partial derivatives at one (t, theta). Third derivatives are
// optional; when present the normal derivatives are exact.
struct SurfaceJet {
    Vec3 X, Xt, Xth, Xtt, Xtth, Xthth;
    bool has_third = false;
    Vec3 Xttt, Xttth, Xtthth, Xththth;
};

class SurfacePatch {
public:
    virtual ~SurfacePatch() = default;
    virtual SurfaceJet jet(double t, double th) const = 0;
    virtual bool orthogonal() const { return false; }
};

struct FundamentalForms {
    double E, F, G, L, M, N;
    Vec3 normal;
};

FundamentalForms fundamental_forms(const SurfaceJet& j);
FundamentalForms fundamental_forms(const SurfacePatch& p, double t, double th);
double mean_curvature(const SurfaceJet& j);
double mean_curvature(const SurfacePatch& p, double t, double th);

// Unit normal and its first and second partials.
struct NormalJet {
    Vec3 N, Nt, Nth, Ntt, Ntth, Nthth;
};

NormalJet normal_jet(const SurfaceJet& j);  // requires has_third
NormalJet normal_jet(const SurfacePatch& p, double t, double th);

struct IdentityReport {
    double max_residual = 0.0;
    std::string worst;
};

// Residuals of the orthogonal-patch identities (normal derivatives, second
// derivatives of X against the frame, cross products of frame vectors).
IdentityReport identity_suite(const SurfacePatch& p, const std::vector<std::pair<double, double>>& sample);

// Surface of revolution (x cos th, x sin th, z) from a profile jet.
struct CurveJet {
    double x, xp, xpp, xppp;
    double z, zp, zpp, zppp;
};

class RevolutionPatch : public SurfacePatch {
public:
    explicit RevolutionPatch(std::function<CurveJet(double)> curve, bool orthogonal = true)
        : curve_(std::move(curve)), orth_(orthogonal) {}
    SurfaceJet jet(double t, double th) const override;
    bool orthogonal() const override { return orth_; }

private:
    std::function<CurveJet(double)> curve_;
    bool orth_;
};

// Unit sphere (sech t cos th, sech t sin th, tanh t).
RevolutionPatch sphere_patch();
// Round cylinder of radius r: (r cos th, r sin th, t).
RevolutionPatch round_cylinder_patch(double r);

// Rigid motion Q X + b and parameter shift t -> t + c of another patch.
class MovedPatch : public SurfacePatch {
public:
    MovedPatch(const SurfacePatch& base, Mat3 rot, Vec3 shift, double t_shift)
        : base_(base), rot_(std::move(rot)), shift_(std::move(shift)), c_(t_shift) {}
    SurfaceJet jet(double t, double th) const override;
    bool orthogonal() const override { return base_.orthogonal(); }

private:
    const SurfacePatch& base_;
    Mat3 rot_;
    Vec3 shift_;
    double c_;
};

}  // namespace delab
