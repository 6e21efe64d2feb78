#pragma once

#include "delab/special_fn.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace delab {

struct IntegrationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DelaunayParam {
    double a = -0.5;
    double gamma = -0.25;
    EllipticModulus k;  // k^2 = 1 - a^2/(1+a)^2

    // Rejects a == 0 and a < -1/2.
    static DelaunayParam make(double a);
};

// Values of the profile and its t-derivatives at one point.
struct ProfileJet {
    double x, xp, xpp, xppp;
    double z, zp, zpp, zppp;
};

// Delaunay profile: x(t) = (1+a) dn((1+a)t, k_a), z' = x^2 - gamma.
// Immutable after construction.
class DelaunayProfile {
public:
    explicit DelaunayProfile(double a);

    const DelaunayParam& param() const { return p_; }
    double a() const { return p_.a; }
    double gamma() const { return p_.gamma; }
    double tau() const { return tau_; }  // half-period of x
    double h() const { return h_; }      // z(tau)

    double x(double t) const;
    double xp(double t) const;
    double xpp(double t) const;
    double zp(double t) const;
    double z(double t) const;
    ProfileJet jet(double t) const;

private:
    double z_half(double s) const;  // z on [0, tau]

    DelaunayParam p_;
    double tau_ = 0.0;
    double h_ = 0.0;
    double panel_ = 0.0;
    std::vector<double> cumulative_;  // z at panel edges on [0, tau]
};

struct ProfileSample {
    double t, x, xp, z;
};

// Adaptive Runge-Kutta solution of x'' = (1+2g)x - 2x^3, z' = x^2 - g with
// x(0) = 1+a, x'(0) = 0, z(0) = 0, reported at n_out+1 equispaced points of
// [0, t_max]. Throws IntegrationFailure when the step size collapses.
std::vector<ProfileSample> integrate_profile_oracle(double a, double t_max, double tol,
                                                    int n_out = 400);

// Solutions of the a-differentiated profile system:
//   u'' = (1+2g)u + 2(1+2a)x - 6x^2 u,  u(0)=1, u'(0)=0   (u = dx/da)
//   v'  = 2xu - (1+2a),                v(0)=0           (v = dz/da)
// Stored on a fine checkpoint grid with one high-order step to the query
// point, which keeps evaluations smooth in t.
class ProfileADerivatives {
public:
    explicit ProfileADerivatives(const DelaunayProfile& prof, double t_max = -1.0);

    struct Value {
        double u, up, upp, v, vp, vpp;
    };
    Value at(double t) const;
    double t_max() const { return t_max_; }

private:
    DelaunayProfile prof_;
    double step_ = 0.0;
    double t_max_ = 0.0;
    std::vector<std::array<double, 3>> ckpt_;
};

struct AsymptoticReport {
    double tau_dev = 0.0;    // sup |tau + log|a| - log 4|
    double h_quot = 0.0;     // sup |(h - 1 - a log|a|)/a|
    std::vector<double> tau_devs;
    std::vector<double> h_quots;
};

// Requires every a in (-0.1, 0.1) \ {0}.
AsymptoticReport asymptotic_checks(const std::vector<double>& a_grid);

}  // namespace delab
