#include "delab/profile.hpp"

#include "delab/quadrature.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

namespace delab {

namespace odeint = boost::numeric::odeint;

DelaunayParam DelaunayParam::make(double a) {
    if (!(a >= -0.5)) throw std::domain_error("Delaunay parameter a must be >= -1/2");
    if (a == 0.0) throw std::domain_error("Delaunay parameter a must be nonzero");
    DelaunayParam p;
    p.a = a;
    p.gamma = a * (1.0 + a);
    const double r = a / (1.0 + a);
    p.k = EllipticModulus::from_complement(r * r);
    return p;
}

DelaunayProfile::DelaunayProfile(double a) : p_(DelaunayParam::make(a)) {
    const double K = complete_K(p_.k);
    const double E = complete_E(p_.k);
    tau_ = K / (1.0 + a);
    h_ = -a * K + (1.0 + a) * E;

    const auto panels = static_cast<std::size_t>(std::ceil(tau_ / 0.25));
    panel_ = tau_ / static_cast<double>(panels);
    cumulative_.assign(panels + 1, 0.0);
    auto f = [this](double s) { return zp(s); };
    for (std::size_t j = 0; j < panels; ++j) {
        const double lo = panel_ * static_cast<double>(j);
        cumulative_[j + 1] = cumulative_[j] + gl_panel(f, lo, lo + panel_);
    }
}

double DelaunayProfile::x(double t) const {
    const double s = 1.0 + p_.a;
    return s * jacobi_dn(s * t, p_.k);
}

double DelaunayProfile::xp(double t) const {
    const double s = 1.0 + p_.a;
    const auto j = jacobi_sncndn(s * t, p_.k);
    return -s * s * p_.k.k_sq() * j.sn * j.cn;
}

double DelaunayProfile::xpp(double t) const {
    const double xv = x(t);
    return (1.0 + 2.0 * p_.gamma) * xv - 2.0 * xv * xv * xv;
}

double DelaunayProfile::zp(double t) const {
    const double xv = x(t);
    return xv * xv - p_.gamma;
}

double DelaunayProfile::z_half(double s) const {
    const std::size_t last = cumulative_.size() - 2;
    const auto j = std::min(static_cast<std::size_t>(s / panel_), last);
    const double lo = panel_ * static_cast<double>(j);
    return cumulative_[j] + gl_panel([this](double r) { return zp(r); }, lo, s);
}

double DelaunayProfile::z(double t) const {
    const double period = 2.0 * tau_;
    const double m = std::floor((t + tau_) / period);
    const double r = t - m * period;
    const double zr = r >= 0.0 ? z_half(r) : -z_half(-r);
    return 2.0 * m * h_ + zr;
}

ProfileJet DelaunayProfile::jet(double t) const {
    const double s = 1.0 + p_.a;
    const auto j = jacobi_sncndn(s * t, p_.k);
    ProfileJet q{};
    const double g = p_.gamma;
    q.x = s * j.dn;
    q.xp = -s * s * p_.k.k_sq() * j.sn * j.cn;
    q.xpp = (1.0 + 2.0 * g) * q.x - 2.0 * q.x * q.x * q.x;
    q.xppp = (1.0 + 2.0 * g) * q.xp - 6.0 * q.x * q.x * q.xp;
    q.z = z(t);
    q.zp = q.x * q.x - g;
    q.zpp = 2.0 * q.x * q.xp;
    q.zppp = 2.0 * q.xp * q.xp + 2.0 * q.x * q.xpp;
    return q;
}

std::vector<ProfileSample> integrate_profile_oracle(double a, double t_max, double tol, int n_out) {
    if (!(tol > 1e-14 && tol < 1e-6)) throw std::domain_error("oracle tolerance outside (1e-14, 1e-6)");
    if (!(t_max > 0.0) || n_out < 1) throw std::domain_error("oracle range must be positive");
    const DelaunayParam p = DelaunayParam::make(a);
    using State = std::array<double, 3>;
    const double g = p.gamma;
    auto sys = [g](const State& s, State& d, double) {
        d[0] = s[1];
        d[1] = (1.0 + 2.0 * g) * s[0] - 2.0 * s[0] * s[0] * s[0];
        d[2] = s[0] * s[0] - g;
    };
    std::vector<double> times(static_cast<std::size_t>(n_out) + 1);
    for (int i = 0; i <= n_out; ++i) times[i] = t_max * i / n_out;

    std::vector<ProfileSample> out;
    out.reserve(times.size());
    auto obs = [&out](const State& s, double t) { out.push_back({t, s[0], s[1], s[2]}); };
    State s0{1.0 + a, 0.0, 0.0};
    // Local control at tol/10 keeps the global error below tol over a few periods.
    auto stepper = odeint::make_controlled(0.1 * tol, 0.1 * tol, odeint::runge_kutta_fehlberg78<State>());
    try {
        odeint::integrate_times(stepper, sys, s0, times.begin(), times.end(), 1e-3, obs,
                                odeint::max_step_checker(1000000));
    } catch (const std::exception& e) {
        throw IntegrationFailure(std::string("profile oracle integration failed: ") + e.what());
    }
    return out;
}

namespace {

using AState = std::array<double, 3>;

struct VariationalSystem {
    const DelaunayProfile* prof;
    void operator()(const AState& s, AState& d, double t) const {
        const double x = prof->x(t);
        const double a = prof->a();
        const double g = prof->gamma();
        d[0] = s[1];
        d[1] = (1.0 + 2.0 * g) * s[0] + 2.0 * (1.0 + 2.0 * a) * x - 6.0 * x * x * s[0];
        d[2] = 2.0 * x * s[0] - (1.0 + 2.0 * a);
    }
};

}  // namespace

ProfileADerivatives::ProfileADerivatives(const DelaunayProfile& prof, double t_max) : prof_(prof) {
    t_max_ = t_max > 0.0 ? t_max : 3.0 * prof.tau() + 2.0;
    step_ = 1.0 / 128.0;
    const auto n = static_cast<std::size_t>(std::ceil(t_max_ / step_)) + 1;
    ckpt_.resize(n + 1);
    AState s{1.0, 0.0, 0.0};
    ckpt_[0] = s;
    odeint::runge_kutta_fehlberg78<AState> rk;
    VariationalSystem sys{&prof_};
    for (std::size_t i = 0; i < n; ++i) {
        rk.do_step(sys, s, step_ * static_cast<double>(i), step_);
        ckpt_[i + 1] = s;
    }
}

ProfileADerivatives::Value ProfileADerivatives::at(double t) const {
    const double at = std::abs(t);
    if (at > t_max_) throw std::out_of_range("a-derivative query beyond the integrated range");
    const auto k = std::min(static_cast<std::size_t>(at / step_), ckpt_.size() - 2);
    AState s = ckpt_[k];
    const double tk = step_ * static_cast<double>(k);
    if (at > tk) {
        odeint::runge_kutta_fehlberg78<AState> rk;
        VariationalSystem sys{&prof_};
        rk.do_step(sys, s, tk, at - tk);
    }
    const double x = prof_.x(at);
    const double xp = prof_.xp(at);
    const double a = prof_.a();
    const double g = prof_.gamma();
    Value v{};
    v.u = s[0];
    v.up = s[1];
    v.upp = (1.0 + 2.0 * g) * s[0] + 2.0 * (1.0 + 2.0 * a) * x - 6.0 * x * x * s[0];
    v.v = s[2];
    v.vp = 2.0 * x * s[0] - (1.0 + 2.0 * a);
    v.vpp = 2.0 * xp * s[0] + 2.0 * x * s[1];
    if (t < 0.0) {  // u even, v odd
        v.up = -v.up;
        v.v = -v.v;
        v.vpp = -v.vpp;
    }
    return v;
}

AsymptoticReport asymptotic_checks(const std::vector<double>& a_grid) {
    AsymptoticReport r;
    for (double a : a_grid) {
        if (!(a > -0.1 && a < 0.1) || a == 0.0)
            throw std::domain_error("asymptotic checks need a in (-0.1, 0.1) \\ {0}");
        const DelaunayProfile p(a);
        const double la = std::log(std::abs(a));
        const double td = std::abs(p.tau() + la - std::log(4.0));
        const double hq = std::abs((p.h() - 1.0 - a * la) / a);
        r.tau_devs.push_back(td);
        r.h_quots.push_back(hq);
        r.tau_dev = std::max(r.tau_dev, td);
        r.h_quot = std::max(r.h_quot, hq);
    }
    return r;
}

}  // namespace delab
