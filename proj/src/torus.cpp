#include "delab/torus.hpp"

#include "delab/cylinder.hpp"
#include "delab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace delab {

TorusPatch::TorusPatch(const DelaunayProfile& prof, double epsilon) : prof_(prof) {
    if (!(epsilon > 0.0)) throw std::domain_error("torus epsilon must be positive");
    param_.epsilon = epsilon;
    param_.a = prof.param();
}

TorusPatch TorusPatch::closed(const DelaunayProfile& prof, int n) {
    if (n < 1) throw std::domain_error("lobe count n must be positive");
    TorusPatch p(prof, std::numbers::pi / (n * prof.h()));
    p.param_.n = n;
    return p;
}

Mat3 TorusPatch::R(double s) {
    const double c = std::cos(s);
    const double si = std::sin(s);
    Mat3 m;
    m << 1, 0, 0, 0, c, -si, 0, si, c;
    return m;
}

Mat3 TorusPatch::Q(double s) {
    const double c = std::cos(s);
    const double si = std::sin(s);
    Mat3 m;
    m << 0, 0, 0, 0, -si, -c, 0, c, -si;
    return m;
}

SurfaceJet TorusPatch::jet(double t, double th) const {
    const double e = param_.epsilon;
    const ProfileJet p = prof_.jet(t);
    const double co = std::cos(th);
    const double si = std::sin(th);

    // A(t) = R(eps z(t)) and its t-derivatives; dQ/ds = -R on the (e2,e3) block.
    const double s1 = e * p.zp, s2 = e * p.zpp, s3 = e * p.zppp;
    const Mat3 A = R(e * p.z);
    const Mat3 Qm = Q(e * p.z);
    Mat3 Qd = -A;
    Qd(0, 0) = 0.0;
    const Mat3 A1 = Qm * s1;
    const Mat3 A2 = Qd * (s1 * s1) + Qm * s2;
    const Mat3 A3 = -Qm * (s1 * s1 * s1) + Qd * (3.0 * s1 * s2) + Qm * s3;

    const Vec3 U(p.x * co, 1.0 / e + p.x * si, 0.0);
    const Vec3 Ut(p.xp * co, p.xp * si, 0.0);
    const Vec3 Uh(-p.x * si, p.x * co, 0.0);
    const Vec3 Utt(p.xpp * co, p.xpp * si, 0.0);
    const Vec3 Uth(-p.xp * si, p.xp * co, 0.0);
    const Vec3 Uhh(-p.x * co, -p.x * si, 0.0);
    const Vec3 Uttt(p.xppp * co, p.xppp * si, 0.0);
    const Vec3 Utth(-p.xpp * si, p.xpp * co, 0.0);
    const Vec3 Uthh(-p.xp * co, -p.xp * si, 0.0);
    const Vec3 Uhhh(p.x * si, -p.x * co, 0.0);

    SurfaceJet j;
    j.X = A * U;
    j.Xt = A1 * U + A * Ut;
    j.Xth = A * Uh;
    j.Xtt = A2 * U + 2.0 * (A1 * Ut) + A * Utt;
    j.Xtth = A1 * Uh + A * Uth;
    j.Xthth = A * Uhh;
    j.has_third = true;
    j.Xttt = A3 * U + 3.0 * (A2 * Ut) + 3.0 * (A1 * Utt) + A * Uttt;
    j.Xttth = A2 * Uh + 2.0 * (A1 * Uth) + A * Utth;
    j.Xtthth = A1 * Uhh + A * Uthh;
    j.Xththth = A * Uhhh;
    return j;
}

double g_coefficient(const DelaunayProfile& prof, double t) {
    const double x = prof.x(t);
    const double zp = x * x - prof.gamma();
    const double g = prof.gamma();
    return 2.0 * x * x * x + 2.0 * zp * x - 4.0 * zp * zp * x - zp * zp * zp / x - 2.0 * g * zp * zp / x;
}

double g_limit(double t) {
    const double s = 1.0 / std::cosh(t);
    const double s3 = s * s * s;
    return 4.0 * s3 - 5.0 * s3 * s * s;
}

namespace {

Grid2 period_grid(const DelaunayProfile& prof, const TorusSweep& sw) {
    return Grid2{-prof.tau(), prof.tau(), sw.nt, sw.nth};
}

// Sup of |value| and |weighted| over the grid for each of k quantities.
template <std::size_t K, class F>
std::array<std::pair<double, double>, K> grid_sups(const Grid2& grid, Exec exec, F&& f) {
    std::vector<std::array<std::pair<double, double>, K>> cells(grid.size());
    for_index(grid.size(), [&](std::size_t k) { cells[k] = f(grid.t(grid.it(k)), grid.th(grid.ith(k))); }, exec);
    std::array<std::pair<double, double>, K> out{};
    for (const auto& c : cells)
        for (std::size_t q = 0; q < K; ++q) {
            out[q].first = std::max(out[q].first, std::abs(c[q].first));
            out[q].second = std::max(out[q].second, std::abs(c[q].second));
        }
    return out;
}

}  // namespace

ExpansionReport mean_curvature_expansion(const DelaunayProfile& prof, const std::vector<double>& eps,
                                         const TorusSweep& sw) {
    ExpansionReport r;
    r.name = "mean_curvature";
    r.expected_order = 2;
    const Grid2 grid = period_grid(prof, sw);
    for (double e : eps) {
        const TorusPatch T(prof, e);
        const auto s = grid_sups<1>(grid, sw.exec, [&](double t, double th) {
            const double x = prof.x(t);
            const double rem = 2.0 * x * x * mean_curvature(T, t, th) - 2.0 * x * x -
                               e * g_coefficient(prof, t) * std::sin(th);
            return std::array<std::pair<double, double>, 1>{{{rem, rem / (e * e * x * x)}}};
        });
        r.eps.push_back(e);
        r.remainder.push_back(s[0].first);
        r.weighted.push_back(s[0].second);
    }
    finish_richardson(r);
    return r;
}

std::vector<ExpansionReport> second_form_expansion(const DelaunayProfile& prof, const std::vector<double>& eps,
                                                   const TorusSweep& sw) {
    std::vector<ExpansionReport> out(3);
    const char* names[] = {"X_tt.N", "X_thth.N", "X_tth.N"};
    for (int q = 0; q < 3; ++q) {
        out[q].name = names[q];
        out[q].expected_order = 2;
    }
    const Grid2 grid = period_grid(prof, sw);
    const double g = prof.gamma();
    for (double e : eps) {
        const TorusPatch T(prof, e);
        const auto s = grid_sups<3>(grid, sw.exec, [&](double t, double th) {
            const auto p = prof.jet(t);
            const auto f = fundamental_forms(T, t, th);
            const double x = p.x, zp = p.zp, si = std::sin(th), co = std::cos(th);
            const double rL = f.L - (x * x + g) - e * (2 * x * x * x + x * zp - 2 * zp * zp * x) * si;
            const double rN = f.N - zp - e * (x * zp - zp * zp * zp / x) * si;
            const double rM = f.M - e * p.xp * zp * co;
            const double w = 1.0 / (e * e * x * x);
            return std::array<std::pair<double, double>, 3>{{{rL, rL * w}, {rN, rN * w}, {rM, rM * w}}};
        });
        for (int q = 0; q < 3; ++q) {
            out[q].eps.push_back(e);
            out[q].remainder.push_back(s[q].first);
            out[q].weighted.push_back(s[q].second);
        }
    }
    for (auto& r : out) finish_richardson(r);
    return out;
}

std::vector<ExpansionReport> normal_derivative_expansion(const DelaunayProfile& prof,
                                                         const std::vector<double>& eps, const TorusSweep& sw) {
    constexpr std::size_t K = 7;
    std::vector<ExpansionReport> out(K);
    const char* names[] = {"|N_t|^2", "|N_th|^2", "N_t.N_th", "N_tt.X_t", "N_tt.X_th", "N_thth.X_t", "N_thth.X_th"};
    const int orders[] = {2, 2, 1, 1, 1, 1, 1};
    for (std::size_t q = 0; q < K; ++q) {
        out[q].name = names[q];
        out[q].expected_order = orders[q];
    }
    const Grid2 grid = period_grid(prof, sw);
    const double g = prof.gamma();
    for (double e : eps) {
        const TorusPatch T(prof, e);
        const auto s = grid_sups<K>(grid, sw.exec, [&](double t, double th) {
            const auto p = prof.jet(t);
            const auto j = T.jet(t, th);
            const auto n = normal_jet(j);
            const double x = p.x, xp = p.xp, zp = p.zp, si = std::sin(th);
            const double xg = x + g / x;
            const double xm = x - g / x;
            std::array<double, K> r{};
            r[0] = n.Nt.squaredNorm() - xg * xg -
                   e * 2.0 * xg * (2 * xp * xp - 2 * zp * zp + zp * zp * zp / (x * x) + zp) * si;
            r[1] = n.Nth.squaredNorm() - xm * xm - e * 2.0 * zp * zp * xp * xp / (x * x * x) * si;
            r[2] = n.Nt.dot(n.Nth);
            r[3] = n.Ntt.dot(j.Xt) + xp * zp / x;
            r[4] = n.Ntt.dot(j.Xth);
            r[5] = n.Nthth.dot(j.Xt) - xp * zp / x;
            r[6] = n.Nthth.dot(j.Xth);
            std::array<std::pair<double, double>, K> o{};
            for (std::size_t q = 0; q < K; ++q) o[q] = {r[q], r[q] / (std::pow(e, orders[q]) * x)};
            return o;
        });
        for (std::size_t q = 0; q < K; ++q) {
            out[q].eps.push_back(e);
            out[q].remainder.push_back(s[q].first);
            out[q].weighted.push_back(s[q].second);
        }
    }
    for (auto& r : out) finish_richardson(r);
    return out;
}

double linearized_first_order(const DelaunayProfile& prof, const PhiJet& phi, double t, double th) {
    const auto p = prof.jet(t);
    const double x = p.x, xp = p.xp, zp = p.zp, g = prof.gamma();
    const double si = std::sin(th), co = std::cos(th);
    const double c_tt = -2.0 * zp * zp / x * si;
    const double c_t = (zp * zp * xp / (x * x) - 4.0 * zp * xp) * si;
    const double c_h = zp * zp / x * co;
    // Expanding the potential of 2x^2 dM/ds to first order with x'^2 = x^2 - z'^2.
    const double x2 = x * x, x6 = x2 * x2 * x2, g2 = g * g;
    const double c_0 = -2.0 * (5.0 * x6 * x2 - 4.0 * x6 - 6.0 * g * x6 - 2.0 * g2 * g * x2 + 3.0 * g2 * g2) /
                       (x2 * x) * si;
    return c_tt * phi.ftt + c_t * phi.ft + c_h * phi.fth + c_0 * phi.f;
}

ExpansionReport linearized_expansion(const DelaunayProfile& prof, const NormalPerturbation& phi,
                                     const std::vector<double>& eps, const TorusSweep& sw) {
    ExpansionReport r;
    r.name = "linearized_operator";
    r.expected_order = 2;
    const Grid2 grid = period_grid(prof, sw);
    for (double e : eps) {
        const TorusPatch T(prof, e);
        const auto s = grid_sups<1>(grid, sw.exec, [&](double t, double th) {
            const BasePoint b = base_point(T, t, th);
            const PhiJet f = phi(t, th);
            const double x = prof.x(t);
            const double full = 2.0 * x * x * fd_first_variation(b, f);
            const double lead = jacobi_apply(prof, f, t).op + e * linearized_first_order(prof, f, t, th);
            const double rem = full - lead;
            return std::array<std::pair<double, double>, 1>{{{rem, rem / (e * e * x)}}};
        });
        r.eps.push_back(e);
        r.remainder.push_back(s[0].first);
        r.weighted.push_back(s[0].second);
    }
    finish_richardson(r);
    return r;
}

}  // namespace delab
