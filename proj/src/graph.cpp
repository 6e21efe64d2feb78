#include "delab/graph.hpp"

#include "delab/cylinder.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace delab {

SurfaceJet graph_jet(const SurfaceJet& b, const NormalJet& n, const PhiJet& p, double s) {
    SurfaceJet y;
    y.X = b.X + s * p.f * n.N;
    y.Xt = b.Xt + s * (p.ft * n.N + p.f * n.Nt);
    y.Xth = b.Xth + s * (p.fth * n.N + p.f * n.Nth);
    y.Xtt = b.Xtt + s * (p.ftt * n.N + 2.0 * p.ft * n.Nt + p.f * n.Ntt);
    y.Xtth = b.Xtth + s * (p.ftth * n.N + p.ft * n.Nth + p.fth * n.Nt + p.f * n.Ntth);
    y.Xthth = b.Xthth + s * (p.fthth * n.N + 2.0 * p.fth * n.Nth + p.f * n.Nthth);
    y.has_third = false;
    return y;
}

SurfaceJet GraphPatch::jet(double t, double th) const {
    return graph_jet(base_.jet(t, th), normal_jet(base_, t, th), phi_(t, th), s_);
}

BasePoint base_point(const SurfacePatch& p, double t, double th) {
    BasePoint b;
    b.X = p.jet(t, th);
    b.N = b.X.has_third ? normal_jet(b.X) : normal_jet(p, t, th);
    b.f = fundamental_forms(b.X);
    return b;
}

double graph_mean_curvature(const BasePoint& b, const PhiJet& phi, double s) {
    return mean_curvature(graph_jet(b.X, b.N, phi, s));
}

double first_variation(const BasePoint& b, const PhiJet& p) {
    const auto& f = b.f;
    const double E = f.E, G = f.G, L = f.L, M = f.M, N = f.N;
    const double Et = 2.0 * b.X.Xtt.dot(b.X.Xt);
    const double Eh = 2.0 * b.X.Xtth.dot(b.X.Xt);
    const double Gt = 2.0 * b.X.Xtth.dot(b.X.Xth);
    const double Gh = 2.0 * b.X.Xthth.dot(b.X.Xth);
    const double c0 = 2.0 * M * M / (E * G) - b.N.Nth.squaredNorm() / (2.0 * G) - b.N.Nt.squaredNorm() / (2.0 * E) +
                      L * L / (E * E) + N * N / (G * G);
    return p.ftt / (2.0 * E) + p.fthth / (2.0 * G) + (Gt / (4.0 * E * G) - Et / (4.0 * E * E)) * p.ft +
           (Eh / (4.0 * E * G) - Gh / (4.0 * G * G)) * p.fth + c0 * p.f;
}

double second_variation(const BasePoint& b, const PhiJet& p) {
    const auto& j = b.X;
    const auto& n = b.N;
    const double E = b.f.E, G = b.f.G, L = b.f.L, M = b.f.M, N = b.f.N;
    const double Et = 2.0 * j.Xtt.dot(j.Xt);
    const double Eh = 2.0 * j.Xtth.dot(j.Xt);
    const double Gt = 2.0 * j.Xtth.dot(j.Xth);
    const double Gh = 2.0 * j.Xthth.dot(j.Xth);
    const double E2 = E * E, G2 = G * G, EG = E * G;
    const double Nt2 = n.Nt.squaredNorm();
    const double Nh2 = n.Nth.squaredNorm();

    const double c_tt2 = 0.5 * L / E2 - 0.5 * N / EG;
    const double c_hh2 = -0.5 * L / EG + 0.5 * N / G2;
    const double c_00 = -6.0 * n.Nt.dot(n.Nth) * M / EG + 12.0 * L * M * M / (E2 * G) + 12.0 * N * M * M / (E * G2) -
                        3.0 * L * Nt2 / E2 - 3.0 * N * Nh2 / G2 + 4.0 * L * L * L / (E2 * E) +
                        4.0 * N * N * N / (G2 * G);
    const double c_th = 2.0 * M / EG;
    const double c_0t = -n.Nthth.dot(j.Xt) / EG - n.Ntt.dot(j.Xt) / E2 - 1.5 * L * Et / (E2 * E) + N * Gt / (E * G2) +
                        0.5 * L * Gt / (E2 * G) - 0.5 * M * Gh / (E * G2) - 1.5 * M * Eh / (E2 * G);
    const double c_0h = -n.Ntt.dot(j.Xth) / EG - n.Nthth.dot(j.Xth) / G2 - 1.5 * N * Gh / (G2 * G) +
                        L * Eh / (E2 * G) + 0.5 * N * Eh / (E * G2) - 0.5 * M * Et / (E2 * G) -
                        1.5 * M * Gt / (E * G2);
    return c_tt2 * p.ft * p.ft + c_hh2 * p.fth * p.fth + c_00 * p.f * p.f + c_th * p.ft * p.fth +
           c_0t * p.f * p.ft + c_0h * p.f * p.fth + 2.0 * N / G2 * p.f * p.fthth + 2.0 * L / E2 * p.f * p.ftt +
           4.0 * M / EG * p.f * p.ftth;
}

double first_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th) {
    return first_variation(base_point(p, t, th), phi(t, th));
}

double second_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th) {
    return second_variation(base_point(p, t, th), phi(t, th));
}

double fd_first_variation(const BasePoint& b, const PhiJet& phi, double h) {
    auto d = [&](double s) { return (graph_mean_curvature(b, phi, s) - graph_mean_curvature(b, phi, -s)) / (2.0 * s); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

double fd_second_variation(const BasePoint& b, const PhiJet& phi, double h) {
    const double m0 = graph_mean_curvature(b, phi, 0.0);
    auto d = [&](double s) {
        return (graph_mean_curvature(b, phi, s) - 2.0 * m0 + graph_mean_curvature(b, phi, -s)) / (s * s);
    };
    const double d0 = d(h), d1 = d(0.5 * h), d2 = d(0.25 * h);
    const double r0 = (4.0 * d1 - d0) / 3.0;
    const double r1 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
}

double fd_first_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th) {
    return fd_first_variation(base_point(p, t, th), phi(t, th));
}

double fd_second_variation(const SurfacePatch& p, const NormalPerturbation& phi, double t, double th) {
    return fd_second_variation(base_point(p, t, th), phi(t, th));
}

AreaFactor normal_area_factor(const BasePoint& b, const PhiJet& phi) {
    const SurfaceJet y = graph_jet(b.X, b.N, phi, 1.0);
    const double scale = std::sqrt(b.f.E * b.f.G);
    AreaFactor out;
    out.direct = y.Xt.cross(y.Xth).dot(b.N.N) / scale;
    const double K = (b.f.L * b.f.N - b.f.M * b.f.M) / (b.f.E * b.f.G);
    out.formula = 1.0 - 2.0 * mean_curvature(b.X) * phi.f + K * phi.f * phi.f;
    return out;
}

SphereFunction sphere_function(const std::string& id, double constant) {
    if (id == "const") return {id, [constant](const Vec3&) { return constant; }};
    if (id == "coord1") return {id, [](const Vec3& u) { return u.x(); }};
    if (id == "coord2") return {id, [](const Vec3& u) { return u.y(); }};
    if (id == "coord3") return {id, [](const Vec3& u) { return u.z(); }};
    if (id == "zonal2") return {id, [](const Vec3& u) { return 1.5 * u.y() * u.y() - 0.5; }};
    if (id == "mixed12") return {id, [](const Vec3& u) { return u.x() * u.y(); }};
    throw std::invalid_argument("unknown sphere function: " + id);
}

double PrescribedCurvature::operator()(const Vec3& X) const {
    const double r = X.norm();
    double h = 1.0 + A.value(X / r) / std::pow(r, beta);
    if (H1) h += H1(X) / std::pow(r, beta + nu);
    return h;
}

Vec3 PrescribedCurvature::gradient(const Vec3& X) const {
    const double h = 1e-4 * std::max(1.0, X.norm());
    Vec3 g;
    for (int i = 0; i < 3; ++i) {
        auto d = [&](double s) {
            Vec3 p = X, m = X;
            p[i] += s;
            m[i] -= s;
            return ((*this)(p) - (*this)(m)) / (2.0 * s);
        };
        g[i] = (4.0 * d(0.5 * h) - d(h)) / 3.0;
    }
    return g;
}

PrescribedCurvature prescribed_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    PrescribedCurvature H;
    H.A = sphere_function(j.value("A", std::string("const")), j.value("A0", 1.0));
    H.beta = j.value("beta", 1.0);
    H.nu = j.value("nu", 1.0);
    if (!(H.beta > 0.0) || !(H.nu > 0.0)) throw std::invalid_argument("beta and nu must be positive");
    if (j.contains("H1")) {
        const double c = j.at("H1").get<double>();
        H.H1 = [c](const Vec3&) { return c; };
    }
    return H;
}

double second_variation_limit(const DelaunayProfile& prof, const PhiJet& p, double t) {
    const double x = prof.x(t);
    const double xp = prof.xp(t);
    const double g = prof.gamma();
    const double x2 = x * x, x4 = x2 * x2;
    const double L = x2 + g, N = x2 - g;
    return g / x4 * (p.ft * p.ft - p.fth * p.fth) + (L * L * L + N * N * N) / (x4 * x2) * p.f * p.f +
           2.0 * L / x4 * p.f * p.ftt + 2.0 * N / x4 * p.f * p.fthth - 4.0 * g * xp / (x4 * x) * p.f * p.ft;
}

namespace {

Grid2 period_grid(const DelaunayProfile& prof, const TorusSweep& sw) {
    return Grid2{-prof.tau(), prof.tau(), sw.nt, sw.nth};
}

double weighted_c2(const DelaunayProfile& prof, const NormalPerturbation& phi, const Grid2& grid, Exec exec) {
    return max_abs(sweep(grid.size(), [&](std::size_t k) {
        const double t = grid.t(grid.it(k));
        const PhiJet f = phi(t, grid.th(grid.ith(k)));
        const double grad = std::hypot(f.ft, f.fth);
        const double hess = std::sqrt(f.ftt * f.ftt + 2.0 * f.ftth * f.ftth + f.fthth * f.fthth);
        return (std::abs(f.f) + grad + hess) / prof.x(t);
    }, exec));
}

double max_ratio(const std::vector<double>& v) {
    double r = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) r = std::max(r, v[i] / v[i + 1]);
    return r;
}

}  // namespace

ExpansionReport torus_second_variation_expansion(const DelaunayProfile& prof, const NormalPerturbation& phi,
                                                 const std::vector<double>& eps, const TorusSweep& sw) {
    ExpansionReport r;
    r.name = "second_variation";
    r.expected_order = 1;
    const Grid2 grid = period_grid(prof, sw);
    for (double e : eps) {
        const TorusPatch T(prof, e);
        std::vector<std::pair<double, double>> cells(grid.size());
        for_index(grid.size(), [&](std::size_t k) {
            const double t = grid.t(grid.it(k));
            const double th = grid.th(grid.ith(k));
            const PhiJet f = phi(t, th);
            const double rem = second_variation(base_point(T, t, th), f) - second_variation_limit(prof, f, t);
            const double x = prof.x(t);
            cells[k] = {rem, x * x * x * rem / e};
        }, sw.exec);
        double raw = 0.0, w = 0.0;
        for (const auto& c : cells) {
            raw = std::max(raw, std::abs(c.first));
            w = std::max(w, std::abs(c.second));
        }
        r.eps.push_back(e);
        r.remainder.push_back(raw);
        r.weighted.push_back(w);
    }
    finish_richardson(r);
    return r;
}

GraphExpansionReport graph_expansion_residual(const DelaunayProfile& prof, const PhiFactory& phi,
                                              const PerturbationBallSpec& spec, const std::vector<double>& eps,
                                              const TorusSweep& sw) {
    GraphExpansionReport out;
    out.rem.name = "graph_expansion";
    out.rem.expected_order = static_cast<int>(std::lround(2.0 * spec.beta));
    out.min_margin = std::numeric_limits<double>::infinity();
    const Grid2 grid = period_grid(prof, sw);
    for (double e : eps) {
        const TorusPatch T(prof, e);
        const NormalPerturbation ph = phi(e);
        if (weighted_c2(prof, ph, grid, sw.exec) > spec.R * std::pow(e, spec.beta) * (1.0 + 1e-12))
            out.in_ball = false;
        std::vector<std::pair<double, double>> cells(grid.size());
        for_index(grid.size(), [&](std::size_t k) {
            const double t = grid.t(grid.it(k));
            const double th = grid.th(grid.ith(k));
            const BasePoint b = base_point(T, t, th);
            const PhiJet f = ph(t, th);
            const double x2 = b.X.Xth.squaredNorm();
            const double num = 2.0 * x2 * (graph_mean_curvature(b, f, 1.0) - mean_curvature(b.X)) -
                               2.0 * x2 * fd_first_variation(b, f);
            cells[k] = {num, normal_area_factor(b, f).direct};
        }, sw.exec);
        double raw = 0.0;
        for (const auto& c : cells) {
            raw = std::max(raw, std::abs(c.first));
            out.min_margin = std::min(out.min_margin, c.second);
        }
        out.rem.eps.push_back(e);
        out.rem.remainder.push_back(raw);
        out.rem.weighted.push_back(raw / std::pow(e, 2.0 * spec.beta));
        out.h_sup.push_back(raw / std::pow(e, 2.0 * spec.beta));
    }
    finish_richardson(out.rem);
    out.h_ratio = max_ratio(out.h_sup);
    out.pass = out.in_ball && out.min_margin > 0.0 && out.h_ratio <= 1.5;
    return out;
}

double regularity_margin(const SurfacePatch& base, const NormalPerturbation& phi, double t0, double t1,
                         std::size_t nt, std::size_t nth) {
    const Grid2 grid{t0, t1, nt, nth};
    const auto v = sweep(grid.size(), [&](std::size_t k) {
        const double t = grid.t(grid.it(k));
        const double th = grid.th(grid.ith(k));
        return normal_area_factor(base_point(base, t, th), phi(t, th)).direct;
    });
    return *std::min_element(v.begin(), v.end());
}

PrescribedReport prescribed_expansion_residual(const DelaunayProfile& prof, const PrescribedCurvature& H,
                                               const PhiFactory& phi, const PerturbationBallSpec& spec,
                                               const std::vector<double>& eps, const TorusSweep& sw) {
    PrescribedReport out;
    const double order = H.beta + H.nu_tilde();
    bool in_ball = true;
    const Grid2 grid = period_grid(prof, sw);
    for (double e : eps) {
        const TorusPatch T(prof, e);
        const NormalPerturbation ph = phi(e);
        if (weighted_c2(prof, ph, grid, sw.exec) > spec.R * std::pow(e, spec.beta) * (1.0 + 1e-12)) in_ball = false;
        const double eb = std::pow(e, H.beta);
        std::vector<std::array<double, 2>> cells(grid.size());
        for_index(grid.size(), [&](std::size_t k) {
            const double t = grid.t(grid.it(k));
            const double th = grid.th(grid.ith(k));
            const SurfaceJet j = T.jet(t, th);
            const NormalJet n = normal_jet(j);
            const PhiJet f = ph(t, th);
            const double x2 = j.Xth.squaredNorm();
            const Vec3 Y = j.X + f.f * n.N;
            const double num = 2.0 * x2 * H(Y) - 2.0 * x2 - 2.0 * x2 * eb * H.A.value(j.X.normalized());
            const double grad = 2.0 * x2 * H.gradient(j.X).dot(n.N) * f.f;
            cells[k] = {num, grad};
        }, sw.exec);
        double raw = 0.0, g = 0.0;
        for (const auto& c : cells) {
            raw = std::max(raw, std::abs(c[0]));
            g = std::max(g, std::abs(c[1]));
        }
        out.eps.push_back(e);
        out.remainder.push_back(raw);
        out.xi_sup.push_back(raw / std::pow(e, order));
        out.grad_term.push_back(g / std::pow(e, 2.0 * H.beta + 1.0));
    }
    out.xi_ratio = max_ratio(out.xi_sup);
    const std::size_t m = out.remainder.size();
    if (m >= 2 && out.remainder[m - 1] > 0.0) out.order_estimate = std::log2(out.remainder[m - 2] / out.remainder[m - 1]);
    const double grad_ratio = max_ratio(out.grad_term);
    out.pass = in_ball && out.xi_ratio <= 1.5 && grad_ratio <= 1.5;
    return out;
}

}  // namespace delab
