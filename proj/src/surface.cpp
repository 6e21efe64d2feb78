#include "delab/surface.hpp"

#include <algorithm>
#include <cmath>

namespace delab {

FundamentalForms fundamental_forms(const SurfaceJet& j) {
    const Vec3 n = j.Xt.cross(j.Xth);
    const double r = n.norm();
    if (!(r >= kDegeneracyThreshold)) throw DegeneratePatch("degenerate patch: |X_t ^ X_th| below threshold");
    FundamentalForms f{};
    f.normal = n / r;
    f.E = j.Xt.dot(j.Xt);
    f.F = j.Xt.dot(j.Xth);
    f.G = j.Xth.dot(j.Xth);
    f.L = j.Xtt.dot(f.normal);
    f.M = j.Xtth.dot(f.normal);
    f.N = j.Xthth.dot(f.normal);
    return f;
}

FundamentalForms fundamental_forms(const SurfacePatch& p, double t, double th) {
    return fundamental_forms(p.jet(t, th));
}

double mean_curvature(const SurfaceJet& j) {
    const auto f = fundamental_forms(j);
    return (f.E * f.N - 2.0 * f.F * f.M + f.G * f.L) / (2.0 * (f.E * f.G - f.F * f.F));
}

double mean_curvature(const SurfacePatch& p, double t, double th) { return mean_curvature(p.jet(t, th)); }

NormalJet normal_jet(const SurfaceJet& j) {
    if (!j.has_third) throw std::invalid_argument("analytic normal derivatives need third derivatives");
    // n = X_t ^ X_th and its derivatives; N = n/r with r = |n|.
    const Vec3 n = j.Xt.cross(j.Xth);
    const Vec3 n_t = j.Xtt.cross(j.Xth) + j.Xt.cross(j.Xtth);
    const Vec3 n_h = j.Xtth.cross(j.Xth) + j.Xt.cross(j.Xthth);
    const Vec3 n_tt = j.Xttt.cross(j.Xth) + 2.0 * j.Xtt.cross(j.Xtth) + j.Xt.cross(j.Xttth);
    const Vec3 n_th = j.Xttth.cross(j.Xth) + j.Xtt.cross(j.Xthth) + j.Xt.cross(j.Xtthth);
    const Vec3 n_hh = j.Xtthth.cross(j.Xth) + 2.0 * j.Xtth.cross(j.Xthth) + j.Xt.cross(j.Xththth);
    const double r = n.norm();
    if (!(r >= kDegeneracyThreshold)) throw DegeneratePatch("degenerate patch: |X_t ^ X_th| below threshold");
    NormalJet q;
    q.N = n / r;
    const double r_t = q.N.dot(n_t);
    const double r_h = q.N.dot(n_h);
    q.Nt = (n_t - r_t * q.N) / r;
    q.Nth = (n_h - r_h * q.N) / r;
    const double r_tt = q.Nt.dot(n_t) + q.N.dot(n_tt);
    const double r_th = q.Nth.dot(n_t) + q.N.dot(n_th);
    const double r_hh = q.Nth.dot(n_h) + q.N.dot(n_hh);
    q.Ntt = (n_tt - 2.0 * r_t * q.Nt - r_tt * q.N) / r;
    q.Ntth = (n_th - r_t * q.Nth - r_h * q.Nt - r_th * q.N) / r;
    q.Nthth = (n_hh - 2.0 * r_h * q.Nth - r_hh * q.N) / r;
    return q;
}

namespace {

Vec3 unit_normal(const SurfacePatch& p, double t, double th) {
    const auto j = p.jet(t, th);
    const Vec3 n = j.Xt.cross(j.Xth);
    return n / n.norm();
}

// Central differences of the normal map, one Richardson level each.
NormalJet fd_normal_jet(const SurfacePatch& p, double t, double th) {
    auto N = [&](double dt, double dh) { return unit_normal(p, t + dt, th + dh); };
    NormalJet q;
    q.N = N(0, 0);
    auto d1 = [&](double h, bool along_t) {
        const Vec3 a = along_t ? N(h, 0) : N(0, h);
        const Vec3 b = along_t ? N(-h, 0) : N(0, -h);
        return Vec3((a - b) / (2.0 * h));
    };
    auto d2 = [&](double h, bool along_t) {
        const Vec3 a = along_t ? N(h, 0) : N(0, h);
        const Vec3 b = along_t ? N(-h, 0) : N(0, -h);
        return Vec3((a - 2.0 * q.N + b) / (h * h));
    };
    auto dm = [&](double h) { return Vec3((N(h, h) - N(h, -h) - N(-h, h) + N(-h, -h)) / (4.0 * h * h)); };
    const double h1 = 1e-4;
    const double h2 = 1e-3;
    q.Nt = (4.0 * d1(0.5 * h1, true) - d1(h1, true)) / 3.0;
    q.Nth = (4.0 * d1(0.5 * h1, false) - d1(h1, false)) / 3.0;
    q.Ntt = (4.0 * d2(0.5 * h2, true) - d2(h2, true)) / 3.0;
    q.Nthth = (4.0 * d2(0.5 * h2, false) - d2(h2, false)) / 3.0;
    q.Ntth = (4.0 * dm(0.5 * h2) - dm(h2)) / 3.0;
    return q;
}

}  // namespace

NormalJet normal_jet(const SurfacePatch& p, double t, double th) {
    const auto j = p.jet(t, th);
    if (j.has_third) return normal_jet(j);
    return fd_normal_jet(p, t, th);
}

IdentityReport identity_suite(const SurfacePatch& p, const std::vector<std::pair<double, double>>& sample) {
    IdentityReport rep;
    auto note = [&rep](double r, const char* name) {
        if (r > rep.max_residual) {
            rep.max_residual = r;
            rep.worst = name;
        }
    };
    for (const auto& [t, th] : sample) {
        const auto j = p.jet(t, th);
        const auto f = fundamental_forms(j);
        const auto q = normal_jet(p, t, th);
        const Vec3& N = q.N;
        const double et = std::sqrt(f.E);
        const double gt = std::sqrt(f.G);
        const Vec3 ht = j.Xt / et;
        const Vec3 hh = j.Xth / gt;
        const double E_th = 2.0 * j.Xtth.dot(j.Xt);
        const double G_t = 2.0 * j.Xtth.dot(j.Xth);

        note(std::abs(j.Xt.dot(j.Xth)), "X_t.X_th");
        note(std::abs(q.Nt.dot(N)), "N_t.N");
        note(std::abs(q.Nth.dot(N)), "N_th.N");
        note(std::abs(q.Ntt.dot(N) + q.Nt.squaredNorm()), "N_tt.N");
        note(std::abs(q.Nthth.dot(N) + q.Nth.squaredNorm()), "N_thth.N");
        note(std::abs(q.Ntth.dot(N) + q.Nt.dot(q.Nth)), "N_tth.N");
        note(std::abs(j.Xt.dot(q.Nth) + f.M), "X_t.N_th");
        note(std::abs(j.Xth.dot(q.Nt) + f.M), "X_th.N_t");
        note(std::abs(j.Xt.dot(q.Nt) + f.L), "X_t.N_t");
        note(std::abs(j.Xth.dot(q.Nth) + f.N), "X_th.N_th");
        note(std::abs(j.Xtt.dot(j.Xth) + 0.5 * E_th), "X_tt.X_th");
        note(std::abs(j.Xthth.dot(j.Xt) + 0.5 * G_t), "X_thth.X_t");
        note((j.Xt.cross(N) + et * hh).norm(), "X_t^N");
        note((N.cross(j.Xth) + gt * ht).norm(), "N^X_th");
        note((j.Xt.cross(q.Nth) + (et / gt) * f.N * N).norm(), "X_t^N_th");
        note((q.Nt.cross(j.Xth) + (gt / et) * f.L * N).norm(), "N_t^X_th");
        note((N.cross(q.Nth) - (f.N / gt) * ht + (f.M / et) * hh).norm(), "N^N_th");
        note((q.Nt.cross(N) + (f.M / gt) * ht - (f.L / et) * hh).norm(), "N_t^N");
        note((q.Nt.cross(q.Nth) - (f.L * f.N - f.M * f.M) / (et * gt) * N).norm(), "N_t^N_th");
    }
    return rep;
}

SurfaceJet RevolutionPatch::jet(double t, double th) const {
    const CurveJet c = curve_(t);
    const double co = std::cos(th);
    const double si = std::sin(th);
    SurfaceJet j;
    j.X = Vec3(c.x * co, c.x * si, c.z);
    j.Xt = Vec3(c.xp * co, c.xp * si, c.zp);
    j.Xth = Vec3(-c.x * si, c.x * co, 0.0);
    j.Xtt = Vec3(c.xpp * co, c.xpp * si, c.zpp);
    j.Xtth = Vec3(-c.xp * si, c.xp * co, 0.0);
    j.Xthth = Vec3(-c.x * co, -c.x * si, 0.0);
    j.has_third = true;
    j.Xttt = Vec3(c.xppp * co, c.xppp * si, c.zppp);
    j.Xttth = Vec3(-c.xpp * si, c.xpp * co, 0.0);
    j.Xtthth = Vec3(-c.xp * co, -c.xp * si, 0.0);
    j.Xththth = Vec3(c.x * si, -c.x * co, 0.0);
    return j;
}

RevolutionPatch sphere_patch() {
    return RevolutionPatch([](double t) {
        const double s = 1.0 / std::cosh(t);
        const double th = std::tanh(t);
        const double s2 = s * s;
        CurveJet c{};
        c.x = s;
        c.xp = -s * th;
        c.xpp = s * (1.0 - 2.0 * s2);
        c.xppp = s * th * (6.0 * s2 - 1.0);
        c.z = th;
        c.zp = s2;
        c.zpp = -2.0 * s2 * th;
        c.zppp = 4.0 * s2 * th * th - 2.0 * s2 * s2;
        return c;
    });
}

RevolutionPatch round_cylinder_patch(double r) {
    return RevolutionPatch([r](double t) { return CurveJet{r, 0.0, 0.0, 0.0, t, 1.0, 0.0, 0.0}; });
}

SurfaceJet MovedPatch::jet(double t, double th) const {
    SurfaceJet j = base_.jet(t + c_, th);
    j.X = rot_ * j.X + shift_;
    for (Vec3* v : {&j.Xt, &j.Xth, &j.Xtt, &j.Xtth, &j.Xthth, &j.Xttt, &j.Xttth, &j.Xtthth, &j.Xththth})
        *v = rot_ * *v;
    return j;
}

}  // namespace delab
