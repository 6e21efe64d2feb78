#include "delab/suites.hpp"

#include "delab/cylinder.hpp"
#include "delab/graph.hpp"
#include "delab/probe.hpp"
#include "delab/quadrature.hpp"
#include "delab/report.hpp"
#include "delab/torus.hpp"

#include <json.hpp>

#include <algorithm>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

namespace delab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string kv(std::initializer_list<std::pair<const char*, double>> items) {
    std::string s;
    for (const auto& [k, v] : items) {
        if (!s.empty()) s += ';';
        s += k;
        s += '=';
        s += fmt_double(v);
    }
    return s;
}

struct Rows {
    std::vector<CheckRow> v;
    void add(std::string id, std::string params, double value, double bound, bool pass,
             double order = std::numeric_limits<double>::quiet_NaN()) {
        v.push_back({std::move(id), std::move(params), value, bound, order, pass});
    }
    // Passes when value <= bound (and value is a number).
    void below(std::string id, std::string params, double value, double bound) {
        add(std::move(id), std::move(params), value, bound, value <= bound);
    }
    void append(const std::vector<CheckRow>& other) { v.insert(v.end(), other.begin(), other.end()); }
};

double sech(double t) { return 1.0 / std::cosh(t); }

using Radial = std::function<std::array<double, 3>(double)>;

Radial gauss(double c, double s) {
    return [c, s](double t) {
        const double u = t - c;
        const double f = std::exp(-u * u / s);
        return std::array<double, 3>{f, -2.0 * u / s * f, (4.0 * u * u / (s * s) - 2.0 / s) * f};
    };
}

Radial sech_pow(double p, double c) {
    return [p, c](double t) {
        const double u = t - c;
        const double f = std::pow(sech(u), p);
        const double th = std::tanh(u);
        const double s2 = sech(u) * sech(u);
        return std::array<double, 3>{f, -p * f * th, f * (p * p * th * th - p * s2)};
    };
}

Radial t_gauss() {
    return [](double t) {
        const double e = std::exp(-t * t);
        return std::array<double, 3>{t * e, e * (1.0 - 2.0 * t * t), e * (4.0 * t * t * t - 6.0 * t)};
    };
}

// Smooth bump supported in |t - c| < w.
Radial bump(double c, double w) {
    return [c, w](double t) {
        const double u = (t - c) / w;
        if (std::abs(u) >= 1.0) return std::array<double, 3>{0.0, 0.0, 0.0};
        const double q = 1.0 - u * u;
        const double b = std::exp(-1.0 / q);
        const double f = -2.0 * u / (q * q);
        const double fp = -2.0 / (q * q) - 8.0 * u * u / (q * q * q);
        return std::array<double, 3>{b, b * f / w, b * (f * f + fp) / (w * w)};
    };
}

NormalPerturbation sep(Radial f, double m, double phase = 0.0) {
    return NormalPerturbation::separable(std::move(f), m, phase);
}

// sin th written as cos(th - pi/2).
constexpr double kSin = -kPi / 2.0;

// Ten fields decaying at least like sech t, used for the limit-kernel orthogonality.
std::vector<NormalPerturbation> admissible_fields() {
    return {
        sep(gauss(0, 1), 0) + sep(gauss(0, 1), 1),
        sep(sech_pow(2, 0), 1, kSin),
        sep(sech_pow(2, 0), 0),
        sep(t_gauss(), 2),
        sep(sech_pow(3, 0), 1),
        sep(gauss(0, 2), 3, kSin),
        sep(sech_pow(2, 1), 0) + sep(sech_pow(2, 1), 1, kSin),
        sep(gauss(0.5, 1), 1) + sep(gauss(0.5, 1), 2, kSin),
        sep(sech_pow(4, 0), 2),
        sep(sech_pow(2.5, -0.7), 1, 0.3),
    };
}

Grid2 period_grid(const DelaunayProfile& prof, const RunConfig& cfg) { return {-prof.tau(), prof.tau(), cfg.nt, cfg.nth}; }

std::vector<std::pair<double, double>> sample_points(double t0, double t1, int nt, int nth) {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nth; ++j)
            s.emplace_back(t0 + (t1 - t0) * i / (nt - 1), -kPi + 2.0 * kPi * (j + 0.5) / nth);
    return s;
}

std::vector<double> halving(double e0) { return {e0, e0 / 2.0, e0 / 4.0}; }

void require_small_eps(double e) {
    if (!(e > 0.0 && e <= 0.05)) throw std::invalid_argument("expansion checks need 0 < eps <= 0.05");
}

// ----- profile ---------------------------------------------------------------

void profile_rows(Rows& r, const RunConfig& cfg, const DelaunayProfile& prof) {
    const std::string p = kv({{"a", prof.a()}});
    const Grid2 g = period_grid(prof, cfg);
    const CylinderPatch C(prof);
    r.below("profile.cmc", p, max_abs(sweep(g.size(), [&](std::size_t k) {
        return mean_curvature(C, g.t(g.it(k)), g.th(g.ith(k))) - 1.0;
    }, cfg.exec)), 1e-8);

    const double tau = prof.tau(), h = prof.h();
    const Grid2 line{-tau, tau, cfg.nt, 1};
    r.below("profile.conformality", p, max_abs(sweep(line.nt, [&](std::size_t i) {
        const auto j = prof.jet(line.t(i));
        const auto f = fundamental_forms(C, line.t(i), 0.3);
        return std::max({std::abs(j.xp * j.xp + j.zp * j.zp - j.x * j.x), std::abs(f.E - f.G), std::abs(f.F)});
    }, cfg.exec)), 1e-10);
    r.below("profile.periodicity", p, max_abs(sweep(line.nt, [&](std::size_t i) {
        const double t = line.t(i);
        return std::max(std::abs(prof.x(t + 2.0 * tau) - prof.x(t)),
                        std::abs(prof.z(t + 2.0 * tau) - prof.z(t) - 2.0 * h));
    }, cfg.exec)), 1e-10);
    const double hq = gl_composite([&](double t) { return prof.zp(t); }, 0.0, tau, 0.05);
    r.below("profile.height", p, std::abs(h - hq), 1e-10);

    const auto samples = integrate_profile_oracle(prof.a(), 2.0 * tau, cfg.tol);
    double dev = 0.0;
    for (const auto& s : samples)
        dev = std::max({dev, std::abs(prof.x(s.t) - s.x), std::abs(prof.xp(s.t) - s.xp), std::abs(prof.z(s.t) - s.z)});
    r.below("profile.oracle", kv({{"a", prof.a()}, {"tol", cfg.tol}}), dev, 10.0 * cfg.tol);
}

void asymptotic_rows(Rows& r) {
    const std::vector<double> grid = {-1e-2, -1e-3, -1e-4, -1e-5, 1e-2, 1e-3, 1e-4, 1e-5};
    const auto rep = asymptotic_checks(grid);
    r.below("profile.asymptotic.tau", kv({{"a", -1e-5}}), rep.tau_devs[3], 1e-3);
    r.below("profile.asymptotic.height", "a=+-1e-2..1e-5", rep.h_quot, 2.0);
}

// ----- surface ---------------------------------------------------------------

void surface_rows(Rows& r, const RunConfig& cfg, const DelaunayProfile& prof) {
    const auto s = sample_points(-prof.tau(), prof.tau(), 11, 8);
    const CylinderPatch C(prof);
    r.below("surface.identities.cylinder", kv({{"a", prof.a()}}), identity_suite(C, s).max_residual, 1e-9);
    const TorusPatch T(prof, cfg.epsilon());
    r.below("surface.identities.torus", kv({{"a", prof.a()}, {"eps", cfg.epsilon()}}),
            identity_suite(T, s).max_residual, 1e-9);
    const auto sphere = sphere_patch();
    const auto ss = sample_points(-3.0, 3.0, 13, 8);
    r.below("surface.identities.sphere", "", identity_suite(sphere, ss).max_residual, 1e-9);
    double m = 0.0;
    for (const auto& [t, th] : ss) m = std::max(m, std::abs(mean_curvature(sphere, t, th) - 1.0));
    r.below("surface.sphere_mean_curvature", "", m, 1e-12);
}

// ----- torus -----------------------------------------------------------------

void torus_invariant_rows(Rows& r, const RunConfig& cfg, const DelaunayProfile& prof) {
    const double e = cfg.epsilon();
    const std::string p = kv({{"a", prof.a()}, {"eps", e}});
    const TorusPatch T = cfg.n && !cfg.eps ? TorusPatch::closed(prof, *cfg.n) : TorusPatch(prof, e);
    const Grid2 g = period_grid(prof, cfg);
    std::vector<std::array<double, 4>> cells(g.size());
    for_index(g.size(), [&](std::size_t k) {
        const double t = g.t(g.it(k)), th = g.th(g.ith(k));
        const auto j = T.jet(t, th);
        const auto q = prof.jet(t);
        const double s = std::sin(th);
        const double noconf = j.Xt.squaredNorm() - j.Xth.squaredNorm() -
                              q.zp * q.zp * ((1.0 + e * q.x * s) * (1.0 + e * q.x * s) - 1.0);
        const double area = j.Xt.cross(j.Xth).norm() -
                            q.x * q.x * std::sqrt(1.0 + 2.0 * e * q.zp * q.zp * s / q.x + e * e * q.zp * q.zp * s * s);
        const double modulus = j.X.norm() - std::sqrt(1.0 + 2.0 * e * q.x * s + e * e * q.x * q.x) / e;
        cells[k] = {std::abs(j.Xt.dot(j.Xth)), std::abs(noconf), std::abs(area), std::abs(modulus)};
    }, cfg.exec);
    std::array<double, 4> m{};
    for (const auto& c : cells)
        for (int i = 0; i < 4; ++i) m[i] = std::max(m[i], c[i]);
    r.below("torus.orthogonality", p, m[0], 1e-10);
    r.below("torus.nonconformality", p, m[1], 1e-10);
    r.below("torus.area_element", p, m[2], 1e-10);
    r.below("torus.modulus", p, m[3], 1e-10);

    if (T.param().n) {
        const int n = *T.param().n;
        const Mat3 Rn = TorusPatch::R(2.0 * kPi / n);
        double d = std::abs(T.epsilon() * n * prof.h() - kPi);
        for (const auto& [t, th] : sample_points(-prof.tau(), prof.tau(), 21, 16)) {
            const auto a = T.jet(t, th);
            const auto b = T.jet(t + 2.0 * prof.tau(), th);
            d = std::max({d, (b.X - Rn * a.X).norm(), (normal_jet(b).N - Rn * normal_jet(a).N).norm()});
        }
        r.below("torus.discrete_symmetry", kv({{"a", prof.a()}, {"n", n}}), d, 1e-10);
    }

    // X_eps - e2/eps -> X_a on a compact set.
    const CylinderPatch C(prof);
    std::vector<double> dev;
    for (double ee : {1e-2, 1e-3, 1e-4}) {
        const TorusPatch Te(prof, ee);
        double m2 = 0.0;
        for (const auto& [t, th] : sample_points(-prof.tau(), prof.tau(), 41, 16)) {
            const Vec3 d = Te.jet(t, th).X - Vec3(0.0, 1.0 / ee, 0.0) - C.jet(t, th).X;
            m2 = std::max(m2, d.norm());
        }
        dev.push_back(m2);
    }
    r.add("torus.translation_limit", kv({{"a", prof.a()}, {"eps", 1e-4}}), dev[2], dev[0],
          dev[0] > dev[1] && dev[1] > dev[2]);
}

void torus_fixed_rows(Rows& r, const RunConfig& cfg) {
    const DelaunayProfile half(-0.5);
    const double e = 1e-3;
    const TorusPatch T(half, e);
    const Grid2 g = period_grid(half, cfg);
    r.below("torus.round_oracle", kv({{"a", -0.5}, {"eps", e}}), max_abs(sweep(g.size(), [&](std::size_t k) {
        const double s = std::sin(g.th(g.ith(k)));
        return mean_curvature(T, g.t(g.it(k)), g.th(g.ith(k))) - (1.0 + e * s) / (1.0 + 0.5 * e * s);
    }, cfg.exec)), 1e-9);

    double gh = 0.0;
    for (double t : {-1.0, 0.0, 0.7, 2.5}) gh = std::max(gh, std::abs(g_coefficient(half, t) - 0.25));
    r.below("torus.g_half", kv({{"a", -0.5}}), gh, 1e-10);

    std::vector<double> dev;
    for (double a : {-1e-3, -1e-5}) {
        const DelaunayProfile P(a);
        double m = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = -5.0 + 0.01 * i;
            m = std::max(m, std::abs(g_coefficient(P, t) - g_limit(t)));
        }
        dev.push_back(m);
    }
    r.add("torus.g_limit", kv({{"a", -1e-3}}), dev[0], 5e-2, dev[0] < 5e-2);
    r.add("torus.g_limit", kv({{"a", -1e-5}}), dev[1], dev[0], dev[1] < dev[0]);
}

NormalPerturbation linearized_test_field(const DelaunayProfile& prof) {
    const double w = kPi / prof.tau();
    return sep([w](double t) {
        return std::array<double, 3>{std::sin(w * t), w * std::cos(w * t), -w * w * std::sin(w * t)};
    }, 1, kSin);
}

PhiFactory ball_field(const DelaunayProfile& prof, const RunConfig& cfg) {
    // R eps^beta x sin th / c, with c its weighted norm at unit amplitude, so the
    // field sits on the boundary of the ball up to the 0.99 margin.
    const Grid2 g{-prof.tau(), prof.tau(), cfg.nt, cfg.nth};
    double c = 0.0;
    for (std::size_t i = 0; i < g.nt; ++i) {
        const double t = g.t(i);
        const double x = prof.x(t), xp = prof.xp(t), xpp = prof.xpp(t);
        for (std::size_t j = 0; j < g.nth; ++j) {
            const double th = g.th(j);
            const double s = std::sin(th), co = std::cos(th);
            const double grad = std::hypot(xp * s, x * co);
            const double hess = std::sqrt(xpp * s * xpp * s + 2.0 * xp * co * xp * co + x * s * x * s);
            c = std::max(c, (std::abs(x * s) + grad + hess) / x);
        }
    }
    const double R = cfg.R, beta = cfg.beta;
    return [&prof, R, beta, c](double e) {
        const double amp = 0.99 * R * std::pow(e, beta) / c;
        return sep([&prof, amp](double t) {
            return std::array<double, 3>{amp * prof.x(t), amp * prof.xp(t), amp * prof.xpp(t)};
        }, 1, kSin);
    };
}

void report_rows(Rows& r, const std::string& prefix, const std::string& p, const ExpansionReport& rep) {
    r.add(prefix + rep.name, p, rep.weighted.back(), rep.expected_order, rep.pass, rep.order_estimate);
}

std::vector<ExpansionReport> torus_expansions(const RunConfig& cfg, const DelaunayProfile& prof) {
    const double e0 = cfg.epsilon();
    require_small_eps(e0);
    const auto eps = halving(e0);
    const TorusSweep sw{cfg.nt, cfg.nth, cfg.exec};
    std::vector<ExpansionReport> out;
    out.push_back(mean_curvature_expansion(prof, eps, sw));
    for (auto& x : second_form_expansion(prof, eps, sw)) out.push_back(std::move(x));
    for (auto& x : normal_derivative_expansion(prof, eps, sw)) out.push_back(std::move(x));
    out.push_back(linearized_expansion(prof, linearized_test_field(prof), eps, sw));
    out.push_back(torus_second_variation_expansion(prof, sep([](double) { return std::array<double, 3>{1, 0, 0}; }, 1, kSin),
                                                   eps, sw));
    return out;
}

// ----- graph -----------------------------------------------------------------

struct Case {
    std::string label;
    std::shared_ptr<SurfacePatch> patch;
    NormalPerturbation phi;
    double t, th;
};

std::vector<Case> variation_cases(std::size_t count) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::vector<std::shared_ptr<SurfacePatch>> patches;
    std::vector<std::string> labels;
    patches.push_back(std::make_shared<RevolutionPatch>(sphere_patch()));
    labels.push_back("sphere");
    for (double a : {-0.4, -0.1, 0.2}) {
        patches.push_back(std::make_shared<CylinderPatch>(DelaunayProfile(a)));
        labels.push_back("cylinder a=" + fmt_double(a));
    }
    for (double e : {1e-2, 1e-3}) {
        patches.push_back(std::make_shared<TorusPatch>(DelaunayProfile(-0.1), e));
        labels.push_back("torus a=-0.1 eps=" + fmt_double(e));
    }
    std::vector<Case> cases;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t k = i % patches.size();
        const double amp = 0.2 + 1.8 * U(rng);
        const double c = -1.0 + 2.0 * U(rng);
        const double m = std::floor(4.0 * U(rng));
        const double ph = 2.0 * kPi * U(rng);
        NormalPerturbation phi = (i % 2 == 0) ? sep(sech_pow(1.0 + 2.0 * U(rng), c), m, ph).scaled(amp)
                                              : sep(gauss(c, 0.5 + U(rng)), m, ph).scaled(amp);
        phi = phi + NormalPerturbation::constant(0.5 * U(rng) - 0.25);
        const double t = -1.5 + 3.0 * U(rng);
        const double th = -kPi + 2.0 * kPi * U(rng);
        cases.push_back({labels[k], patches[k], std::move(phi), t, th});
    }
    return cases;
}

double rel_err(double v, double ref) { return std::abs(v - ref) / std::max(std::abs(ref), 1.0); }

struct VariationErrors {
    double first = 0.0, second = 0.0, area = 0.0, polar = 0.0;
};

VariationErrors variation_errors(std::size_t count, Exec exec) {
    const auto cases = variation_cases(count);
    std::vector<VariationErrors> e(cases.size());
    for_index(cases.size(), [&](std::size_t i) {
        const auto& c = cases[i];
        const BasePoint b = base_point(*c.patch, c.t, c.th);
        const PhiJet f = c.phi(c.t, c.th);
        e[i].first = rel_err(first_variation(b, f), fd_first_variation(b, f));
        e[i].second = rel_err(second_variation(b, f), fd_second_variation(b, f));
        const auto af = normal_area_factor(b, f);
        e[i].area = std::abs(af.direct - af.formula);

        // Q(f+g) - Q(f) - Q(g) against twice the mixed s-r derivative.
        const PhiJet g = cases[(i + 1) % cases.size()].phi(c.t, c.th);
        auto sum = [](const PhiJet& p, double s, const PhiJet& q, double r) {
            return PhiJet{s * p.f + r * q.f,       s * p.ft + r * q.ft,     s * p.fth + r * q.fth,
                          s * p.ftt + r * q.ftt,   s * p.ftth + r * q.ftth, s * p.fthth + r * q.fthth};
        };
        const double h = 1e-4;
        auto Mx = [&](double s, double r) { return graph_mean_curvature(b, sum(f, s, g, r), 1.0); };
        const double mixed = (Mx(h, h) - Mx(h, -h) - Mx(-h, h) + Mx(-h, -h)) / (4.0 * h * h);
        const double polar = second_variation(b, sum(f, 1, g, 1)) - second_variation(b, f) - second_variation(b, g);
        e[i].polar = rel_err(polar, 2.0 * mixed);
    }, exec);
    VariationErrors m;
    for (const auto& x : e) {
        m.first = std::max(m.first, x.first);
        m.second = std::max(m.second, x.second);
        m.area = std::max(m.area, x.area);
        m.polar = std::max(m.polar, x.polar);
    }
    return m;
}

void graph_rows(Rows& r, const RunConfig& cfg, const DelaunayProfile& prof) {
    const auto ve = variation_errors(50, cfg.exec);
    r.below("graph.first_variation_vs_fd", "cases=50", ve.first, 1e-6);
    r.below("graph.second_variation_vs_fd", "cases=50", ve.second, 1e-5);
    r.below("graph.area_factor_identity", "cases=50", ve.area, 1e-9);
    r.below("graph.polarization", "cases=50", ve.polar, 1e-4);

    const auto sphere = sphere_patch();
    const auto one = NormalPerturbation::constant(1.0);
    r.below("graph.sphere_first_variation", "phi=1", std::abs(first_variation(sphere, one, 0.4, 1.1) - 1.0), 1e-9);
    r.below("graph.sphere_second_variation", "phi=1", std::abs(second_variation(sphere, one, 0.4, 1.1) - 2.0), 1e-8);

    // Cylinder: the generic first variation reproduces the Jacobi operator.
    {
        const CylinderPatch C(prof);
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        double m = 0.0;
        for (int i = 0; i < 5; ++i) {
            const auto phi = sep(bump(-0.5 + U(rng), 1.0 + U(rng)), std::floor(3.0 * U(rng)), U(rng));
            for (const auto& [t, th] : sample_points(-1.0, 1.0, 9, 8)) {
                const double x = prof.x(t);
                m = std::max(m, std::abs(jacobi_apply(prof, phi(t, th), t).op / (2.0 * x * x) -
                                         first_variation(C, phi, t, th)));
            }
        }
        r.below("graph.jacobi_vs_first_variation", kv({{"a", prof.a()}}), m, 1e-7);
    }
    {
        const DelaunayProfile half(-0.5);
        const CylinderPatch C(half);
        double m = 0.0;
        for (double c : {-0.7, 0.3, 0.9, 2.0})
            m = std::max(m, std::abs(normal_area_factor(base_point(C, 0.3, 0.5), {c}).direct - (1.0 - 2.0 * c)));
        r.below("graph.area_factor_half_cylinder", kv({{"a", -0.5}}), m, 1e-12);
    }

    const double e0 = cfg.epsilon();
    require_small_eps(e0);
    const TorusSweep sw{cfg.nt, cfg.nth, cfg.exec};
    const PerturbationBallSpec spec{cfg.R, cfg.beta};
    const auto ge = graph_expansion_residual(prof, ball_field(prof, cfg), spec, halving(e0), sw);
    const std::string gp = kv({{"a", prof.a()}, {"eps", e0}, {"R", cfg.R}, {"beta", cfg.beta}});
    r.add("graph.expansion.h_ratio", gp, ge.h_ratio, 1.5, ge.pass, ge.rem.order_estimate);
    r.add("graph.expansion.margin", gp, ge.min_margin, 0.0, ge.min_margin > 0.0);
    r.add("graph.expansion.in_ball", gp, ge.in_ball ? 1.0 : 0.0, 1.0, ge.in_ball);

    // A field between the two focal distances must be flagged.
    {
        const TorusPatch T(prof, e0);
        const auto big = sep([&prof](double t) {
            return std::array<double, 3>{1.1 * prof.x(t), 1.1 * prof.xp(t), 1.1 * prof.xpp(t)};
        }, 0);
        const double margin = regularity_margin(T, big, -prof.tau(), prof.tau(), 101, 32);
        r.add("graph.regularity_loss_detected", kv({{"a", prof.a()}, {"scale", 1.1}}), margin, 0.0, margin <= 0.0);
    }

    {
        PrescribedCurvature H;
        H.A = sphere_function("const", 1.0);
        r.below("graph.prescribed_value", "X=(2,0,0)", std::abs(H(Vec3(2, 0, 0)) - 1.5), 1e-15);
    }
    const PrescribedCurvature H = prescribed_from_json(cfg.field);
    {
        double m = 0.0;
        for (double rad : {10.0, 30.0, 100.0, 1000.0})
            for (const auto& [t, th] : sample_points(-1.0, 1.0, 5, 6)) {
                const Vec3 X = rad * Vec3(std::cos(th) * sech(t), std::sin(th) * sech(t), std::tanh(t));
                m = std::max(m, std::pow(rad, H.beta + 1.0) * H.gradient(X).norm());
            }
        r.below("graph.prescribed_gradient_decay", kv({{"beta", H.beta}, {"nu", H.nu}}), m, 1e3);
    }
    {
        const TorusPatch T(prof, 1e-3);
        const auto A2 = sphere_function("coord2");
        double m = 0.0;
        for (const auto& [t, th] : sample_points(-prof.tau(), prof.tau(), 21, 16))
            m = std::max(m, std::abs(A2.value(T.jet(t, th).X.normalized()) - 1.0));
        r.below("graph.prescribed_direction_limit", kv({{"a", prof.a()}, {"eps", 1e-3}}), m, 1e-3);
    }
    {
        const auto pr = prescribed_expansion_residual(prof, H, ball_field(prof, cfg), spec, halving(e0), sw);
        r.add("graph.prescribed_expansion", gp + ";nu=" + fmt_double(H.nu), pr.xi_ratio, 1.5, pr.pass,
              pr.order_estimate);
    }
    {
        // Second variation at a = -1/2 with phi = 1 approaches 8.
        const DelaunayProfile half(-0.5);
        const TorusPatch T(half, 1e-3);
        const double v = fd_second_variation(T, NormalPerturbation::constant(1.0), 0.2, 0.6);
        r.below("graph.second_variation_half", kv({{"a", -0.5}, {"eps", 1e-3}}), std::abs(v - 8.0), 5e-2);
    }
}

// ----- kernel ----------------------------------------------------------------

void kernel_rows(Rows& r, const RunConfig& cfg, const DelaunayProfile& prof) {
    const auto kr = kernel_residuals(prof, cfg.nt, cfg.nth, cfg.exec);
    const auto& names = JacobiKernelFamily::names();
    for (int g = 0; g < JacobiKernelFamily::kGenerators; ++g)
        r.below(std::string("kernel.residual.") + names[g], kv({{"a", prof.a()}}), kr.residual[g], 1e-6);
    const auto pb = potential_bound(prof);
    r.add("kernel.potential_bound", kv({{"a", prof.a()}}), pb.sup_potential_half, pb.formula,
          pb.sup_potential_half <= pb.formula * (1.0 + 1e-12) && pb.fourier_ok);
}

void singular_rows(Rows& r) {
    const auto sl = singular_limit_check({-1e-3, -1e-5});
    r.add("kernel.singular_limit", kv({{"a", -1e-3}}), sl.deviation[0], 5e-2, sl.deviation[0] < 5e-2);
    r.add("kernel.singular_limit", kv({{"a", -1e-5}}), sl.deviation[1], sl.deviation[0],
          sl.deviation[1] < sl.deviation[0]);
}

// ----- probe -----------------------------------------------------------------

void probe_rows(Rows& r, const RunConfig& cfg, const DelaunayProfile& prof) {
    const auto ob = obstruction_integrals();
    r.add("probe.I1", "", ob.I1, 1e-10, std::abs(ob.I1 - 1.0) <= 1e-10);
    r.add("probe.I2", "", ob.I2, 1e-10, std::abs(ob.I2) <= 1e-10);
    r.add("probe.radial_factor", "", ob.radial, 0.0, std::isfinite(ob.radial));

    double kernel_res = 0.0;
    for (int i = 0; i < LimitKernel::kMembers; ++i)
        for (int j = 0; j <= 300; ++j) {
            const double t = -30.0 + 0.2 * j;
            kernel_res = std::max(kernel_res, std::abs(limit_operator(LimitKernel::jet(i, t, 0.7), t)));
        }
    r.below("probe.limit_kernel", "|t|<=30", kernel_res, 1e-12);

    const auto fields = admissible_fields();
    double orth = 0.0;
    for (const auto& f : fields)
        for (int i = 0; i < LimitKernel::kMembers; ++i)
            orth = std::max(orth, std::abs(orthogonality_integral(i, f, cfg.exec)));
    r.below("probe.orthogonality", "fields=10", orth, 1e-8);

    bool flagged = false;
    try {
        orthogonality_integral(0, sep([](double t) {
            const double q = 1.0 + t * t;
            return std::array<double, 3>{1.0 / q, -2.0 * t / (q * q), (6.0 * t * t - 2.0) / (q * q * q)};
        }, 0), cfg.exec);
    } catch (const DecayViolation&) {
        flagged = true;
    }
    r.add("probe.decay_violation_detected", "phi=1/(1+t^2)", flagged ? 1.0 : 0.0, 1.0, flagged);

    for (double A : {-1.0, 0.0, 1.0, 0.37})
        for (bool g0 : {false, true}) {
            const double v = limit_equation_residual(A, fields[0], g0, cfg.exec);
            r.below(g0 ? "probe.pairing_case2" : "probe.pairing", kv({{"A_e2", A}}),
                    std::abs(v + 4.0 * kPi * A * ob.I1), 1e-6);
        }

    const auto sech_field = sep(sech_pow(1, 0), 0);
    const auto tb = theorem2_pointwise_bound(1.0, sech_field.scaled(1.0 / kPi));
    r.add("probe.theorem2_bound", kv({{"R1", 1.0}}), tb.lhs, tb.bound, tb.holds);
    const double R1 = 0.9;
    const auto ti = theorem2_pointwise_bound(R1, sech_field.scaled(R1 / kPi));
    r.add("probe.theorem2_infeasible", kv({{"R1", R1}}), ti.bound, 1.0, ti.holds && ti.infeasible);
    const double thr = theorem2_threshold();
    r.add("probe.theorem2_threshold", "", thr, 1.0, std::abs((2.0 + std::numbers::sqrt2) * thr / kPi - 1.0) < 1e-15);

    const int n = cfg.n.value_or(1);
    const auto xs = sep([&prof](double t) { return std::array<double, 3>{prof.x(t), prof.xp(t), prof.xpp(t)}; }, 1, kSin);
    const auto wn = weighted_norms(xs, prof, n, cfg.alpha, 400, 64, cfg.exec);
    const auto wf = weighted_norms(xs, prof, n, cfg.alpha, 1600, 256, cfg.exec, false);
    r.below("probe.weighted_norm_refinement", kv({{"a", prof.a()}, {"n", n}, {"alpha", cfg.alpha}}),
            std::abs(wn.c2_weighted - wf.c2_weighted) / wf.c2_weighted, 0.02);
    r.add("probe.holder_seminorm", kv({{"a", prof.a()}, {"n", n}, {"alpha", cfg.alpha}}), wn.holder_seminorm, 0.0,
          std::isfinite(wn.holder_seminorm));
    const auto w1 = weighted_norms(NormalPerturbation::constant(1.0), DelaunayProfile(-0.5), 1, cfg.alpha, 400, 64,
                                   cfg.exec);
    r.below("probe.weighted_norm_half", kv({{"a", -0.5}}), std::abs(w1.c2_weighted - 2.0), 1e-12);

    const auto av = area_volume(prof);
    r.below("probe.area_elliptic", kv({{"a", prof.a()}}), std::abs(av.area - av.area_elliptic), 1e-10);
    const auto ah = area_volume(DelaunayProfile(-0.5));
    r.below("probe.area_half", kv({{"a", -0.5}}), std::abs(ah.area - kPi * kPi), 1e-9);
    double qa = 0.0, qv = 0.0;
    for (double a : {-1e-1, -1e-2, -1e-3, -1e-4, 1e-4, 1e-3, 1e-2, 1e-1}) {
        const auto x = area_volume(DelaunayProfile(a));
        qa = std::max(qa, x.area_dev);
        qv = std::max(qv, x.volume_dev);
    }
    r.below("probe.area_deviation", "a=+-1e-1..1e-4", qa, 5.0);
    r.below("probe.volume_deviation", "a=+-1e-1..1e-4", qv, 5.0);
    for (double a : {-1e-4, 1e-4}) {
        const auto x = area_volume(DelaunayProfile(a));
        r.below("probe.area_limit", kv({{"a", a}}), std::abs(x.area / (4.0 * kPi) - 1.0), 1e-3);
        r.below("probe.volume_limit", kv({{"a", a}}), std::abs(-3.0 * x.volume / (4.0 * kPi) - 1.0), 1e-3);
    }
}

}  // namespace

double RunConfig::epsilon() const {
    if (eps) return *eps;
    if (n) return kPi / (*n * DelaunayProfile(a).h());
    return 1e-2;
}

std::pair<std::size_t, std::size_t> parse_resolution(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw std::invalid_argument("resolution must look like 201x64");
    const long nt = std::stol(s.substr(0, x));
    const long nth = std::stol(s.substr(x + 1));
    if (nt < 2 || nth < 3) throw std::invalid_argument("resolution too small: " + s);
    return {static_cast<std::size_t>(nt), static_cast<std::size_t>(nth)};
}

void apply_json_config(RunConfig& c, const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    if (j.contains("command")) c.command = j["command"].get<std::string>();
    if (j.contains("a")) c.a = j["a"].get<double>();
    if (j.contains("eps")) c.eps = j["eps"].get<double>();
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("beta")) c.beta = j["beta"].get<double>();
    if (j.contains("nu")) c.nu = j["nu"].get<double>();
    if (j.contains("R")) c.R = j["R"].get<double>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
    if (j.contains("res")) std::tie(c.nt, c.nth) = parse_resolution(j["res"].get<std::string>());
    if (j.contains("field")) c.field = j["field"].is_string() ? j["field"].get<std::string>() : j["field"].dump();
}

std::vector<CheckRow> verify_suite(const RunConfig& cfg) {
    const DelaunayProfile prof(cfg.a);
    Rows r;
    profile_rows(r, cfg, prof);
    asymptotic_rows(r);
    surface_rows(r, cfg, prof);
    torus_invariant_rows(r, cfg, prof);
    torus_fixed_rows(r, cfg);
    const std::string p = kv({{"a", prof.a()}, {"eps", cfg.epsilon()}});
    for (const auto& rep : torus_expansions(cfg, prof)) report_rows(r, "torus.expansion.", p, rep);
    graph_rows(r, cfg, prof);
    kernel_rows(r, cfg, prof);
    singular_rows(r);
    probe_rows(r, cfg, prof);
    return r.v;
}

std::vector<CheckRow> expand_suite(const RunConfig& cfg) {
    const DelaunayProfile prof(cfg.a);
    Rows r;
    auto table = [&](const ExpansionReport& rep) {
        for (std::size_t i = 0; i < rep.eps.size(); ++i) {
            const double ord = i == 0 ? std::numeric_limits<double>::quiet_NaN() : std::log2(rep.ratios[i - 1]);
            r.add("expand." + rep.name, kv({{"a", prof.a()}, {"eps", rep.eps[i]}}), rep.remainder[i],
                  rep.weighted[i], rep.pass, ord);
        }
    };
    for (const auto& rep : torus_expansions(cfg, prof)) table(rep);
    const TorusSweep sw{cfg.nt, cfg.nth, cfg.exec};
    const auto eps = halving(cfg.epsilon());
    const PerturbationBallSpec spec{cfg.R, cfg.beta};
    const auto ge = graph_expansion_residual(prof, ball_field(prof, cfg), spec, eps, sw);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const double ord = i == 0 ? std::numeric_limits<double>::quiet_NaN() : std::log2(ge.rem.ratios[i - 1]);
        r.add("expand.graph_expansion", kv({{"a", prof.a()}, {"eps", eps[i]}, {"beta", cfg.beta}}),
              ge.rem.remainder[i], ge.h_sup[i], ge.pass, ord);
    }
    const auto H = prescribed_from_json(cfg.field);
    const auto pr = prescribed_expansion_residual(prof, H, ball_field(prof, cfg), spec, eps, sw);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const double ord =
            i == 0 ? std::numeric_limits<double>::quiet_NaN() : std::log2(pr.remainder[i - 1] / pr.remainder[i]);
        r.add("expand.prescribed_expansion", kv({{"a", prof.a()}, {"eps", eps[i]}, {"beta", H.beta}, {"nu", H.nu}}),
              pr.remainder[i], pr.xi_sup[i], pr.pass, ord);
    }
    return r.v;
}

std::vector<CheckRow> kernel_suite(const RunConfig& cfg) {
    const DelaunayProfile prof(cfg.a);
    Rows r;
    kernel_rows(r, cfg, prof);
    const auto sl = singular_limit_check({-1e-2, -1e-3, -1e-4, -1e-5});
    for (std::size_t i = 0; i < sl.a.size(); ++i) {
        const bool ok = i == 0 || sl.deviation[i] < sl.deviation[i - 1];
        const double prev = i == 0 ? std::numeric_limits<double>::quiet_NaN() : sl.deviation[i - 1];
        r.add("kernel.singular_limit", kv({{"a", sl.a[i]}}), sl.deviation[i], prev, ok);
    }
    return r.v;
}

std::vector<CheckRow> probe_suite(const RunConfig& cfg) {
    const DelaunayProfile prof(cfg.a);
    Rows r;
    probe_rows(r, cfg, prof);
    return r.v;
}

void write_csv(std::ostream& os, std::vector<CheckRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const CheckRow& x, const CheckRow& y) {
        return std::tie(x.check_id, x.parameters) < std::tie(y.check_id, y.parameters);
    });
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    auto num = [](double v) { return std::isnan(v) ? std::string() : fmt_double(v); };
    os << "check_id,parameters,value,bound,order_estimate,pass\n";
    for (const auto& r : rows)
        os << quote(r.check_id) << ',' << quote(r.parameters) << ',' << num(r.value) << ',' << num(r.bound) << ','
           << num(r.order_estimate) << ',' << (r.pass ? "pass" : "fail") << '\n';
}

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

}  // namespace delab
