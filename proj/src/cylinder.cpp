#include "delab/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace delab {

SurfaceJet CylinderPatch::jet(double t, double th) const {
    const ProfileJet p = prof_.jet(t);
    const RevolutionPatch rev([&p](double) {
        return CurveJet{p.x, p.xp, p.xpp, p.xppp, p.z, p.zp, p.zpp, p.zppp};
    });
    return rev.jet(t, th);
}

double jacobi_potential(const DelaunayProfile& prof, double t) {
    const double x = prof.x(t);
    const double g = prof.gamma();
    return 2.0 * (x * x + g * g / (x * x));
}

JacobiValue jacobi_apply(const DelaunayProfile& prof, const PhiJet& phi, double t) {
    const double x = prof.x(t);
    const double op = phi.ftt + phi.fthth + jacobi_potential(prof, t) * phi.f;
    return {op, op / (2.0 * x * x)};
}

JacobiKernelFamily::JacobiKernelFamily(const DelaunayProfile& prof, double t_max)
    : prof_(prof), ad_(prof, t_max) {}

double JacobiKernelFamily::w0p(double t) const {
    const auto j = prof_.jet(t);
    const auto d = ad_.at(t);
    return -(j.zp / j.x) * d.u + (j.xp / j.x) * d.v;
}

double JacobiKernelFamily::w0m(double t) const { return prof_.xp(t) / prof_.x(t); }

double JacobiKernelFamily::w1p(double t) const { return prof_.zp(t) / prof_.x(t); }

double JacobiKernelFamily::w1m(double t) const {
    const auto j = prof_.jet(t);
    return j.xp + j.z * j.zp / j.x;
}

const std::array<const char*, JacobiKernelFamily::kGenerators>& JacobiKernelFamily::names() {
    static const std::array<const char*, kGenerators> n{"w0+", "w0-", "w1+cos", "w1+sin", "w1-cos", "w1-sin"};
    return n;
}

double JacobiKernelFamily::radial(int g, double t) const {
    switch (g) {
        case 0: return w0p(t);
        case 1: return w0m(t);
        case 2:
        case 3: return w1p(t);
        default: return w1m(t);
    }
}

double JacobiKernelFamily::angular(int g, double th) {
    switch (g) {
        case 0:
        case 1: return 1.0;
        case 2:
        case 4: return std::cos(th);
        default: return std::sin(th);
    }
}

double JacobiKernelFamily::angular_order(int g) { return g < 2 ? 0.0 : 1.0; }

double KernelResiduals::max_residual() const { return *std::max_element(residual.begin(), residual.end()); }

KernelResiduals kernel_residuals(const DelaunayProfile& prof, std::size_t nt, std::size_t nth, Exec exec) {
    constexpr double h = 0.02;
    constexpr std::array<double, 7> c{1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
    const double T = 2.0 * prof.tau();
    const JacobiKernelFamily fam(prof, T + 1.0);
    const Grid2 grid{-T, T, nt, nth};

    // Radial residual r_g(t) = w'' - m^2 w + 2 p w for each generator.
    constexpr int G = JacobiKernelFamily::kGenerators;
    std::vector<std::array<double, G>> radial_res(nt);
    std::vector<std::array<double, G>> radial_val(nt);
    for_index(nt, [&](std::size_t i) {
        const double t = grid.t(i);
        const double pot = jacobi_potential(prof, t);
        for (int g = 0; g < G; ++g) {
            if (g == 3 || g == 5) {  // same radial part as the cos generator
                radial_res[i][g] = radial_res[i][g - 1];
                radial_val[i][g] = radial_val[i][g - 1];
                continue;
            }
            double d2 = 0.0;
            for (int k = 0; k < 7; ++k) d2 += c[k] * fam.radial(g, t + (k - 3) * h);
            d2 /= h * h;
            const double w = fam.radial(g, t);
            const double m = JacobiKernelFamily::angular_order(g);
            radial_res[i][g] = d2 - m * m * w + pot * w;
            radial_val[i][g] = w;
        }
    }, exec);

    KernelResiduals out;
    for (int g = 0; g < G; ++g) {
        double res = 0.0;
        double size = 0.0;
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = 0; j < nth; ++j) {
                const double ang = JacobiKernelFamily::angular(g, grid.th(j));
                res = std::max(res, std::abs(radial_res[i][g] * ang));
                size = std::max(size, std::abs(radial_val[i][g] * ang));
            }
        }
        out.residual[g] = res;
        out.degenerate[g] = size < 1e-14;
    }
    return out;
}

SingularLimitReport singular_limit_check(const std::vector<double>& a_grid) {
    SingularLimitReport r;
    for (double a : a_grid) {
        if (!(a > -0.05 && a < 0.05) || a == 0.0)
            throw std::domain_error("singular limit check needs a in (-0.05, 0.05) \\ {0}");
        const DelaunayProfile prof(a);
        const JacobiKernelFamily fam(prof, std::max(prof.tau(), 5.0) + 1.0);
        double dev = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = -5.0 + 10.0 * i / 1000.0;
            dev = std::max(dev, std::abs(fam.w0p(t) - (-1.0 + t * std::tanh(t))));
        }
        double C = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = -prof.tau() + 2.0 * prof.tau() * i / 1000.0;
            C = std::max(C, std::abs(fam.w0p(t)) / (1.0 + std::abs(t)));
        }
        if (!r.deviation.empty() && !(dev < r.deviation.back())) r.monotone = false;
        r.a.push_back(a);
        r.deviation.push_back(dev);
        r.growth_C.push_back(C);
    }
    return r;
}

PotentialBound potential_bound(const DelaunayProfile& prof, std::size_t nt) {
    double sup = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = -prof.tau() + 2.0 * prof.tau() * static_cast<double>(i) / static_cast<double>(nt - 1);
        sup = std::max(sup, 0.5 * jacobi_potential(prof, t));
    }
    const double a = prof.a();
    const double formula = a * a + (1.0 + a) * (1.0 + a);
    return {sup, formula, 4.0 - 2.0 * sup >= -1e-12};
}

}  // namespace delab
