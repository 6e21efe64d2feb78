#include "delab/probe.hpp"

#include "delab/quadrature.hpp"
#include "delab/special_fn.hpp"
#include "delab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace delab {

namespace {

constexpr double kPi = std::numbers::pi;

double sech(double t) { return 1.0 / std::cosh(t); }

double gradient_norm(const PhiJet& f) { return std::hypot(f.ft, f.fth); }
double hessian_norm(const PhiJet& f) { return std::sqrt(f.ftt * f.ftt + 2.0 * f.ftth * f.ftth + f.fthth * f.fthth); }

double theta_node(std::size_t j) { return -kPi + 2.0 * kPi * static_cast<double>(j) / kThetaNodes; }

}  // namespace

const std::array<const char*, LimitKernel::kMembers>& LimitKernel::names() {
    static const std::array<const char*, kMembers> n = {"-1+t tanh t", "-tanh t", "sech t cos", "sech t sin"};
    return n;
}

PhiJet LimitKernel::jet(int i, double t, double th) {
    const double s = sech(t), th_ = std::tanh(t);
    const double s2 = s * s;
    switch (i) {
        case 0:
            return {-1.0 + t * th_, th_ + t * s2, 0, 2.0 * s2 - 2.0 * t * s2 * th_, 0, 0};
        case 1:
            return {-th_, -s2, 0, 2.0 * s2 * th_, 0, 0};
        case 2:
        case 3: {
            const double c = i == 2 ? std::cos(th) : std::sin(th);
            const double dc = i == 2 ? -std::sin(th) : std::cos(th);
            const double f = s, fp = -s * th_, fpp = s - 2.0 * s * s2;
            return {f * c, fp * c, f * dc, fpp * c, fp * dc, -f * c};
        }
        default:
            throw std::out_of_range("limit kernel index");
    }
}

NormalPerturbation LimitKernel::field(int i) {
    return NormalPerturbation([i](double t, double th) { return jet(i, t, th); });
}

double limit_operator(const PhiJet& phi, double t) {
    const double s = sech(t);
    return phi.ftt + phi.fthth + 2.0 * s * s * phi.f;
}

double limit_operator(const NormalPerturbation& phi, double t, double th) { return limit_operator(phi(t, th), t); }

double decay_weight(const NormalPerturbation& phi) {
    constexpr std::size_t nt = 601, nth = 32;
    double m = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = -30.0 + 60.0 * static_cast<double>(i) / (nt - 1);
        for (std::size_t j = 0; j < nth; ++j) {
            const PhiJet f = phi(t, -kPi + 2.0 * kPi * static_cast<double>(j) / nth);
            m = std::max(m, std::cosh(t) * (std::abs(f.f) + gradient_norm(f) + hessian_norm(f)));
        }
    }
    return m;
}

double strip_integral(const std::function<double(double, double)>& F, Exec exec) {
    const auto panels = static_cast<std::size_t>(2.0 * kTruncation / kPanelWidth);
    const auto parts = sweep(panels, [&](std::size_t p) {
        const double lo = -kTruncation + kPanelWidth * static_cast<double>(p);
        return gl_panel([&](double t) {
            double s = 0.0;
            for (std::size_t j = 0; j < kThetaNodes; ++j) s += F(t, theta_node(j));
            return s * (2.0 * kPi / kThetaNodes);
        }, lo, lo + kPanelWidth);
    }, exec);
    double sum = 0.0;
    for (double v : parts) sum += v;
    return sum;
}

namespace {

void require_decay(const NormalPerturbation& phi) {
    const double w = decay_weight(phi);
    if (!(w < kDecayLimit)) throw DecayViolation("perturbation does not decay like sech t");
}

}  // namespace

double orthogonality_integral(int kernel_member, const NormalPerturbation& phi, Exec exec) {
    require_decay(phi);
    return strip_integral([&](double t, double th) {
        return LimitKernel::jet(kernel_member, t, th).f * limit_operator(phi(t, th), t);
    }, exec);
}

ObstructionIntegrals obstruction_integrals() {
    auto w = [](double t) { return 1.0 - t * std::tanh(t); };
    ObstructionIntegrals out;
    out.I1 = gl_composite([&](double t) { const double s = sech(t); return s * s * w(t); }, -kTruncation, kTruncation,
                          kPanelWidth);
    out.radial = gl_composite([&](double t) { return w(t) * g_limit(t); }, -kTruncation, kTruncation, kPanelWidth);
    out.I2 = strip_integral([&](double t, double th) { return w(t) * g_limit(t) * std::sin(th); }, Exec::serial);
    return out;
}

double limit_equation_residual(double A_e2, const NormalPerturbation& phi, bool with_g0, Exec exec) {
    require_decay(phi);
    return strip_integral([&](double t, double th) {
        const double s = sech(t);
        double lhs = limit_operator(phi(t, th), t);
        if (with_g0) lhs += g_limit(t) * std::sin(th);
        return (1.0 - t * std::tanh(t)) * (lhs - 2.0 * A_e2 * s * s);
    }, exec);
}

double theorem2_threshold() { return kPi / (2.0 + std::numbers::sqrt2); }

PointwiseBound theorem2_pointwise_bound(double R1, const NormalPerturbation& phi) {
    if (!(R1 > 0.0)) throw std::domain_error("R1 must be positive");
    constexpr std::size_t nt = 401, nth = 32;
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = -10.0 + 20.0 * static_cast<double>(i) / (nt - 1);
        const double cap = R1 / kPi * sech(t) * (1.0 + 1e-12);
        for (std::size_t j = 0; j < nth; ++j) {
            const PhiJet f = phi(t, -kPi + 2.0 * kPi * static_cast<double>(j) / nth);
            if (std::abs(f.f) > cap || gradient_norm(f) > cap || hessian_norm(f) > cap)
                throw std::domain_error("perturbation exceeds (R1/pi) sech t");
        }
    }
    const PhiJet f = phi(0.0, kPi / 2.0);
    PointwiseBound b;
    b.lhs = std::abs(f.ftt + f.fthth + 2.0 * f.f);
    b.bound = (2.0 + std::numbers::sqrt2) * R1 / kPi;
    b.slack = 1.0 - b.bound;
    b.holds = b.lhs <= b.bound;
    b.infeasible = b.bound < 1.0;
    return b;
}

WeightedNormReport weighted_norms(const NormalPerturbation& phi, const DelaunayProfile& prof, int n, double alpha,
                                  std::size_t nt_per_period, std::size_t nth, Exec exec, bool with_holder) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("alpha must lie in (0, 1]");
    if (n < 1) throw std::domain_error("n must be positive");
    const double T = n * prof.tau();
    const Grid2 grid{-T, T, nt_per_period * static_cast<std::size_t>(n) + 1, nth};
    const double dt = 2.0 * T / static_cast<double>(grid.nt - 1);
    const double dth = 2.0 * kPi / static_cast<double>(nth);

    std::vector<PhiJet> jets(grid.size());
    std::vector<double> xs(grid.nt);
    for_index(grid.nt, [&](std::size_t i) { xs[i] = prof.x(grid.t(i)); }, exec);
    for_index(grid.size(), [&](std::size_t k) { jets[k] = phi(grid.t(grid.it(k)), grid.th(grid.ith(k))); }, exec);

    WeightedNormReport r;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const PhiJet& f = jets[k];
        r.c2_weighted = std::max(r.c2_weighted, (std::abs(f.f) + gradient_norm(f) + hessian_norm(f)) / xs[grid.it(k)]);
    }

    if (!with_holder) return r;

    // Pairs (p, q) with q ahead of p in t, or level in t and ahead in theta; theta wraps.
    constexpr double cap = 0.5;
    const auto di_max = static_cast<long>(std::floor(cap / dt));
    const auto dj_max = static_cast<long>(std::min<double>(std::floor(cap / dth), static_cast<double>(nth / 2)));
    const auto per_row = sweep(grid.nt, [&](std::size_t i) {
        double m = 0.0;
        for (std::size_t j = 0; j < nth; ++j) {
            const PhiJet& p = jets[i * nth + j];
            for (long di = 0; di <= di_max; ++di) {
                const std::size_t i2 = i + static_cast<std::size_t>(di);
                if (i2 >= grid.nt) break;
                for (long dj = di == 0 ? 1 : -dj_max; dj <= dj_max; ++dj) {
                    const double d = std::hypot(di * dt, dj * dth);
                    if (d > cap) continue;
                    const long jj = (static_cast<long>(j) + dj % static_cast<long>(nth) + static_cast<long>(nth)) %
                                    static_cast<long>(nth);
                    const PhiJet& q = jets[i2 * nth + static_cast<std::size_t>(jj)];
                    const double a = q.ftt - p.ftt, b = q.ftth - p.ftth, c = q.fthth - p.fthth;
                    const double diff = std::sqrt(a * a + 2.0 * b * b + c * c);
                    m = std::max(m, diff / std::pow(d, alpha));
                }
            }
        }
        return m;
    }, exec);
    for (double v : per_row) r.holder_seminorm = std::max(r.holder_seminorm, v);
    return r;
}

AreaVolume area_volume(const DelaunayProfile& prof) {
    const double a = prof.a();
    const double tau = prof.tau();
    AreaVolume out;
    out.area = 2.0 * kPi * gl_composite([&](double t) { const double x = prof.x(t); return x * x; }, -tau, tau, 0.25);
    out.area_elliptic = 4.0 * kPi * (1.0 + a) * complete_E(prof.param().k);
    out.volume = 2.0 * kPi / 3.0 *
                 gl_composite([&](double t) {
                     const double x = prof.x(t);
                     return -x * x * prof.zp(t) + prof.z(t) * x * prof.xp(t);
                 }, -tau, tau, 0.25);
    const double a2 = a * a;
    out.area_dev = std::abs(out.area / (4.0 * kPi) - (1.0 + a) + 0.5 * a2 * std::log(std::abs(a))) / a2;
    out.volume_dev = std::abs(-3.0 * out.volume / (4.0 * kPi) - 1.0 - 1.5 * a) / a2;
    return out;
}

}  // namespace delab
