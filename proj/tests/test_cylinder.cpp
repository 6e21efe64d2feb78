#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delab/cylinder.hpp"
#include "delab/graph.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace delab;

namespace {

constexpr double kPi = std::numbers::pi;

NormalPerturbation cos_theta() {
    return NormalPerturbation::separable([](double) { return std::array<double, 3>{1, 0, 0}; }, 1, 0);
}

// Smooth bump supported in |t - c| < w, times cos(m th + ph).
NormalPerturbation bump(double c, double w, double m, double ph) {
    return NormalPerturbation::separable([c, w](double t) {
        const double u = (t - c) / w;
        if (std::abs(u) >= 1.0) return std::array<double, 3>{0, 0, 0};
        const double q = 1 - u * u, b = std::exp(-1 / q), f = -2 * u / (q * q);
        const double fp = -2 / (q * q) - 8 * u * u / (q * q * q);
        return std::array<double, 3>{b, b * f / w, b * (f * f + fp) / (w * w)};
    }, m, ph);
}

}  // namespace

TEST_CASE("conformal parameterization") {
    for (double a : {-0.3, 0.2}) {
        const DelaunayProfile P(a);
        const CylinderPatch C(P);
        for (double t : {-2.0, 0.0, 0.9}) {
            const auto j = C.jet(t, 0.4);
            CHECK(std::abs(j.Xt.norm() - P.x(t)) < 1e-10);
            CHECK(std::abs(j.Xth.norm() - P.x(t)) < 1e-10);
        }
    }
}

TEST_CASE("Jacobi operator examples") {
    const DelaunayProfile half(-0.5);
    for (double t : {-1.0, 0.3}) {
        CHECK(std::abs(jacobi_apply(half, cos_theta()(t, 0.7), t).op) < 1e-15);
        CHECK(jacobi_apply(half, NormalPerturbation::constant(1.0)(t, 0.7), t).op == doctest::Approx(1.0));
        CHECK(jacobi_apply(half, NormalPerturbation::constant(1.0)(t, 0.7), t).first_var == doctest::Approx(2.0));
    }
    const DelaunayProfile P(-0.1);
    const JacobiKernelFamily W(P);
    const double h = 1e-3;
    double m = 0.0;
    for (int i = -20; i <= 20; ++i) {
        const double t = P.tau() * i / 20.0;
        // phi = w1+(t) cos th with its t-derivatives by differences of the exact w1+.
        const double w = W.w1p(t), wp = (W.w1p(t + h) - W.w1p(t - h)) / (2 * h);
        const double wpp = (W.w1p(t + h) - 2 * w + W.w1p(t - h)) / (h * h);
        const double th = 0.3;
        PhiJet f{w * std::cos(th), wp * std::cos(th), -w * std::sin(th), wpp * std::cos(th), -wp * std::sin(th),
                 -w * std::cos(th)};
        m = std::max(m, std::abs(jacobi_apply(P, f, t).op));
    }
    CHECK(m < 1e-6);
}

TEST_CASE("kernel residuals") {
    for (double a : {-0.2, -0.1, 0.2}) {
        CAPTURE(a);
        const auto r = kernel_residuals(DelaunayProfile(a));
        CHECK(r.max_residual() < 1e-6);
        for (bool d : r.degenerate) CHECK_FALSE(d);
    }
    const auto half = kernel_residuals(DelaunayProfile(-0.5));
    CHECK(half.degenerate[1]);  // w0- = x'/x
    CHECK(half.residual[1] == 0.0);
    CHECK(half.max_residual() < 1e-6);
}

TEST_CASE("serial and parallel sweeps agree bit for bit") {
    const DelaunayProfile P(0.2);
    const auto a = kernel_residuals(P, 101, 32, Exec::serial);
    const auto b = kernel_residuals(P, 101, 32, Exec::parallel);
    for (int g = 0; g < JacobiKernelFamily::kGenerators; ++g) CHECK(a.residual[g] == b.residual[g]);
}

TEST_CASE("periodic kernel members") {
    const DelaunayProfile P(-0.2);
    const JacobiKernelFamily W(P);
    for (double t : {-1.3, 0.0, 0.8}) {
        CHECK(std::abs(W.w0m(t + 2 * P.tau()) - W.w0m(t)) < 1e-9);
        CHECK(std::abs(W.w1p(t + 2 * P.tau()) - W.w1p(t)) < 1e-9);
    }
    CHECK(JacobiKernelFamily::angular_order(0) == 0);
    CHECK(JacobiKernelFamily::angular_order(3) == 1);
    CHECK(JacobiKernelFamily::angular(3, kPi / 2) == doctest::Approx(1.0));
}

TEST_CASE("w0+ at t = 0 and the singular limit") {
    const JacobiKernelFamily W(DelaunayProfile(-1e-5));
    CHECK(std::abs(W.w0p(0.0) + 1.0) < 1e-3);
    const auto r = singular_limit_check({-1e-2, -1e-3, -1e-4, -1e-5});
    CHECK(r.deviation[1] < 5e-2);
    CHECK(r.monotone);
    for (double C : r.growth_C) CHECK(std::isfinite(C));
    CHECK_THROWS_AS(singular_limit_check({-0.1}), std::domain_error);
    CHECK_THROWS_AS(singular_limit_check({0.0}), std::domain_error);
}

TEST_CASE("potential bound and Fourier consistency") {
    for (double a : {-0.4, -0.1, 0.1, (std::sqrt(3.0) - 1) / 2}) {
        CAPTURE(a);
        const auto b = potential_bound(DelaunayProfile(a));
        CHECK(b.formula == doctest::Approx(a * a + (1 + a) * (1 + a)));
        CHECK(b.sup_potential_half <= b.formula * (1 + 1e-12));
        CHECK(b.fourier_ok);
    }
}

TEST_CASE("Jacobi operator equals the generic first variation") {
    const DelaunayProfile P(-0.1);
    const CylinderPatch C(P);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0, 1);
    for (int k = 0; k < 5; ++k) {
        const auto phi = bump(-0.5 + U(rng), 1 + U(rng), std::floor(3 * U(rng)), U(rng));
        for (double t = -1.0; t <= 1.0; t += 0.25)
            for (double th : {-2.0, 0.1, 1.4}) {
                const double x = P.x(t);
                CHECK(std::abs(jacobi_apply(P, phi(t, th), t).op / (2 * x * x) - first_variation(C, phi, t, th)) < 1e-7);
            }
    }
}
