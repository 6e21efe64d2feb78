#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delab/probe.hpp"
#include "delab/torus.hpp"
#include "oracle_values.hpp"

#include <cmath>
#include <numbers>

using namespace delab;

namespace {

constexpr double kPi = std::numbers::pi;

double sech(double t) { return 1 / std::cosh(t); }

NormalPerturbation radial(std::function<std::array<double, 3>(double)> f, double m, double ph = 0.0) {
    return NormalPerturbation::separable(std::move(f), m, ph);
}

std::array<double, 3> gauss0(double t) {
    const double e = std::exp(-t * t);
    return {e, -2 * t * e, (4 * t * t - 2) * e};
}

std::array<double, 3> sech_p(double p, double t) {
    const double f = std::pow(sech(t), p), th = std::tanh(t), s2 = sech(t) * sech(t);
    return {f, -p * f * th, f * (p * p * th * th - p * s2)};
}

// e^{-t^2} (1 + cos th)
NormalPerturbation gauss_one_plus_cos() { return radial(gauss0, 0) + radial(gauss0, 1); }
NormalPerturbation sech2_sin() { return radial([](double t) { return sech_p(2, t); }, 1, -kPi / 2); }

}  // namespace

TEST_CASE("limit kernel is annihilated by L0") {
    for (int i = 0; i < LimitKernel::kMembers; ++i)
        for (double t = -30; t <= 30; t += 0.1) {
            CAPTURE(i);
            CHECK(std::abs(limit_operator(LimitKernel::jet(i, t, 0.9), t)) < 1e-12);
        }
    CHECK_THROWS_AS(LimitKernel::jet(4, 0, 0), std::out_of_range);
    for (double t : {-2.0, 0.0, 1.5})
        CHECK(limit_operator(NormalPerturbation::constant(1.0), t, 0.3) == doctest::Approx(2 * sech(t) * sech(t)));
    // Analytic jets against differences.
    const double h = 1e-4;
    for (int i = 0; i < LimitKernel::kMembers; ++i) {
        const auto j = LimitKernel::jet(i, 0.7, 0.4);
        const auto p = LimitKernel::jet(i, 0.7 + h, 0.4), m = LimitKernel::jet(i, 0.7 - h, 0.4);
        CHECK(std::abs((p.f - 2 * j.f + m.f) / (h * h) - j.ftt) < 1e-6);
    }
}

TEST_CASE("orthogonality examples") {
    CHECK(std::abs(orthogonality_integral(0, gauss_one_plus_cos())) < 1e-8);
    CHECK(std::abs(orthogonality_integral(2, sech2_sin())) < 1e-8);
    for (int i = 0; i < LimitKernel::kMembers; ++i) CHECK(std::abs(orthogonality_integral(i, sech2_sin())) < 1e-8);
}

TEST_CASE("orthogonality integral is linear in phi") {
    // A non-orthogonal pairing to test linearity: integrate w * phi directly.
    const auto f = gauss_one_plus_cos(), g = sech2_sin();
    auto pair = [](const NormalPerturbation& p) {
        return strip_integral([&](double t, double th) { return LimitKernel::jet(2, t, th).f * p(t, th).f; });
    };
    const double a = pair(f), b = pair(g), ab = pair(f.scaled(2.5) + g);
    CHECK(std::abs(ab - (2.5 * a + b)) < 1e-10);
    CHECK(std::abs(orthogonality_integral(1, f.scaled(2.5) + g) -
                   (2.5 * orthogonality_integral(1, f) + orthogonality_integral(1, g))) < 1e-10);
}

TEST_CASE("slow decay is rejected") {
    const auto slow = radial([](double t) {
        const double q = 1 + t * t;
        return std::array<double, 3>{1 / q, -2 * t / (q * q), (6 * t * t - 2) / (q * q * q)};
    }, 0);
    CHECK(decay_weight(slow) > kDecayLimit);
    CHECK_THROWS_AS(orthogonality_integral(0, slow), DecayViolation);
    CHECK_THROWS_AS(limit_equation_residual(1.0, slow), DecayViolation);
    CHECK(decay_weight(sech2_sin()) < kDecayLimit);
}

TEST_CASE("obstruction integrals") {
    const auto ob = obstruction_integrals();
    CHECK(std::abs(ob.I1 - oracle::I1) < 1e-10);
    CHECK(std::abs(ob.I2) < 1e-10);
    CHECK(std::abs(ob.radial - oracle::RadialFactor) < 1e-12);
    CHECK(std::abs(ob.radial + kPi / 6) < 1e-12);
}

TEST_CASE("pairing against the limit equation") {
    const auto phi = sech2_sin();
    for (double A : {-1.0, 0.0, 1.0, 0.37}) {
        CAPTURE(A);
        const double v = limit_equation_residual(A, phi);
        CHECK(std::abs(v + 4 * kPi * A) < 1e-6);
        CHECK(std::abs(limit_equation_residual(A, phi, true) - v) < 1e-10);
    }
    CHECK(std::abs(limit_equation_residual(0.0, gauss_one_plus_cos())) < 1e-8);
}

TEST_CASE("serial and parallel quadrature agree bit for bit") {
    const auto phi = gauss_one_plus_cos();
    CHECK(limit_equation_residual(0.37, phi, true, Exec::serial) == limit_equation_residual(0.37, phi, true, Exec::parallel));
}

TEST_CASE("pointwise bound of the second theorem") {
    CHECK(theorem2_threshold() == doctest::Approx(0.9201511845106101).epsilon(1e-15));
    const auto z = theorem2_pointwise_bound(1.0, NormalPerturbation::zero());
    CHECK(z.lhs == 0.0);
    CHECK(z.bound == doctest::Approx((2 + std::sqrt(2.0)) / kPi));
    CHECK(z.holds);
    CHECK_FALSE(z.infeasible);  // R1 = 1 lies above the threshold

    const auto s = radial([](double t) { return sech_p(1, t); }, 0);
    const auto a = theorem2_pointwise_bound(1.0, s.scaled(1 / kPi));
    CHECK(a.holds);
    CHECK(a.lhs == doctest::Approx(1 / kPi));
    const auto b = theorem2_pointwise_bound(0.9, s.scaled(0.9 / kPi));
    CHECK(b.infeasible);
    CHECK(b.slack > 0.0);
    CHECK_THROWS_AS(theorem2_pointwise_bound(0.9, s.scaled(1.0)), std::domain_error);
    CHECK_THROWS_AS(theorem2_pointwise_bound(0.0, s), std::domain_error);
}

TEST_CASE("weighted norms") {
    const DelaunayProfile P(-0.1);
    const auto z = weighted_norms(NormalPerturbation::zero(), P, 1, 0.5);
    CHECK(z.c2_weighted == 0.0);
    CHECK(z.holder_seminorm == 0.0);
    const auto one = weighted_norms(NormalPerturbation::constant(1.0), DelaunayProfile(-0.5), 2, 0.5);
    CHECK(std::abs(one.c2_weighted - 2.0) < 1e-12);

    const auto xs = radial([&P](double t) { return std::array<double, 3>{P.x(t), P.xp(t), P.xpp(t)}; }, 1, -kPi / 2);
    const auto coarse = weighted_norms(xs, P, 1, 0.5);
    const auto fine = weighted_norms(xs, P, 1, 0.5, 1600, 256, Exec::parallel, false);
    CHECK(std::abs(coarse.c2_weighted - fine.c2_weighted) / fine.c2_weighted < 0.02);
    CHECK(coarse.c2_weighted >= 1.0);
    CHECK(std::isfinite(coarse.holder_seminorm));
    CHECK(coarse.holder_seminorm > 0.0);
    CHECK_THROWS_AS(weighted_norms(xs, P, 1, 0.0), std::domain_error);
    CHECK_THROWS_AS(weighted_norms(xs, P, 0, 0.5), std::domain_error);

    const auto serial = weighted_norms(xs, P, 1, 0.5, 400, 64, Exec::serial);
    CHECK(serial.c2_weighted == coarse.c2_weighted);
    CHECK(serial.holder_seminorm == coarse.holder_seminorm);
}

TEST_CASE("area and volume against frozen quadrature") {
    struct Row {
        double a, area, volume;
    };
    const Row rows[] = {{-0.3, oracle::Area_m03, oracle::Volume_m03},
                        {-0.1, oracle::Area_m01, oracle::Volume_m01},
                        {0.2, oracle::Area_p02, oracle::Volume_p02},
                        {1.0, oracle::Area_p1, oracle::Volume_p1}};
    for (const auto& r : rows) {
        CAPTURE(r.a);
        const auto av = area_volume(DelaunayProfile(r.a));
        CHECK(std::abs(av.area - r.area) < 1e-10);
        CHECK(std::abs(av.volume - r.volume) < 1e-10);
        CHECK(std::abs(av.area - av.area_elliptic) < 1e-10);
    }
    CHECK(std::abs(area_volume(DelaunayProfile(-0.5)).area - kPi * kPi) < 1e-9);
    for (double a : {-1e-4, 1e-4}) {
        const auto av = area_volume(DelaunayProfile(a));
        CHECK(std::abs(av.area - 4 * kPi) < 1e-3 * 4 * kPi);
        CHECK(std::abs(av.volume + 4 * kPi / 3) < 1e-3 * 4 * kPi / 3);
    }
    for (double a : {-1e-1, -1e-2, -1e-3, -1e-4, 1e-4, 1e-3, 1e-2, 1e-1}) {
        const auto av = area_volume(DelaunayProfile(a));
        CHECK(av.area_dev <= 5.0);
        CHECK(av.volume_dev <= 5.0);
    }
}

TEST_CASE("g_a tends to g0") {
    double prev = 1e9;
    for (double a : {-1e-3, -1e-5}) {
        const DelaunayProfile P(a);
        double m = 0;
        for (double t = -5; t <= 5; t += 0.01) m = std::max(m, std::abs(g_coefficient(P, t) - g_limit(t)));
        CHECK(m < std::min(prev, 5e-2));
        prev = m;
    }
}
