#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delab/special_fn.hpp"
#include "oracle_values.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <cmath>
#include <numbers>

using namespace delab;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double v, double ref) { return std::abs(v - ref) / std::abs(ref); }

EllipticModulus from_m(double m) { return EllipticModulus::from_complement(1.0 - m); }

}  // namespace

TEST_CASE("K and E against frozen high-precision values") {
    struct Row {
        double m, K, E;
    };
    const Row rows[] = {{0.0, oracle::K_m0, oracle::E_m0},     {0.1, oracle::K_m01, oracle::E_m01},
                        {0.5, oracle::K_m05, oracle::E_m05},   {0.9, oracle::K_m09, oracle::E_m09},
                        {0.99, oracle::K_m099, oracle::E_m099}};
    for (const auto& r : rows) {
        CAPTURE(r.m);
        CHECK(rel(complete_K(from_m(r.m)), r.K) <= 1e-13);
        CHECK(rel(complete_E(from_m(r.m)), r.E) <= 1e-13);
    }
    const auto near_one = EllipticModulus::from_complement(1e-8);
    CHECK(rel(complete_K(near_one), oracle::K_m1m8) <= 1e-13);
    CHECK(rel(complete_E(near_one), oracle::E_m1m8) <= 1e-13);
}

TEST_CASE("documented K and E values") {
    const auto m = EllipticModulus::from_k(1.0 / std::sqrt(2.0));
    CHECK(complete_K(m) == doctest::Approx(1.854074677).epsilon(1e-9));
    CHECK(complete_E(m) == doctest::Approx(1.350643881).epsilon(1e-9));
    CHECK(complete_K(EllipticModulus::from_k(0.0)) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(complete_E(EllipticModulus::from_k(0.0)) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(complete_E(EllipticModulus::from_complement(0.0)) == doctest::Approx(1.0).epsilon(1e-15));
    // Logarithmic asymptote K ~ log(4 / k').
    CHECK(rel(complete_K(EllipticModulus::from_complement(1e-8)), std::log(4.0 / 1e-4)) <= 1e-6);
}

TEST_CASE("K rejects k = 1 and moduli outside [0, 1]") {
    CHECK_THROWS_AS(complete_K(EllipticModulus::from_complement(0.0)), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus::from_k(1.5), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus::from_k(-0.1), std::domain_error);
    CHECK_THROWS_AS(EllipticModulus::from_complement(-1e-3), std::domain_error);
}

TEST_CASE("complement is carried without cancellation") {
    const auto m = EllipticModulus::from_complement(1e-12);
    CHECK(m.k_sq_complement == 1e-12);
    CHECK(std::abs(m.k * m.k + m.k_sq_complement - 1.0) <= 1e-15);
}

TEST_CASE("AGM matches tanh-sinh quadrature of the defining integrals") {
    boost::math::quadrature::tanh_sinh<double> q;
    for (double k : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.999}) {
        CAPTURE(k);
        const auto m = EllipticModulus::from_k(k);
        const double K = q.integrate([k](double p) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(p) * std::sin(p)); },
                                     0.0, kPi / 2);
        const double E = q.integrate([k](double p) { return std::sqrt(1.0 - k * k * std::sin(p) * std::sin(p)); }, 0.0,
                                     kPi / 2);
        CHECK(std::abs(complete_K(m) - K) <= 1e-11);
        CHECK(std::abs(complete_E(m) - E) <= 1e-11);
        CHECK(rel(complete_K(m), boost::math::ellint_1(k)) <= 1e-13);
        CHECK(rel(complete_E(m), boost::math::ellint_2(k)) <= 1e-13);
    }
}

TEST_CASE("K increases and E decreases in k") {
    double K0 = 0.0, E0 = 10.0;
    for (int i = 0; i <= 999; ++i) {
        const auto m = EllipticModulus::from_k(i / 1000.0);
        const double K = complete_K(m), E = complete_E(m);
        REQUIRE(K >= K0);
        REQUIRE(E <= E0);
        K0 = K;
        E0 = E;
    }
}

TEST_CASE("Jacobi functions against frozen values") {
    struct Row {
        double u, m, sn, cn, dn;
    };
    const Row rows[] = {{0.3, 0.5, oracle::Sn_a, oracle::Cn_a, oracle::Dn_a},
                        {2.1, 0.9, oracle::Sn_b, oracle::Cn_b, oracle::Dn_b},
                        {-1.7, 0.99, oracle::Sn_c, oracle::Cn_c, oracle::Dn_c}};
    for (const auto& r : rows) {
        CAPTURE(r.u);
        const auto j = jacobi_sncndn(r.u, from_m(r.m));
        CHECK(std::abs(j.sn - r.sn) <= 1e-13);
        CHECK(std::abs(j.cn - r.cn) <= 1e-13);
        CHECK(std::abs(j.dn - r.dn) <= 1e-13);
    }
}

TEST_CASE("dn against boost over a grid of moduli") {
    for (double k : {0.1, 0.5, 0.9, 0.999, 0.999999}) {
        const auto m = EllipticModulus::from_k(k);
        for (double u = -6.0; u <= 6.0; u += 0.37) {
            CAPTURE(k);
            CAPTURE(u);
            CHECK(std::abs(jacobi_dn(u, m) - boost::math::jacobi_dn(k, u)) <= 1e-12);
        }
    }
}

TEST_CASE("dn special values") {
    for (double u : {-3.0, 0.0, 0.5, 10.0}) CHECK(jacobi_dn(u, EllipticModulus::from_k(0.0)) == 1.0);
    for (double k : {0.0, 0.3, 0.9, 0.999999}) CHECK(jacobi_dn(0.0, EllipticModulus::from_k(k)) == doctest::Approx(1.0));
    const auto one = EllipticModulus::from_complement(0.0);
    CHECK(jacobi_dn(1.0, one) == doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-15));
    CHECK(jacobi_dn(1.0, one) == doctest::Approx(0.648054).epsilon(1e-6));
    // k' = 1e-12: dn is sech up to O(k'^2) on moderate arguments.
    CHECK(std::abs(jacobi_dn(1.0, EllipticModulus::from_complement(1e-12)) - 1.0 / std::cosh(1.0)) <= 1e-10);
}

TEST_CASE("dn has period 2K") {
    for (int i = 0; i <= 9; ++i) {
        const double k = i < 9 ? 0.1 * i : 0.999;
        const auto m = EllipticModulus::from_k(k);
        const double K = complete_K(m);
        for (int j = 0; j <= 40; ++j) {
            const double s = 4.0 * K * j / 40.0;
            CAPTURE(k);
            CHECK(std::abs(jacobi_dn(s + 2.0 * K, m) - jacobi_dn(s, m)) <= 1e-10);
        }
    }
}

TEST_CASE("dn solves y'' = (2 - k^2) y - 2 y^3") {
    const double h = 1e-3;
    for (double k : {0.2, 0.7, 0.95}) {
        const auto m = EllipticModulus::from_k(k);
        for (double s = -2.0; s <= 2.0; s += 0.25) {
            const double y = jacobi_dn(s, m);
            const double ypp = (jacobi_dn(s + h, m) - 2.0 * y + jacobi_dn(s - h, m)) / (h * h);
            CHECK(std::abs(ypp - ((2.0 - k * k) * y - 2.0 * y * y * y)) <= 1e-6);
        }
    }
}

TEST_CASE("sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1") {
    for (double k : {0.3, 0.8, 0.9999}) {
        const auto m = EllipticModulus::from_k(k);
        for (double u = -5.0; u <= 5.0; u += 0.5) {
            const auto j = jacobi_sncndn(u, m);
            CHECK(std::abs(j.sn * j.sn + j.cn * j.cn - 1.0) <= 1e-14);
            CHECK(std::abs(j.dn * j.dn + k * k * j.sn * j.sn - 1.0) <= 1e-14);
        }
    }
}
