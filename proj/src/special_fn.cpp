#include "delab/special_fn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace delab {

namespace {

constexpr int kMaxAgmSteps = 64;

// AGM seeded with (1, kc). Returns the common limit; optionally accumulates
// sum 2^(n-1) c_n^2 for the second-kind integral.
double agm(double kc, double c0_sq, double* csum) {
    double a = 1.0;
    double b = kc;
    double pow2 = 0.5;
    double sum = pow2 * c0_sq;
    for (int i = 0; i < kMaxAgmSteps; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        const double c = 0.5 * (a - b);
        pow2 *= 2.0;
        sum += pow2 * c * c;
        const bool done = std::abs(an - a) < 1e-16 * an || an == a;
        a = an;
        b = bn;
        if (done || std::abs(a - b) <= 1e-16 * a) break;
    }
    if (csum) *csum = sum;
    return a;
}

}  // namespace

EllipticModulus EllipticModulus::from_k(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("elliptic modulus outside [0,1]");
    return EllipticModulus{k, (1.0 - k) * (1.0 + k)};
}

EllipticModulus EllipticModulus::from_complement(double kc2) {
    if (!(kc2 >= 0.0 && kc2 <= 1.0)) throw std::domain_error("modulus complement outside [0,1]");
    return EllipticModulus{std::sqrt(1.0 - kc2), kc2};
}

double complete_K(const EllipticModulus& m) {
    if (!(m.k_sq_complement > 0.0)) throw std::domain_error("K(k) is singular at k = 1");
    return std::numbers::pi / (2.0 * agm(std::sqrt(m.k_sq_complement), 0.0, nullptr));
}

double complete_E(const EllipticModulus& m) {
    if (m.k_sq_complement == 0.0) return 1.0;
    if (m.k_sq_complement < 0.0) throw std::domain_error("modulus complement negative");
    double csum = 0.0;
    const double M = agm(std::sqrt(m.k_sq_complement), m.k_sq(), &csum);
    const double K = std::numbers::pi / (2.0 * M);
    return K * (1.0 - csum);
}

// Descending Landen (Gauss) transformation with the complementary parameter
// carried throughout; stops once the moduli agree to 1e-8 and back-substitutes.
// At k = 1 the closed sech/tanh limit is used.
JacobiTriple jacobi_sncndn(double u, const EllipticModulus& m) {
    constexpr double kStop = 1e-8;
    double emc = m.k_sq_complement;
    if (emc == 0.0) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }
    if (std::abs(u) < 1e-150) return {u, 1.0, 1.0};

    std::array<double, 24> em{};
    std::array<double, 24> en{};
    double a = 1.0;
    double c = 1.0;
    double dn = 1.0;
    int l = 0;
    for (int i = 0; i < 24; ++i) {
        l = i;
        em[i] = a;
        emc = std::sqrt(emc);
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= kStop * a) break;
        emc *= a;
        a = c;
    }
    u *= c;
    double sn = std::sin(u);
    double cn = std::cos(u);
    if (sn != 0.0) {
        a = cn / sn;
        c *= a;
        for (int ii = l; ii >= 0; --ii) {
            const double b = em[ii];
            a *= c;
            c *= dn;
            dn = (en[ii] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = (sn >= 0.0) ? a : -a;
        cn = c * sn;
    }
    return {sn, cn, dn};
}

double jacobi_dn(double u, const EllipticModulus& m) { return jacobi_sncndn(u, m).dn; }

}  // namespace delab
