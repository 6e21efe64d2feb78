#pragma once

namespace delab {

// Modulus k together with its complement 1 - k^2, carried separately so that
// moduli extremely close to 1 keep full precision.
struct EllipticModulus {
    double k = 0.0;
    double k_sq_complement = 1.0;

    static EllipticModulus from_k(double k);
    // kc2 = 1 - k^2; kc2 == 0 is accepted (k = 1) and only complete_E and
    // jacobi_dn handle it.
    static EllipticModulus from_complement(double kc2);

    double k_sq() const { return 1.0 - k_sq_complement; }
};

double complete_K(const EllipticModulus& m);
double complete_E(const EllipticModulus& m);

struct JacobiTriple {
    double sn, cn, dn;
};

JacobiTriple jacobi_sncndn(double u, const EllipticModulus& m);
double jacobi_dn(double u, const EllipticModulus& m);

}  // namespace delab
