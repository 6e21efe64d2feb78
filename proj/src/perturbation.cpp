#include "delab/perturbation.hpp"

#include <cmath>

namespace delab {

NormalPerturbation NormalPerturbation::scaled(double c) const {
    NormalPerturbation out([fn = fn_, c](double t, double th) {
        PhiJet p = fn(t, th);
        p.f *= c;
        p.ft *= c;
        p.fth *= c;
        p.ftt *= c;
        p.ftth *= c;
        p.fthth *= c;
        return p;
    });
    out.period = period;
    return out;
}

NormalPerturbation operator+(const NormalPerturbation& a, const NormalPerturbation& b) {
    NormalPerturbation out([fa = a.fn_, fb = b.fn_](double t, double th) {
        const PhiJet p = fa(t, th);
        const PhiJet q = fb(t, th);
        return PhiJet{p.f + q.f, p.ft + q.ft, p.fth + q.fth, p.ftt + q.ftt, p.ftth + q.ftth, p.fthth + q.fthth};
    });
    out.period = a.period ? a.period : b.period;
    return out;
}

NormalPerturbation NormalPerturbation::constant(double c) {
    return NormalPerturbation([c](double, double) { return PhiJet{c, 0, 0, 0, 0, 0}; });
}

NormalPerturbation NormalPerturbation::separable(std::function<std::array<double, 3>(double)> f, double m,
                                                 double phase) {
    return NormalPerturbation([f = std::move(f), m, phase](double t, double th) {
        const auto v = f(t);
        const double c = std::cos(m * th + phase);
        const double s = std::sin(m * th + phase);
        return PhiJet{v[0] * c, v[1] * c, -m * v[0] * s, v[2] * c, -m * v[1] * s, -m * m * v[0] * c};
    });
}

}  // namespace delab
