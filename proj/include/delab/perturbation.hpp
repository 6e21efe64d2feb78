#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

namespace delab {

struct PhiJet {
    double f = 0.0, ft = 0.0, fth = 0.0, ftt = 0.0, ftth = 0.0, fthth = 0.0;
};

// Scalar field on the (t, theta) plane with its derivatives up to order two.
class NormalPerturbation {
public:
    using Fn = std::function<PhiJet(double, double)>;

    NormalPerturbation() : fn_([](double, double) { return PhiJet{}; }) {}
    explicit NormalPerturbation(Fn fn) : fn_(std::move(fn)) {}

    PhiJet operator()(double t, double th) const { return fn_(t, th); }

    // Period lengths in t and theta when the field lives on a torus.
    std::optional<std::pair<double, double>> period;

    NormalPerturbation scaled(double c) const;
    friend NormalPerturbation operator+(const NormalPerturbation& a, const NormalPerturbation& b);

    static NormalPerturbation zero() { return NormalPerturbation(); }
    static NormalPerturbation constant(double c);
    // f(t) cos(m theta + phase), with f given through (f, f', f'').
    static NormalPerturbation separable(std::function<std::array<double, 3>(double)> f, double m, double phase);

private:
    Fn fn_;
};

}  // namespace delab
