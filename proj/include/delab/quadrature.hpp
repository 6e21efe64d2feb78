#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstddef>

namespace delab {

// 20-point Gauss-Legendre on one panel.
template <class F>
double gl_panel(F&& f, double a, double b) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

// Composite Gauss-Legendre with panels no wider than max_width. Panels are
// summed left to right, so the result does not depend on threading.
template <class F>
double gl_composite(F&& f, double a, double b, double max_width) {
    if (a == b) return 0.0;
    const auto n = static_cast<std::size_t>(std::ceil(std::abs(b - a) / max_width));
    const std::size_t panels = n == 0 ? 1 : n;
    const double w = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = a + w * static_cast<double>(i);
        const double hi = (i + 1 == panels) ? b : lo + w;
        sum += gl_panel(f, lo, hi);
    }
    return sum;
}

}  // namespace delab
