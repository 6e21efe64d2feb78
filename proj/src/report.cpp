#include "delab/report.hpp"

#include <charconv>

namespace delab {

bool ratio_in_window(double ratio, int order) {
    const double scale = std::ldexp(1.0, order - 1);
    return ratio >= 1.7 * scale && ratio <= 2.3 * scale;
}

void finish_richardson(ExpansionReport& r) {
    r.ratios.clear();
    for (std::size_t i = 0; i + 1 < r.remainder.size(); ++i) r.ratios.push_back(r.remainder[i] / r.remainder[i + 1]);
    if (!r.ratios.empty()) r.order_estimate = std::log2(r.ratios.back());
    auto all_in = [&](int order) {
        if (r.ratios.empty()) return false;
        for (double q : r.ratios)
            if (!ratio_in_window(q, order)) return false;
        return true;
    };
    r.in_window = all_in(r.expected_order);
    r.exact = !r.remainder.empty();
    for (double e : r.remainder)
        if (!(std::abs(e) < kRoundoffRemainder)) r.exact = false;
    r.pass = r.in_window || r.exact || all_in(r.expected_order + 1) || all_in(r.expected_order + 2);
}

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace delab
