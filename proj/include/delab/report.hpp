#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace delab {

// Remainder magnitudes of one expansion over an epsilon-halving sequence.
struct ExpansionReport {
    std::string name;
    int expected_order = 0;
    std::vector<double> eps;
    std::vector<double> remainder;  // sup of the raw remainder
    std::vector<double> weighted;   // sup of the weighted, eps-normalised remainder
    std::vector<double> ratios;     // remainder[i] / remainder[i+1]
    double order_estimate = std::numeric_limits<double>::quiet_NaN();
    bool in_window = false;  // every ratio inside the window of expected_order
    bool exact = false;      // remainder at roundoff level for every eps
    bool pass = false;       // in_window, exact, or every ratio in the window of a higher order
};

inline constexpr double kRoundoffRemainder = 1e-12;

// Accepted window for remainder(eps)/remainder(eps/2): [1.7, 2.3] * 2^(order-1).
bool ratio_in_window(double ratio, int order);

// Fills ratios, order_estimate (log2 of the last ratio) and the pass flags.
// Expects eps to halve at each step.
void finish_richardson(ExpansionReport& r);

// Shortest round-trip decimal form of a double.
std::string fmt_double(double v);

}  // namespace delab
