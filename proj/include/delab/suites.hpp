#pragma once

#include "delab/parallel.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace delab {

struct CheckRow {
    std::string check_id;
    std::string parameters;
    double value = 0.0;
    double bound = 0.0;
    double order_estimate = std::numeric_limits<double>::quiet_NaN();
    bool pass = false;
};

struct RunConfig {
    std::string command = "verify";
    double a = -0.1;
    std::optional<double> eps;  // default 1e-2 unless n is given
    std::optional<int> n;
    double beta = 1.0;
    double nu = 1.0;
    double R = 0.5;
    double alpha = 0.5;
    std::size_t nt = 201;
    std::size_t nth = 64;
    double tol = 1e-10;
    std::string out;
    std::string field = R"({"A": "coord2", "beta": 1, "nu": 1})";
    Exec exec = Exec::parallel;

    // Torus epsilon: the explicit value, else pi/(n h_a), else 1e-2.
    double epsilon() const;
};

// Overwrites the fields present in a JSON object (same names as the flags,
// with "res" given as "NTxNTH").
void apply_json_config(RunConfig& cfg, const std::string& json_text);

// Parses "400x64".
std::pair<std::size_t, std::size_t> parse_resolution(const std::string& s);

std::vector<CheckRow> verify_suite(const RunConfig& cfg);
std::vector<CheckRow> expand_suite(const RunConfig& cfg);
std::vector<CheckRow> kernel_suite(const RunConfig& cfg);
std::vector<CheckRow> probe_suite(const RunConfig& cfg);

// Sorts by check_id (then parameters) and writes the CSV with a header row.
void write_csv(std::ostream& os, std::vector<CheckRow> rows);
bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace delab
