#pragma once

#include <map>
#include <string>
#include <vector>

#include "common.hpp"

namespace speclab {

enum class Verdict { satisfied, violated, inconclusive };

const char* verdict_name(Verdict v);

// Tabulated result of a one-parameter sweep. Metadata must be complete
// enough to reproduce the run (grid signature, spec names, seeds).
struct SweepRecord {
    std::string axis_name;
    std::vector<double> axis_values;
    std::vector<double> values;
    std::map<std::string, std::string> metadata;

    void push(double x, double y) {
        axis_values.push_back(x);
        values.push_back(y);
    }

    // strictly monotone axis, aligned lengths
    void validate() const;
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double ci95 = 0.0; // half-width of the 95% confidence band on slope
    int n = 0;
    bool ok = false;
};

SlopeFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// Least squares of log(value) against log(axis) restricted to the last
// decade of the axis (axis >= max/decade). Points with value <= floor are
// dropped; fewer than 3 surviving points gives ok = false.
SlopeFit fit_loglog_tail(const SweepRecord& rec, double decade = 10.0,
                         double value_floor = 1e-300);

// Three-way call against a slope threshold at 95% confidence:
// satisfied if slope + ci95 < threshold, violated if slope - ci95 >
// threshold, inconclusive otherwise (or if the fit failed).
Verdict slope_verdict(const SlopeFit& fit, double threshold);

} // namespace speclab
