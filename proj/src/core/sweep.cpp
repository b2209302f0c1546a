#include "sweep.hpp"

#include <cmath>

namespace speclab {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::violated: return "violated";
        default: return "inconclusive";
    }
}

void SweepRecord::validate() const {
    require(axis_values.size() == values.size(), errc::invalid_argument,
            "sweep axis/value length mismatch");
    for (std::size_t i = 1; i < axis_values.size(); ++i) {
        bool up = axis_values[1] > axis_values[0];
        bool step_up = axis_values[i] > axis_values[i - 1];
        require(up == step_up && axis_values[i] != axis_values[i - 1], errc::invalid_argument,
                "sweep axis must be strictly monotone");
    }
}

namespace {

// two-sided 97.5% Student-t quantiles for small residual dof
double t975(int df) {
    static const double table[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                                   2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131, 2.120,
                                   2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
                                   2.060,  2.056, 2.052, 2.048, 2.045, 2.042};
    if (df < 1) return 12.706;
    if (df <= 30) return table[df - 1];
    return 1.96;
}

} // namespace

SlopeFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    SlopeFit f;
    f.n = static_cast<int>(xs.size());
    if (xs.size() != ys.size() || xs.size() < 3) return f;
    const int n = f.n;
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = ys[i] - (f.intercept + f.slope * xs[i]);
        ss += r * r;
    }
    int df = n - 2;
    f.stderr_slope = df > 0 ? std::sqrt(ss / df / sxx) : 0.0;
    f.ci95 = t975(df) * f.stderr_slope;
    f.ok = true;
    return f;
}

SlopeFit fit_loglog_tail(const SweepRecord& rec, double decade, double value_floor) {
    rec.validate();
    double axis_max = 0.0;
    for (double a : rec.axis_values) axis_max = std::max(axis_max, std::abs(a));
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < rec.axis_values.size(); ++i) {
        double a = std::abs(rec.axis_values[i]);
        if (a < axis_max / decade) continue;
        if (!(rec.values[i] > value_floor)) continue;
        xs.push_back(std::log(a));
        ys.push_back(std::log(rec.values[i]));
    }
    return fit_line(xs, ys);
}

Verdict slope_verdict(const SlopeFit& fit, double threshold) {
    if (!fit.ok) return Verdict::inconclusive;
    if (fit.slope + fit.ci95 < threshold) return Verdict::satisfied;
    // >= so that an exactly flat profile (zero residual, zero band) counts
    // as non-integrable rather than borderline
    if (fit.slope - fit.ci95 >= threshold) return Verdict::violated;
    return Verdict::inconclusive;
}

} // namespace speclab
