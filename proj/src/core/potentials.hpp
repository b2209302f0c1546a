#pragma once

#include <functional>
#include <string>
#include <vector>

#include "linop.hpp"
#include "sweep.hpp"

namespace speclab {

// Closed-form potential catalog. Radial families read |x|; the smooth
// cutoff kappa (1 on [-r0,r0], 0 outside [-r1,r1]) removes origin
// singularities via the (1 - kappa) factor.
struct PotentialSpec {
    enum class Family {
        zero,
        oscillating,  // (1-kappa)(|x|) sin(kfreq |x|^alpha) / |x|^beta
        exponential,  // (1-kappa)(|x|) exp(3|x|/4) sin(exp|x|)
        fourier_comb, // x V(x) has momentum density sum of lambda_n bump(. - n)
        bump_sum,     // sum_n n^{(3 nu - 1)/2} bump'(n^{3 nu / 2}(|x| - n))
        inverse_power, // <x>^{-mu}
        well,         // -depth * smooth indicator of |x| < radius
        gaussian,     // amplitude * exp(-|x|^2 / (2 radius^2))
        custom
    };

    Family family = Family::zero;
    double alpha = 2.0, beta = 1.0, kfreq = 1.0;
    double cut_r0 = 1.0, cut_r1 = 2.0;
    double mu = 1.0;
    double depth = 10.0;
    double radius = 1.0;
    double amplitude = 1.0;
    int comb_pmax = 0; // 0: largest p with 2^p + 1 inside the resolved band
    double bump_nu = 1.0;
    std::function<double(const double*, int)> custom_fn;
    std::string label;

    std::string name() const;

    static PotentialSpec zero();
    static PotentialSpec oscillating(double alpha, double beta, double kfreq = 1.0,
                                     double r0 = 1.0, double r1 = 2.0);
    static PotentialSpec exponential(double r0 = 1.0, double r1 = 2.0);
    static PotentialSpec fourier_comb(int pmax = 0);
    static PotentialSpec bump_sum(double nu);
    static PotentialSpec inverse_power(double mu);
    static PotentialSpec well(double depth, double radius);
    static PotentialSpec gaussian(double amplitude, double radius);
    static PotentialSpec custom(std::string label, std::function<double(const double*, int)> fn);
};

struct RealizedPotential {
    std::vector<double> values;
    std::vector<std::string> flags; // hypothesis warnings, residuals, resolution notes
    double resolved_radius;         // beyond this radius oscillations alias (exponential only)
};

// Deterministic sampling of the closed form on the grid's position nodes.
RealizedPotential realize(const PotentialSpec& spec, const Grid& g);
OpPtr potential_op(const PotentialSpec& spec, const Grid& g);

// 1D parse helper for CLI configs: "zero", "oscillating:a,b[,k]",
// "exponential", "fourier-comb[:pmax]", "bump-sum:nu", "inverse-power:mu",
// "well:depth,radius", "gaussian:amp,radius".
PotentialSpec potential_by_name(const std::string& text);

// -- scalar diagnostics --------------------------------------------------

struct SeminormReport {
    std::string kind;
    SweepRecord profile;
    Verdict verdict = Verdict::inconclusive;
    double truncation_radius = 0.0;
    SlopeFit fit;
    std::vector<std::string> notes;
};

// Windowed Lp mass over the ball |y - x| < 1 (quadrature on nodes).
double local_lp_seminorm(const Grid& g, const std::vector<double>& v, double p, const double* x0);
// Sup of the above over nodes in the inner window |x| <= window_frac * L.
double local_lp_sup(const Grid& g, const std::vector<double>& v, double p,
                    double window_frac = 0.5);

// r-profile of sup_{|x|>r} |x| * (windowed Lp of V(.+a) - V); the shift is
// snapped to a lattice step and recorded. Verdict: log-log slope < 0 at
// 95% confidence (integrability against dr/r).
SeminormReport phi_a_profile(const Grid& g, const PotentialSpec& spec, double a, double p,
                             const std::vector<double>& r_schedule);

// r-profile of || xi(q/r) S ||_{H^1 -> H^-1} with xi vanishing on |x| <= r
// and 1 beyond 2r. Verdict: slope < -1 (integrability against dr).
SeminormReport short_range_integral(OpPtr s_op, const std::vector<double>& r_schedule);

// || <p>^{-1} ( <q>^{1+mu} f ) ||, the negative-order membership proxy.
double h_minus_one_norm(const Grid& g, const std::vector<double>& f, double mu);

} // namespace speclab
