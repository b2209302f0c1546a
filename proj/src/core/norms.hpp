#pragma once

#include <cstdint>
#include <vector>

#include "linop.hpp"

namespace speclab {

enum class NormMethod { power_iteration, dense_svd };

struct PowerOpts {
    double tol = 1e-9;
    int max_iters = 2000;
    std::uint64_t seed = 7;
};

struct PowerResult {
    double value = 0.0;
    int iters = 0;
    bool converged = false;
    double rel_change = 0.0;
};

// Largest singular value via power iteration on A*A. Always returns the
// last iterate; callers needing a hard guarantee use opnorm() below.
PowerResult opnorm_power(const LinOp& op, const PowerOpts& opts = {});

// Plain L2 -> L2 operator norm; throws errc::no_convergence (message
// carries the last iterate) if power iteration stalls.
double opnorm_l2(const LinOp& op, NormMethod method = NormMethod::power_iteration,
                 const PowerOpts& opts = {});

// Norm between weighted spaces: || W_out . T . W_in^{-1} || on L2 with
// W = <p>^t <q>^s. Pass the exponents OF THE SPACES: input space H^{t_in}_{s_in},
// output space H^{t_out}_{s_out} (so the H^1 -> H^-1 norm is t_in=1, t_out=-1).
double opnorm_weighted(OpPtr op, double t_in, double s_in, double t_out, double s_out,
                       NormMethod method = NormMethod::power_iteration, const PowerOpts& opts = {});

// The weighted composition itself (useful for sweeps that re-measure it).
OpPtr weighted_realization(OpPtr op, double t_in, double s_in, double t_out, double s_out);

// B(H^1, H^-1) shortcut used by most regularity diagnostics.
double opnorm_b1(OpPtr op, NormMethod method = NormMethod::power_iteration,
                 const PowerOpts& opts = {});

// -- inner-window policy -------------------------------------------------
//
// The coordinate diagonal is a sawtooth under periodic wrap, so every
// form evaluation involving q is restricted to states that live well
// inside the box in position and well inside the resolved band in
// momentum. window_frac / band_frac set the two hard indicators.
struct WindowPolicy {
    double window_frac = 0.5;
    double band_frac = 0.7;
};

OpPtr position_window(const Grid& g, double frac);
OpPtr band_window(const Grid& g, double frac);
// Two-sided compression B(p) P(q) op P(q) B(p).
OpPtr windowed(OpPtr op, const WindowPolicy& policy = {});
// Operator norm of the compression.
double windowed_opnorm(OpPtr op, const WindowPolicy& policy = {},
                       NormMethod method = NormMethod::power_iteration,
                       const PowerOpts& opts = {});

// Random band-limited states under a Gaussian envelope (sigma =
// window_frac*L/4), normalized: smooth, numerically supported in the
// inner window, spectrally inside the band. The workhorse ensemble for
// form comparisons.
std::vector<GridFunction> window_states(const Grid& g, int count, std::uint64_t seed,
                                        const WindowPolicy& policy = {});

// max over ensemble pairs of |<g,(A-B)f>| (states are normalized).
double form_residual(const LinOp& a, const LinOp& b, const std::vector<GridFunction>& states);
// max over ensemble pairs of |<g, A f>|.
double form_max(const LinOp& a, const std::vector<GridFunction>& states);

} // namespace speclab
