#pragma once

#include <cmath>

// Smooth cutoff building blocks shared by every module that needs a
// compactly supported weight: the potential cutoff kappa, the tail cutoff
// xi, the comb bump chi and the inner-window masks are all built from the
// same C-infinity transition.

namespace speclab {

// g(t) = exp(-1/t) for t > 0, extended by 0; all derivatives vanish at 0.
inline double expm_step(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// Monotone C-infinity ramp: 0 for t <= 0, 1 for t >= 1, flat at both ends.
inline double smooth_ramp(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = expm_step(t);
    const double b = expm_step(1.0 - t);
    return a / (a + b);
}

// Standard bump: exp(1 - 1/(1-t^2)) on (-1,1), 0 outside, peak value 1 at 0.
inline double bump(double t) {
    const double u = 1.0 - t * t;
    if (u <= 0.0) return 0.0;
    return std::exp(1.0 - 1.0 / u);
}

// d/dt of bump(t).
inline double bump_prime(double t) {
    const double u = 1.0 - t * t;
    if (u <= 0.0) return 0.0;
    return bump(t) * (-2.0 * t / (u * u));
}

// kappa(r; r0, r1): 1 for |r| <= r0, 0 for |r| >= r1, C-infinity in between.
inline double kappa_cutoff(double r, double r0, double r1) {
    const double a = std::abs(r);
    if (a <= r0) return 1.0;
    if (a >= r1) return 0.0;
    return 1.0 - smooth_ramp((a - r0) / (r1 - r0));
}

// xi(r): 0 for |r| <= 1, 1 for |r| >= 2 (tail selector used by the
// localized-norm profiles; evaluate as xi(x / r) to select |x| >~ r).
inline double xi_tail(double r) {
    const double a = std::abs(r);
    if (a <= 1.0) return 0.0;
    if (a >= 2.0) return 1.0;
    return smooth_ramp(a - 1.0);
}

} // namespace speclab
