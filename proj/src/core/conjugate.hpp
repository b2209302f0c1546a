#pragma once

#include <array>
#include <functional>

#include "linop.hpp"
#include "vectorfield.hpp"

namespace speclab {

// Conjugate operator A_u = (u(p).q + q.u(p))/2, realized in the
// equivalent ordered form sum_j q_j u_j(p) - (i/2)(div u)(p). The two
// differ only by wrap-seam terms of the coordinate sawtooth, so symmetry
// holds on inner-window forms.
OpPtr assemble_A(const Grid& g, const VectorField& u);

// Smooth momentum symbol with closed-form gradient.
struct Symbol {
    std::function<double(const double*, int)> value;
    std::function<void(const double*, int, double*)> gradient;

    static Symbol laplace(); // |k|^2, gradient 2k
};

// The exact multiplier (u . grad h)(p); for h = |k|^2 this is the free
// commutator [h(p), iA_u] = 2 p.u(p).
OpPtr multiplier_commutator(const Symbol& h, const VectorField& u, const Grid& g);

// -- classical flow -------------------------------------------------------

struct FlowOpts {
    double step = 0.0;           // <= 0: default 1e-3 * min(1, 1/sup|u'|)
    std::size_t max_steps = 20000000;
};

struct FlowResult {
    std::array<double, Grid::max_dim> point{};
    double jacobian_det = 1.0;
    double tau = 0.0;
    std::size_t steps = 0;
};

// Integrates dx/dtau = u(x) jointly with dlog(J)/dtau = div u(x) by
// classical RK4 at fixed step, so the determinant stays positive by
// construction.
FlowResult flow(const VectorField& u, const double* x0, int dim, double tau,
                const FlowOpts& opts = {});

// -- unitary group --------------------------------------------------------

struct TransportOpts {
    int order = 4;      // Lagrange stencil width: 4 (cubic), 6, or 8
    int oversample = 4; // spectral refinement factor (power of two)
    double escape_frac = 0.2; // max flow displacement as a fraction of kmax
};

// e^{i tau A_u} through the momentum-side transport representation:
// spectrum -> sqrt(J) times spectrum evaluated along the flow -> back.
// Spectrum samples are refined by zero-padded resampling before the
// Lagrange read, and the adjoint is the exact discrete transpose of the
// whole pipeline. Unbounded fields are refused once the flow could move
// band content by more than escape_frac * kmax; values transported from
// beyond the band read as zero.
OpPtr group_element(const Grid& g, const VectorField& u, double tau,
                    const TransportOpts& opts = {});

} // namespace speclab
