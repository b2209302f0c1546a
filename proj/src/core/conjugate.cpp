#include "conjugate.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "fft.hpp"

namespace speclab {

OpPtr assemble_A(const Grid& g, const VectorField& u) {
    // sum_j q_j u_j(p) - (i/2)(div u)(p), which is the symmetrized
    // (u(p).q + q.u(p))/2 up to wrap-seam terms of the coordinate sawtooth.
    const int dim = g.dim();
    std::vector<OpPtr> terms;
    terms.reserve(dim + 1);
    for (int j = 0; j < dim; ++j) {
        auto uj = multiplier_fn(g, [&u, dim, j](const double* k) {
            double v[Grid::max_dim];
            u.eval(k, dim, v);
            return cplx(v[j], 0.0);
        });
        terms.push_back(compose(position_op(g, j), std::move(uj)));
    }
    terms.push_back(scale_op(cplx(0.0, -0.5), multiplier_fn(g, [&u, dim](const double* k) {
                                 return cplx(u.divergence(k, dim), 0.0);
                             })));
    return sum_op(std::move(terms));
}

Symbol Symbol::laplace() {
    Symbol s;
    s.value = [](const double* k, int dim) {
        double r = 0.0;
        for (int d = 0; d < dim; ++d) r += k[d] * k[d];
        return r;
    };
    s.gradient = [](const double* k, int dim, double* out) {
        for (int d = 0; d < dim; ++d) out[d] = 2.0 * k[d];
    };
    return s;
}

OpPtr multiplier_commutator(const Symbol& h, const VectorField& u, const Grid& g) {
    require(static_cast<bool>(h.gradient), errc::invalid_argument,
            "multiplier_commutator: symbol lacks a gradient");
    const int dim = g.dim();
    return multiplier_fn(g, [&h, &u, dim](const double* k) {
        double uv[Grid::max_dim];
        double gv[Grid::max_dim];
        u.eval(k, dim, uv);
        h.gradient(k, dim, gv);
        double s = 0.0;
        for (int d = 0; d < dim; ++d) s += uv[d] * gv[d];
        return cplx(s, 0.0);
    });
}

// -- classical flow -------------------------------------------------------

FlowResult flow(const VectorField& u, const double* x0, int dim, double tau,
                const FlowOpts& opts) {
    require(dim >= 1 && dim <= Grid::max_dim, errc::invalid_argument, "flow: dim out of range");

    double step = opts.step;
    if (step <= 0.0) {
        const double sdu = u.sup_du();
        const double cap = (std::isfinite(sdu) && sdu > 1.0) ? 1.0 / sdu : 1.0;
        step = 1e-3 * cap;
    }
    require(std::isfinite(step) && step > 0.0, errc::invalid_argument, "flow: bad step");

    FlowResult res;
    res.tau = tau;
    for (int d = 0; d < dim; ++d) res.point[d] = x0[d];
    if (tau == 0.0) return res;

    const double nsteps_real = std::ceil(std::abs(tau) / step);
    if (nsteps_real > static_cast<double>(opts.max_steps)) {
        std::ostringstream os;
        os << "flow: " << nsteps_real << " steps of " << step << " exceed the budget "
           << opts.max_steps << " (stiff field?)";
        fail(errc::no_convergence, os.str());
    }
    const std::size_t nsteps = static_cast<std::size_t>(nsteps_real);
    const double h = tau / static_cast<double>(nsteps);

    // State y = (x, log J); dlog(J)/dtau = div u keeps J positive exactly.
    const int m = dim + 1;
    double y[Grid::max_dim + 1];
    for (int d = 0; d < dim; ++d) y[d] = x0[d];
    y[dim] = 0.0;

    auto deriv = [&u, dim](const double* s, double* ds) {
        u.eval(s, dim, ds);
        ds[dim] = u.divergence(s, dim);
    };

    double k1[Grid::max_dim + 1], k2[Grid::max_dim + 1], k3[Grid::max_dim + 1],
        k4[Grid::max_dim + 1], tmp[Grid::max_dim + 1];
    for (std::size_t i = 0; i < nsteps; ++i) {
        deriv(y, k1);
        for (int d = 0; d < m; ++d) tmp[d] = y[d] + 0.5 * h * k1[d];
        deriv(tmp, k2);
        for (int d = 0; d < m; ++d) tmp[d] = y[d] + 0.5 * h * k2[d];
        deriv(tmp, k3);
        for (int d = 0; d < m; ++d) tmp[d] = y[d] + h * k3[d];
        deriv(tmp, k4);
        for (int d = 0; d < m; ++d) y[d] += (h / 6.0) * (k1[d] + 2.0 * k2[d] + 2.0 * k3[d] + k4[d]);

        bool finite = true;
        for (int d = 0; d < m; ++d) finite = finite && std::isfinite(y[d]);
        if (!finite) {
            std::ostringstream os;
            os << "flow: state left the domain after step " << i + 1 << " of " << nsteps
               << " (last accepted tau = " << h * static_cast<double>(i) << ", point =";
            for (int d = 0; d < dim; ++d) os << ' ' << res.point[d];
            os << ")";
            fail(errc::domain_escape, os.str());
        }
        for (int d = 0; d < dim; ++d) res.point[d] = y[d];
        res.steps = i + 1;
    }
    res.jacobian_det = std::exp(y[dim]);
    return res;
}

// -- unitary group --------------------------------------------------------

namespace {

struct Stencil {
    int j0[Grid::max_dim];
    double w[Grid::max_dim][8];
};

struct TransportData {
    Grid coarse;
    Grid fine;
    double tau = 0.0;
    int order = 4;
    std::vector<double> sqrt_j; // per coarse node
    std::vector<Stencil> sten;  // per coarse node
    std::vector<std::size_t> embed; // coarse node -> fine node (position side)
    double adj_scale = 1.0;         // oversample^dim, from the transform pair
};

// Lagrange weights of the given order at fractional fine-lattice index t.
void lagrange_weights(double t, int order, int* j0_out, double* w_out) {
    const int jc = static_cast<int>(std::floor(t));
    const int j0 = jc - order / 2 + 1;
    for (int i = 0; i < order; ++i) {
        double wi = 1.0;
        for (int l = 0; l < order; ++l) {
            if (l == i) continue;
            wi *= (t - static_cast<double>(j0 + l)) / static_cast<double>(i - l);
        }
        w_out[i] = wi;
    }
    *j0_out = j0;
}

class TransportOp final : public LinOp {
public:
    TransportOp(std::shared_ptr<const TransportData> d, bool adj)
        : LinOp(d->coarse, Kind::transport), d_(std::move(d)), adj_(adj) {}

    void apply(const cplx* in, cplx* out) const override {
        const Grid& g = grid_;
        if (d_->tau == 0.0) {
            std::memcpy(out, in, g.size() * sizeof(cplx));
            return;
        }
        if (!adj_) {
            applyForward(in, out);
        } else {
            applyAdjoint(in, out);
        }
    }

    OpPtr adjoint() const override { return std::make_shared<TransportOp>(d_, !adj_); }

private:
    // spectrum refinement by zero-padded resampling, then a weighted
    // stencil read at the flow targets, then back to the coarse grid.
    void applyForward(const cplx* in, cplx* out) const {
        const TransportData& d = *d_;
        std::vector<cplx> fine_pos(d.fine.size(), cplx(0.0, 0.0));
        for (std::size_t i = 0; i < d.coarse.size(); ++i) fine_pos[d.embed[i]] = in[i];
        std::vector<cplx> fine_spec(d.fine.size());
        fft_forward(d.fine, fine_pos.data(), fine_spec.data());

        std::vector<cplx> coarse_spec(d.coarse.size());
        for (std::size_t i = 0; i < d.coarse.size(); ++i)
            coarse_spec[i] = d.sqrt_j[i] * gather(d, d.sten[i], fine_spec);
        fft_inverse(d.coarse, coarse_spec.data(), out);
    }

    // Exact discrete transpose of applyForward: the transform pair is
    // unitary for the grid weights, so the raw adjoint only costs the
    // oversample^dim factor between the two momentum quadratures.
    void applyAdjoint(const cplx* in, cplx* out) const {
        const TransportData& d = *d_;
        std::vector<cplx> coarse_spec(d.coarse.size());
        fft_forward(d.coarse, in, coarse_spec.data());

        std::vector<cplx> fine_spec(d.fine.size(), cplx(0.0, 0.0));
        for (std::size_t i = 0; i < d.coarse.size(); ++i)
            scatter(d, d.sten[i], d.sqrt_j[i] * coarse_spec[i], fine_spec);

        std::vector<cplx> fine_pos(d.fine.size());
        fft_inverse(d.fine, fine_spec.data(), fine_pos.data());
        for (std::size_t i = 0; i < d.coarse.size(); ++i)
            out[i] = d.adj_scale * fine_pos[d.embed[i]];
    }

    static cplx gather(const TransportData& d, const Stencil& st, const std::vector<cplx>& spec) {
        const int dim = d.coarse.dim();
        const int order = d.order;
        const int nf = d.fine.n();
        cplx acc(0.0, 0.0);
        int idx[Grid::max_dim] = {0, 0, 0};
        for (;;) {
            double w = 1.0;
            bool inside = true;
            std::size_t flat = 0;
            for (int dd = 0; dd < dim; ++dd) {
                const int j = st.j0[dd] + idx[dd];
                if (j < 0 || j >= nf) { // beyond the band: spectrum reads as zero
                    inside = false;
                    break;
                }
                w *= st.w[dd][idx[dd]];
                flat = flat * static_cast<std::size_t>(nf) + static_cast<std::size_t>(j);
            }
            if (inside) acc += w * spec[flat];
            int dd = dim - 1;
            for (; dd >= 0; --dd) {
                if (++idx[dd] < order) break;
                idx[dd] = 0;
            }
            if (dd < 0) break;
        }
        return acc;
    }

    static void scatter(const TransportData& d, const Stencil& st, cplx val,
                        std::vector<cplx>& spec) {
        const int dim = d.coarse.dim();
        const int order = d.order;
        const int nf = d.fine.n();
        int idx[Grid::max_dim] = {0, 0, 0};
        for (;;) {
            double w = 1.0;
            bool inside = true;
            std::size_t flat = 0;
            for (int dd = 0; dd < dim; ++dd) {
                const int j = st.j0[dd] + idx[dd];
                if (j < 0 || j >= nf) {
                    inside = false;
                    break;
                }
                w *= st.w[dd][idx[dd]];
                flat = flat * static_cast<std::size_t>(nf) + static_cast<std::size_t>(j);
            }
            if (inside) spec[flat] += w * val;
            int dd = dim - 1;
            for (; dd >= 0; --dd) {
                if (++idx[dd] < order) break;
                idx[dd] = 0;
            }
            if (dd < 0) break;
        }
    }

    std::shared_ptr<const TransportData> d_;
    bool adj_;
};

} // namespace

OpPtr group_element(const Grid& g, const VectorField& u, double tau, const TransportOpts& opts) {
    require(opts.order == 4 || opts.order == 6 || opts.order == 8, errc::invalid_argument,
            "group_element: interpolation order must be 4, 6, or 8");
    require(opts.oversample >= 1 && (opts.oversample & (opts.oversample - 1)) == 0 &&
                opts.oversample <= 64,
            errc::invalid_argument, "group_element: oversample must be a power of two");
    require(opts.escape_frac > 0.0 && opts.escape_frac < 1.0, errc::invalid_argument,
            "group_element: escape_frac out of range");

    auto data = std::make_shared<TransportData>(TransportData{
        g, Grid(g.dim(), g.n() * opts.oversample, g.half_width() * opts.oversample, g.offset()),
        tau, opts.order});
    if (tau == 0.0) return std::make_shared<TransportOp>(std::move(data), false);

    const int dim = g.dim();
    const std::size_t n = g.size();
    data->sqrt_j.resize(n);
    data->sten.resize(n);
    data->embed.resize(n);
    data->adj_scale = std::pow(static_cast<double>(opts.oversample), dim);

    const double kmax = g.kmax();
    const double dkf = data->fine.dk();
    const int half_pad = (opts.oversample - 1) * g.n() / 2;
    const double limit = opts.escape_frac * kmax;

    double k[Grid::max_dim];
    int mi[Grid::max_dim];
    for (std::size_t i = 0; i < n; ++i) {
        g.momentum(i, k);

        // With this transform pair e^{i tau A_u} reads the spectrum along
        // the backward flow; the forward flow tells where band content
        // ends up, so both directions must stay within the slack band.
        const FlowResult back = flow(u, k, dim, -tau);
        const FlowResult fwd = flow(u, k, dim, tau);
        for (int d = 0; d < dim; ++d) {
            const double move =
                std::max(std::abs(back.point[d] - k[d]), std::abs(fwd.point[d] - k[d]));
            if (move > limit) {
                std::ostringstream os;
                os << "group_element: flow moves momentum node " << i << " (k_" << d << " = "
                   << k[d] << ") by " << move << ", beyond " << limit
                   << " = escape_frac * kmax; reduce |tau| or enlarge the band";
                fail(errc::domain_escape, os.str());
            }
        }

        data->sqrt_j[i] = std::sqrt(back.jacobian_det);
        Stencil& st = data->sten[i];
        for (int d = 0; d < dim; ++d) {
            const double t = (back.point[d] + kmax) / dkf;
            lagrange_weights(t, opts.order, &st.j0[d], st.w[d]);
        }

        g.unravel(i, mi);
        std::size_t fm = 0;
        for (int d = 0; d < dim; ++d)
            fm = fm * static_cast<std::size_t>(data->fine.n()) +
                 static_cast<std::size_t>(mi[d] + half_pad);
        data->embed[i] = fm;
    }
    return std::make_shared<TransportOp>(std::move(data), false);
}

} // namespace speclab
