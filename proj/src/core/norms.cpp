#include "norms.hpp"

#include <cmath>
#include <sstream>

#include "dense.hpp"
#include "rng.hpp"

namespace speclab {

namespace {

double l2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

PowerResult opnorm_power(const LinOp& op, const PowerOpts& opts) {
    const std::size_t n = op.grid().size();
    OpPtr adj = op.adjoint();
    Rng rng(opts.seed);
    std::vector<cplx> v(n), w(n), u(n);
    for (auto& z : v) z = rng.cnormal();
    double nv = l2(v);
    for (auto& z : v) z /= nv;

    PowerResult res;
    double prev = -1.0;
    for (int it = 1; it <= opts.max_iters; ++it) {
        op.apply(v.data(), w.data());
        double sigma = l2(w); // ||Av|| for unit v
        res.iters = it;
        res.value = sigma;
        if (sigma == 0.0) {
            res.converged = true;
            res.rel_change = 0.0;
            return res;
        }
        adj->apply(w.data(), u.data());
        double nu = l2(u);
        if (nu == 0.0) {
            res.converged = true;
            return res;
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / nu;
        res.rel_change = prev < 0.0 ? 1.0 : std::abs(sigma - prev) / sigma;
        if (prev >= 0.0 && res.rel_change <= opts.tol) {
            res.converged = true;
            return res;
        }
        prev = sigma;
    }
    return res;
}

double opnorm_l2(const LinOp& op, NormMethod method, const PowerOpts& opts) {
    if (method == NormMethod::dense_svd) return opnorm_dense(op);
    PowerResult r = opnorm_power(op, opts);
    if (!r.converged) {
        std::ostringstream os;
        os << "power iteration did not converge in " << opts.max_iters
           << " iterations; last iterate " << r.value << " (rel change " << r.rel_change << ")";
        fail(errc::no_convergence, os.str());
    }
    return r.value;
}

OpPtr weighted_realization(OpPtr op, double t_in, double s_in, double t_out, double s_out) {
    require(op != nullptr, errc::invalid_argument, "null operator");
    const Grid& g = op->grid();
    std::vector<OpPtr> chain;
    if (t_out != 0.0 || s_out != 0.0) chain.push_back(weight_op(g, t_out, s_out));
    chain.push_back(op);
    if (t_in != 0.0 || s_in != 0.0) chain.push_back(weight_op_inverse(g, t_in, s_in));
    return compose(std::move(chain));
}

double opnorm_weighted(OpPtr op, double t_in, double s_in, double t_out, double s_out,
                       NormMethod method, const PowerOpts& opts) {
    return opnorm_l2(*weighted_realization(std::move(op), t_in, s_in, t_out, s_out), method, opts);
}

double opnorm_b1(OpPtr op, NormMethod method, const PowerOpts& opts) {
    return opnorm_weighted(std::move(op), 1.0, 0.0, -1.0, 0.0, method, opts);
}

OpPtr position_window(const Grid& g, double frac) {
    double cut = frac * g.half_width();
    return diagonal_fn(g, [&, cut](const double* x) {
        for (int d = 0; d < g.dim(); ++d) {
            if (std::abs(x[d]) > cut) return cplx(0.0);
        }
        return cplx(1.0);
    });
}

OpPtr band_window(const Grid& g, double frac) {
    double cut = frac * g.kmax();
    return multiplier_fn(g, [&, cut](const double* k) {
        for (int d = 0; d < g.dim(); ++d) {
            if (std::abs(k[d]) > cut) return cplx(0.0);
        }
        return cplx(1.0);
    });
}

OpPtr windowed(OpPtr op, const WindowPolicy& policy) {
    require(op != nullptr, errc::invalid_argument, "null operator");
    const Grid& g = op->grid();
    OpPtr p = position_window(g, policy.window_frac);
    OpPtr b = band_window(g, policy.band_frac);
    return compose({b, p, std::move(op), p, b});
}

double windowed_opnorm(OpPtr op, const WindowPolicy& policy, NormMethod method,
                       const PowerOpts& opts) {
    return opnorm_l2(*windowed(std::move(op), policy), method, opts);
}

std::vector<GridFunction> window_states(const Grid& g, int count, std::uint64_t seed,
                                        const WindowPolicy& policy) {
    std::vector<GridFunction> out;
    out.reserve(count);
    double kcut = policy.band_frac * g.kmax();
    double sigma = policy.window_frac * g.half_width() / 4.0;
    double k[Grid::max_dim];
    double x[Grid::max_dim];
    for (int c = 0; c < count; ++c) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(c)));
        std::vector<cplx> coef(g.size(), cplx(0.0));
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.momentum(i, k);
            bool in_band = true;
            for (int d = 0; d < g.dim(); ++d) in_band = in_band && std::abs(k[d]) <= kcut;
            if (in_band) coef[i] = rng.cnormal();
        }
        GridFunction f = GridFunction::from_spectrum(g, coef);
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.position(i, x);
            double r2 = 0.0;
            for (int d = 0; d < g.dim(); ++d) r2 += x[d] * x[d];
            f[i] *= std::exp(-r2 / (2.0 * sigma * sigma));
        }
        double nf = f.norm();
        require(nf > 0.0, errc::invalid_argument, "degenerate test state");
        f *= cplx(1.0 / nf, 0.0);
        out.push_back(std::move(f));
    }
    return out;
}

double form_residual(const LinOp& a, const LinOp& b, const std::vector<GridFunction>& states) {
    double worst = 0.0;
    for (const auto& f : states) {
        std::vector<cplx> af = a.apply_vec(f.values());
        std::vector<cplx> bf = b.apply_vec(f.values());
        for (std::size_t i = 0; i < af.size(); ++i) af[i] -= bf[i];
        GridFunction diff(a.grid(), std::move(af));
        for (const auto& gst : states) {
            worst = std::max(worst, std::abs(inner(gst, diff)));
        }
    }
    return worst;
}

double form_max(const LinOp& a, const std::vector<GridFunction>& states) {
    double worst = 0.0;
    for (const auto& f : states) {
        GridFunction af(a.grid(), a.apply_vec(f.values()));
        for (const auto& gst : states) {
            worst = std::max(worst, std::abs(inner(gst, af)));
        }
    }
    return worst;
}

} // namespace speclab
