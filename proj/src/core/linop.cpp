#include "linop.hpp"

#include <cmath>
#include <utility>

namespace speclab {

namespace {

class DiagonalOp final : public LinOp {
public:
    DiagonalOp(const Grid& g, std::vector<cplx> v) : LinOp(g, Kind::diagonal), v_(std::move(v)) {
        require(v_.size() == g.size(), errc::invalid_argument, "diagonal size mismatch");
    }
    void apply(const cplx* in, cplx* out) const override {
        for (std::size_t i = 0; i < v_.size(); ++i) out[i] = v_[i] * in[i];
    }
    OpPtr adjoint() const override {
        std::vector<cplx> c(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) c[i] = std::conj(v_[i]);
        return diagonal_op(grid_, std::move(c));
    }

private:
    std::vector<cplx> v_;
};

class MultiplierOp final : public LinOp {
public:
    MultiplierOp(const Grid& g, std::vector<cplx> v) : LinOp(g, Kind::multiplier), v_(std::move(v)) {
        require(v_.size() == g.size(), errc::invalid_argument, "multiplier size mismatch");
    }
    void apply(const cplx* in, cplx* out) const override {
        std::vector<cplx> hat(v_.size());
        fft_forward(grid_, in, hat.data());
        for (std::size_t i = 0; i < v_.size(); ++i) hat[i] *= v_[i];
        fft_inverse(grid_, hat.data(), out);
    }
    OpPtr adjoint() const override {
        std::vector<cplx> c(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) c[i] = std::conj(v_[i]);
        return multiplier_op(grid_, std::move(c));
    }

private:
    std::vector<cplx> v_;
};

class DenseOp final : public LinOp {
public:
    DenseOp(const Grid& g, Eigen::MatrixXcd m) : LinOp(g, Kind::dense), m_(std::move(m)) {
        require(m_.rows() == static_cast<Eigen::Index>(g.size()) && m_.cols() == m_.rows(),
                errc::invalid_argument, "dense operator shape mismatch");
    }
    void apply(const cplx* in, cplx* out) const override {
        Eigen::Map<const Eigen::VectorXcd> x(in, m_.cols());
        Eigen::Map<Eigen::VectorXcd> y(out, m_.rows());
        y.noalias() = m_ * x;
    }
    OpPtr adjoint() const override { return dense_op(grid_, m_.adjoint()); }

private:
    Eigen::MatrixXcd m_;
};

class ComposeOp final : public LinOp {
public:
    ComposeOp(const Grid& g, std::vector<OpPtr> chain)
        : LinOp(g, Kind::compose), chain_(std::move(chain)) {}
    void apply(const cplx* in, cplx* out) const override {
        // chain_[0] acts last
        std::vector<cplx> a(in, in + grid_.size());
        std::vector<cplx> b(grid_.size());
        for (std::size_t i = chain_.size(); i-- > 0;) {
            chain_[i]->apply(a.data(), b.data());
            a.swap(b);
        }
        std::copy(a.begin(), a.end(), out);
    }
    OpPtr adjoint() const override {
        std::vector<OpPtr> rev;
        rev.reserve(chain_.size());
        for (std::size_t i = chain_.size(); i-- > 0;) rev.push_back(chain_[i]->adjoint());
        return compose(std::move(rev));
    }

private:
    std::vector<OpPtr> chain_;
};

class SumOp final : public LinOp {
public:
    SumOp(const Grid& g, std::vector<OpPtr> terms) : LinOp(g, Kind::sum), terms_(std::move(terms)) {}
    void apply(const cplx* in, cplx* out) const override {
        std::fill(out, out + grid_.size(), cplx(0.0));
        std::vector<cplx> tmp(grid_.size());
        for (const auto& t : terms_) {
            t->apply(in, tmp.data());
            for (std::size_t i = 0; i < tmp.size(); ++i) out[i] += tmp[i];
        }
    }
    OpPtr adjoint() const override {
        std::vector<OpPtr> adj;
        adj.reserve(terms_.size());
        for (const auto& t : terms_) adj.push_back(t->adjoint());
        return sum_op(std::move(adj));
    }

private:
    std::vector<OpPtr> terms_;
};

class ScaleOp final : public LinOp {
public:
    ScaleOp(const Grid& g, cplx c, OpPtr a) : LinOp(g, Kind::scale), c_(c), a_(std::move(a)) {}
    void apply(const cplx* in, cplx* out) const override {
        a_->apply(in, out);
        for (std::size_t i = 0; i < grid_.size(); ++i) out[i] *= c_;
    }
    OpPtr adjoint() const override { return scale_op(std::conj(c_), a_->adjoint()); }

private:
    cplx c_;
    OpPtr a_;
};

class ZeroOp final : public LinOp {
public:
    explicit ZeroOp(const Grid& g) : LinOp(g, Kind::scale) {}
    void apply(const cplx*, cplx* out) const override {
        std::fill(out, out + grid_.size(), cplx(0.0));
    }
    OpPtr adjoint() const override { return std::make_shared<ZeroOp>(grid_); }
};

class SchrodingerOp final : public LinOp {
public:
    SchrodingerOp(const Grid& g, std::vector<double> v) : LinOp(g, Kind::fused), v_(std::move(v)) {
        require(v_.size() == g.size(), errc::invalid_argument, "potential size mismatch");
        sym_ = laplacian_symbol(g);
    }
    void apply(const cplx* in, cplx* out) const override {
        std::vector<cplx> hat(grid_.size());
        fft_forward(grid_, in, hat.data());
        for (std::size_t i = 0; i < hat.size(); ++i) hat[i] *= sym_[i];
        fft_inverse(grid_, hat.data(), out);
        for (std::size_t i = 0; i < v_.size(); ++i) out[i] += v_[i] * in[i];
    }
    OpPtr adjoint() const override { return std::make_shared<SchrodingerOp>(grid_, v_); }

private:
    std::vector<double> v_;
    std::vector<double> sym_;
};

void check_same_grid(const OpPtr& a, const OpPtr& b) {
    require(a && b, errc::invalid_argument, "null operator");
    require(a->grid().same_shape(b->grid()), errc::invalid_argument, "operator grid mismatch");
}

} // namespace

OpPtr diagonal_op(const Grid& g, std::vector<cplx> values) {
    return std::make_shared<DiagonalOp>(g, std::move(values));
}

OpPtr multiplier_op(const Grid& g, std::vector<cplx> symbol) {
    return std::make_shared<MultiplierOp>(g, std::move(symbol));
}

OpPtr dense_op(const Grid& g, Eigen::MatrixXcd m) {
    return std::make_shared<DenseOp>(g, std::move(m));
}

OpPtr identity_op(const Grid& g) {
    return diagonal_op(g, std::vector<cplx>(g.size(), cplx(1.0)));
}

OpPtr zero_op(const Grid& g) { return std::make_shared<ZeroOp>(g); }

OpPtr compose(OpPtr a, OpPtr b) {
    check_same_grid(a, b);
    return compose(std::vector<OpPtr>{std::move(a), std::move(b)});
}

OpPtr compose(std::vector<OpPtr> chain) {
    require(!chain.empty(), errc::invalid_argument, "empty composition");
    for (std::size_t i = 1; i < chain.size(); ++i) check_same_grid(chain[0], chain[i]);
    if (chain.size() == 1) return chain[0];
    Grid g = chain[0]->grid();
    return std::make_shared<ComposeOp>(g, std::move(chain));
}

OpPtr sum_op(std::vector<OpPtr> terms) {
    require(!terms.empty(), errc::invalid_argument, "empty sum");
    for (std::size_t i = 1; i < terms.size(); ++i) check_same_grid(terms[0], terms[i]);
    if (terms.size() == 1) return terms[0];
    Grid g = terms[0]->grid();
    return std::make_shared<SumOp>(g, std::move(terms));
}

OpPtr add(OpPtr a, OpPtr b) {
    check_same_grid(a, b);
    return sum_op(std::vector<OpPtr>{std::move(a), std::move(b)});
}

OpPtr sub(OpPtr a, OpPtr b) {
    check_same_grid(a, b);
    return sum_op(std::vector<OpPtr>{std::move(a), scale_op(-1.0, std::move(b))});
}

OpPtr scale_op(cplx c, OpPtr a) {
    require(a != nullptr, errc::invalid_argument, "null operator");
    Grid g = a->grid();
    return std::make_shared<ScaleOp>(g, c, std::move(a));
}

OpPtr commutator_op(OpPtr a, OpPtr b) {
    check_same_grid(a, b);
    return sub(compose(a, b), compose(b, a));
}

std::vector<double> laplacian_symbol(const Grid& g) {
    std::vector<double> v(g.size());
    double k[Grid::max_dim];
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.momentum(i, k);
        double s = 0.0;
        for (int d = 0; d < g.dim(); ++d) s += k[d] * k[d];
        v[i] = s;
    }
    return v;
}

OpPtr laplacian(const Grid& g) {
    return multiplier_fn(g, [&](const double* k) {
        double s = 0.0;
        for (int d = 0; d < g.dim(); ++d) s += k[d] * k[d];
        return cplx(s, 0.0);
    });
}

OpPtr translation_op(const Grid& g, int axis, double a) {
    require(axis >= 0 && axis < g.dim(), errc::invalid_argument, "translation axis out of range");
    return multiplier_fn(g, [&](const double* k) {
        return std::exp(cplx(0.0, a * k[axis]));
    });
}

OpPtr position_op(const Grid& g, int axis) {
    require(axis >= 0 && axis < g.dim(), errc::invalid_argument, "position axis out of range");
    return diagonal_fn(g, [&](const double* x) { return cplx(x[axis], 0.0); });
}

OpPtr weight_op(const Grid& g, double t, double s) {
    auto mult = multiplier_fn(g, [&](const double* k) {
        double kk = 1.0;
        for (int d = 0; d < g.dim(); ++d) kk += k[d] * k[d];
        return cplx(std::pow(kk, 0.5 * t), 0.0);
    });
    auto diag = diagonal_fn(g, [&](const double* x) {
        double xx = 1.0;
        for (int d = 0; d < g.dim(); ++d) xx += x[d] * x[d];
        return cplx(std::pow(xx, 0.5 * s), 0.0);
    });
    if (t == 0.0) return diag;
    if (s == 0.0) return mult;
    return compose(mult, diag);
}

OpPtr weight_op_inverse(const Grid& g, double t, double s) {
    auto mult = multiplier_fn(g, [&](const double* k) {
        double kk = 1.0;
        for (int d = 0; d < g.dim(); ++d) kk += k[d] * k[d];
        return cplx(std::pow(kk, -0.5 * t), 0.0);
    });
    auto diag = diagonal_fn(g, [&](const double* x) {
        double xx = 1.0;
        for (int d = 0; d < g.dim(); ++d) xx += x[d] * x[d];
        return cplx(std::pow(xx, -0.5 * s), 0.0);
    });
    if (t == 0.0) return diag;
    if (s == 0.0) return mult;
    return compose(diag, mult);
}

OpPtr schrodinger_op(const Grid& g, std::vector<double> v_values) {
    return std::make_shared<SchrodingerOp>(g, std::move(v_values));
}

} // namespace speclab
