#pragma once

#include <Eigen/Core>
#include <memory>
#include <vector>

#include "gridfn.hpp"

namespace speclab {

class LinOp;
using OpPtr = std::shared_ptr<const LinOp>;

// Linear operator on grid functions (position-side sample vectors).
// Multiplier kinds act through the unitary transform pair in fft.hpp, so a
// multiplier and a diagonal built from the same symbol are exactly
// conjugate: m(p) = F^{-1} m(q) F.
class LinOp {
public:
    enum class Kind { multiplier, diagonal, dense, compose, sum, scale, adjoint_of, fused, transport };

    LinOp(const Grid& g, Kind k) : grid_(g), kind_(k) {}
    virtual ~LinOp() = default;

    const Grid& grid() const { return grid_; }
    Kind kind() const { return kind_; }

    // out must not alias in.
    virtual void apply(const cplx* in, cplx* out) const = 0;
    virtual OpPtr adjoint() const = 0;

    // Node values when the operator is a plain coordinate diagonal.
    virtual const std::vector<cplx>* diagonal_values() const { return nullptr; }

    std::vector<cplx> apply_vec(const std::vector<cplx>& in) const {
        require(in.size() == grid_.size(), errc::invalid_argument, "operator input size mismatch");
        std::vector<cplx> out(in.size());
        apply(in.data(), out.data());
        return out;
    }

    GridFunction operator()(const GridFunction& f) const {
        return GridFunction(grid_, apply_vec(f.values()));
    }

protected:
    Grid grid_;
    Kind kind_;
};

// -- factories ---------------------------------------------------------

OpPtr diagonal_op(const Grid& g, std::vector<cplx> values);
OpPtr multiplier_op(const Grid& g, std::vector<cplx> symbol); // momentum storage order

template <class Fn>
OpPtr diagonal_fn(const Grid& g, Fn&& fn) {
    std::vector<cplx> v(g.size());
    double x[Grid::max_dim];
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.position(i, x);
        v[i] = fn(x);
    }
    return diagonal_op(g, std::move(v));
}

template <class Fn>
OpPtr multiplier_fn(const Grid& g, Fn&& fn) {
    std::vector<cplx> v(g.size());
    double k[Grid::max_dim];
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.momentum(i, k);
        v[i] = fn(k);
    }
    return multiplier_op(g, std::move(v));
}

OpPtr dense_op(const Grid& g, Eigen::MatrixXcd m);
OpPtr identity_op(const Grid& g);
OpPtr zero_op(const Grid& g);
OpPtr compose(OpPtr a, OpPtr b); // a after b
OpPtr compose(std::vector<OpPtr> chain);
OpPtr sum_op(std::vector<OpPtr> terms);
OpPtr add(OpPtr a, OpPtr b);
OpPtr sub(OpPtr a, OpPtr b);
OpPtr scale_op(cplx c, OpPtr a);
OpPtr commutator_op(OpPtr a, OpPtr b); // ab - ba

// Laplacian as the exact multiplier |k|^2.
OpPtr laplacian(const Grid& g);
// Translation by a along one axis: the exact phase e^{i a k_j}.
OpPtr translation_op(const Grid& g, int axis, double a);
// Coordinate diagonal q_j (a sawtooth under periodic wrap).
OpPtr position_op(const Grid& g, int axis);

// Weighted-space factor <p>^t <q>^s, diagonal applied first (fixed order
// used by every weighted norm here). Its exact inverse composes the
// negated exponents in reverse order.
OpPtr weight_op(const Grid& g, double t, double s);
OpPtr weight_op_inverse(const Grid& g, double t, double s);

// Fused H = Delta + V for real V: one transform pair per apply.
OpPtr schrodinger_op(const Grid& g, std::vector<double> v_values);

// Node values of |k|^2 in momentum storage order.
std::vector<double> laplacian_symbol(const Grid& g);

} // namespace speclab
