#include "dense.hpp"

#include <Eigen/SVD>

namespace speclab {

Eigen::MatrixXcd to_dense(const LinOp& op) {
    const std::size_t n = op.grid().size();
    require(n <= dense_cap, errc::size_cap_exceeded,
            "dense materialization above size cap; use a matrix-free method or smaller grid");
    Eigen::MatrixXcd m(n, n);
    std::vector<cplx> e(n, cplx(0.0));
    std::vector<cplx> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        op.apply(e.data(), col.data());
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

HermEig dense_eig(const Eigen::MatrixXcd& m, double herm_tol) {
    double scale = m.norm();
    double drift = (m - m.adjoint()).norm();
    require(drift <= herm_tol * std::max(scale, 1.0), errc::invalid_argument,
            "operator is not self-adjoint within tolerance");
    Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    require(es.info() == Eigen::Success, errc::no_convergence, "eigendecomposition failed");
    return HermEig{es.eigenvalues(), es.eigenvectors()};
}

HermEig dense_eig(const LinOp& op, double herm_tol) { return dense_eig(to_dense(op), herm_tol); }

double opnorm_dense(const LinOp& op) {
    Eigen::MatrixXcd m = to_dense(op);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

Eigen::MatrixXcd dense_unitary_exp(const LinOp& a, double tau, double herm_tol) {
    HermEig e = dense_eig(a, herm_tol);
    Eigen::VectorXcd phase(e.evals.size());
    for (Eigen::Index i = 0; i < e.evals.size(); ++i) {
        phase(i) = std::exp(cplx(0.0, tau * e.evals(i)));
    }
    return e.evecs * phase.asDiagonal() * e.evecs.adjoint();
}

} // namespace speclab
