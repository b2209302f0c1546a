#pragma once

#include <Eigen/Dense>

#include "linop.hpp"

namespace speclab {

// Sizes above this refuse dense materialization / factorization.
inline constexpr std::size_t dense_cap = 4096;

// Matrix of the operator in the sample basis. Quadrature weights are
// uniform, so singular values and Hermitian eigenvalues of this matrix
// are exactly the operator's L2 ones.
Eigen::MatrixXcd to_dense(const LinOp& op);

struct HermEig {
    Eigen::VectorXd evals;  // ascending
    Eigen::MatrixXcd evecs; // columns
};

// Hermitian eigendecomposition; rejects operators whose dense form drifts
// from self-adjointness by more than herm_tol (relative to its norm).
HermEig dense_eig(const LinOp& op, double herm_tol = 1e-8);
HermEig dense_eig(const Eigen::MatrixXcd& m, double herm_tol = 1e-8);

// Largest singular value of the dense form.
double opnorm_dense(const LinOp& op);

// exp(i tau A) for Hermitian A via eigendecomposition (small-N oracle).
Eigen::MatrixXcd dense_unitary_exp(const LinOp& a, double tau, double herm_tol = 1e-8);

} // namespace speclab
