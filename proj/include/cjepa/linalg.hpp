#pragma once

#include <Eigen/Dense>

#include "cjepa/errors.hpp"

namespace cjepa::linalg {

/// Result of a symmetric eigendecomposition. Columns of `basis` are
/// orthonormal eigenvectors; `eigenvalues` is sorted descending and
/// basis * eigenvalues.asDiagonal() * basis^T reconstructs the input.
struct EigenDecomposition {
  Eigen::MatrixXd basis;
  Eigen::VectorXd eigenvalues;
};

/// Eigendecomposition of a symmetric matrix by the cyclic Jacobi rotation
/// method. Sweeps until the off-diagonal Frobenius norm drops below
/// 1e-12 * max(1, ||a||_F), at most 100 sweeps. Eigenvector sign convention:
/// the largest-magnitude component of each column is positive.
///
/// `tol` bounds the accepted asymmetry max|a_ij - a_ji|; the symmetrized
/// average (a + a^T)/2 is decomposed.
EigenDecomposition symmetric_eigendecompose(const Eigen::MatrixXd& a,
                                            double tol = 1e-9);

/// Sample covariance C = (1/(n-1)) * sum_i (z_i - mean)(z_i - mean)^T of an
/// n x d batch with rows as samples. Requires n >= 2.
Eigen::MatrixXd batch_covariance(const Eigen::MatrixXd& z);

/// Per-dimension sample variances (1/(n-1) normalization); equals the
/// diagonal of batch_covariance exactly.
Eigen::VectorXd batch_variance(const Eigen::MatrixXd& z);

/// Effective rank of the centered batch: exp of the Shannon entropy of the
/// normalized singular-value spectrum. Lies in [1, min(n-1, d)]; a constant
/// batch reports 1.
double effective_rank(const Eigen::MatrixXd& z);

/// Throws NonFiniteError if any entry is NaN or infinite.
void require_finite(const Eigen::Ref<const Eigen::MatrixXd>& m,
                    const char* what);

}  // namespace cjepa::linalg
