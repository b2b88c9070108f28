#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gframe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Library-wide default threshold for rank, invertibility and equality tests.
inline constexpr double kDefaultTolerance = 1e-9;

// Dense helpers shared by every module. All of them operate on small
// matrices and favour accuracy (Jacobi SVD, self-adjoint eigensolver).

/// (A + A^*) / 2.
Matrix hermitian_part(const Matrix& a);

/// Eigenvalues of the Hermitian part of `a`, ascending.
RealVector hermitian_eigenvalues(const Matrix& a);

/// Singular values, descending.
RealVector singular_values(const Matrix& a);

double spectral_norm(const Matrix& a);
double frobenius_norm(const Matrix& a);

/// Smallest singular value of a square or wide/tall matrix
/// (min(rows, cols) singular values considered).
double min_singular_value(const Matrix& a);

/// Orthonormal basis (as columns) of ker(a), using `tolerance` relative to
/// max(1, sigma_max).
Matrix null_space_basis(const Matrix& a, double tolerance);

/// Orthonormal basis (as columns) of the range of `a`.
Matrix range_basis(const Matrix& a, double tolerance);

/// Inverse of a Hermitian positive definite matrix via its eigen
/// decomposition. The result is symmetrized.
Matrix hermitian_inverse(const Matrix& a);

/// Identity of size n.
inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

/// True when every entry is finite.
bool all_finite(const Matrix& a);

}  // namespace gframe
