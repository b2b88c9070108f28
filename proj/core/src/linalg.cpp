#include "gframe/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gframe {

Matrix hermitian_part(const Matrix& a) { return (a + a.adjoint()) * 0.5; }

RealVector hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

RealVector singular_values(const Matrix& a) {
  if (a.size() == 0) return RealVector();
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

double min_singular_value(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const RealVector s = singular_values(a);
  return s(s.size() - 1);
}

Matrix null_space_basis(const Matrix& a, double tolerance) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return identity(n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const double threshold = tolerance * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

Matrix range_basis(const Matrix& a, double tolerance) {
  if (a.size() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const RealVector& s = svd.singularValues();
  const double threshold = tolerance * std::max(1.0, s(0));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

Matrix hermitian_inverse(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a));
  const RealVector inv = solver.eigenvalues().cwiseInverse();
  const Matrix& q = solver.eigenvectors();
  return hermitian_part(q * inv.asDiagonal() * q.adjoint());
}

bool all_finite(const Matrix& a) {
  return std::all_of(a.data(), a.data() + a.size(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

}  // namespace gframe
