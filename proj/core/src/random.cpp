#include "gframe/random.hpp"

#include <cmath>

#include <Eigen/QR>

#include "gframe/errors.hpp"

namespace gframe {

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale / std::sqrt(2.0));
  Matrix out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

Matrix random_unitary(Eigen::Index n, Rng& rng) {
  const Matrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * identity(n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Matrix random_coisometry(Eigen::Index k, Eigen::Index d, Rng& rng) {
  if (k > d || k < 1) throw StructuralError("random_coisometry: need 1 <= k <= d");
  return random_unitary(d, rng).topRows(k);
}

}  // namespace gframe
