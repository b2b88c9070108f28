#include "gframe/approx.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "gframe/errors.hpp"

namespace gframe {

PolarFactorization polar_coisometry(const Matrix& block, double tolerance) {
  const Eigen::Index k = block.rows();
  if (k > block.cols()) throw StructuralError("polar_coisometry: block must have at most as many rows as columns");

  Eigen::JacobiSVD<Matrix> svd(block, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();
  if (!(s(k - 1) > tolerance * std::max(1.0, s(0)))) {
    throw PreconditionError("polar_coisometry: block is not of full rank");
  }
  const Matrix& left = svd.matrixU();   // k x k
  const Matrix& right = svd.matrixV();  // d x k
  return PolarFactorization{left * right.adjoint(), hermitian_part(right * s.asDiagonal() * right.adjoint())};
}

NearestProjective nearest_projective(const ReconstructionSystem& s, double tolerance) {
  const SystemClassification c = classify(s, tolerance);
  if (!c.is_injective) throw PreconditionError("nearest_projective: system is not injective");

  std::vector<Matrix> blocks;
  std::vector<double> weights;
  blocks.reserve(s.size());
  weights.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PolarFactorization polar = polar_coisometry(s.block(i), tolerance);
    const double alpha = polar.positive.trace().real() / static_cast<double>(s.block(i).rows());
    weights.push_back(alpha);
    blocks.emplace_back(alpha * polar.coisometry);
  }
  ReconstructionSystem w(s.signature(), std::move(blocks));
  const double distance = system_distance(s, w);
  return NearestProjective{std::move(w), std::move(weights), distance};
}

double system_distance(const ReconstructionSystem& a, const ReconstructionSystem& b) {
  require_same_signature(a, b, "system_distance");
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum_sq += (a.block(i) - b.block(i)).squaredNorm();
  return std::sqrt(sum_sq);
}

}  // namespace gframe
