#pragma once

#include <vector>

#include "gframe/system.hpp"

namespace gframe {

/// block = U * P with U a coisometry (U U^* = I) and P = |block| = (block^* block)^{1/2}.
struct PolarFactorization {
  Matrix coisometry;
  Matrix positive;
};

/// Polar factorization of a full-row-rank k x d block (k <= d). The
/// coisometry factor is the coisometry closest to `block` in Frobenius norm.
/// Throws PreconditionError when the block is rank deficient.
PolarFactorization polar_coisometry(const Matrix& block, double tolerance = kDefaultTolerance);

struct NearestProjective {
  ReconstructionSystem system;
  /// alpha_i = tr|S_i| / k_i.
  std::vector<double> weights;
  /// ||T_S - T_W||_2.
  double distance = 0.0;
};

/// The projective system {alpha_i U_i} closest to an injective system S in
/// the Frobenius distance of analysis operators.
NearestProjective nearest_projective(const ReconstructionSystem& s, double tolerance = kDefaultTolerance);

/// ||T_A - T_B||_2 for systems with the same signature.
double system_distance(const ReconstructionSystem& a, const ReconstructionSystem& b);

}  // namespace gframe
