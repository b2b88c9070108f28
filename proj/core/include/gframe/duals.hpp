#pragma once

#include <cstdint>
#include <vector>

#include "gframe/system.hpp"

namespace gframe {

/// A system W checked against a reference V for the dual identity
/// T_W^* T_V = I.
struct DualCandidate {
  ReconstructionSystem system;
  ReconstructionSystem reference;
  /// ||sum W_i^* V_i - I||_2 (Frobenius).
  double dual_residual = 0.0;
  double tolerance = kDefaultTolerance;

  bool is_dual() const { return dual_residual <= tolerance; }
};

/// V^# = {V_i S_V^{-1}}. Throws NotAnRsError when S_V is singular.
ReconstructionSystem canonical_dual(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

DualCandidate verify_dual(const ReconstructionSystem& w, const ReconstructionSystem& v,
                          double tolerance = kDefaultTolerance);

/// I_K - T_V S_V^{-1} T_V^*: the orthogonal projector onto ker T_V^*.
/// Left inverses of T_V are exactly T_{V^#}^* + Z * (this projector).
Matrix range_complement_projector(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// The dual whose synthesis operator is T_{V^#}^* + Z (I - T_V S_V^{-1} T_V^*)
/// for a d x (sum k_i) parameter Z.
ReconstructionSystem dual_from_parameter(const ReconstructionSystem& v, const Matrix& z,
                                         double tolerance = kDefaultTolerance);

struct DualSampleOptions {
  /// Standard deviation scale of the complex Gaussian parameter Z.
  double scale = 1.0;
  double tolerance = kDefaultTolerance;
  /// Redraws allowed per sample when a draw is not itself an RS.
  int max_redraws = 100;
};

/// Pseudo-random elements of D(V), deterministic in `seed`.
std::vector<ReconstructionSystem> dual_manifold_sample(const ReconstructionSystem& v, std::uint64_t seed,
                                                       std::size_t count, const DualSampleOptions& options = {});

}  // namespace gframe
