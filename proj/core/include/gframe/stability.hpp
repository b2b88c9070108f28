#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gframe/system.hpp"

namespace gframe {

/// Outcome of removing a known set J of blocks from a system.
struct TruncationReport {
  std::vector<std::size_t> dropped;
  std::vector<std::size_t> kept;
  /// M_J = I - sum_{i in J} V_i^* V_i S_V^{-1}.
  Matrix m_j;
  double m_j_min_singular_value = 0.0;
  bool is_rs_after = false;
  /// Frame operator of the kept blocks, computed directly.
  Matrix s_truncated;
  /// A_V / ||M_J^{-1}||_sp, present when M_J is invertible.
  std::optional<double> lower_bound_estimate;
  /// (A_{V_J}, B_{V_J}) from the eigenvalues of S_{V_J}, present when is_rs_after.
  std::optional<std::pair<double, double>> bounds_actual;
  /// Bounds of the original system.
  std::pair<double, double> bounds_original;
};

/// Validated, sorted copy of J. Throws StructuralError for out-of-range or
/// duplicate indices and for J covering every block.
std::vector<std::size_t> validate_drop_set(const ReconstructionSystem& v, std::vector<std::size_t> dropped);

/// (V_i)_{i not in J}, which need not be an RS.
ReconstructionSystem drop_blocks(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped);

TruncationReport truncate(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped,
                          double tolerance = kDefaultTolerance);

/// (V_J)^# computed from the truncated frame operator: {V_i S_{V_J}^{-1}}.
/// Throws NotAnRsError when M_J is singular.
ReconstructionSystem truncated_canonical_dual(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped,
                                              double tolerance = kDefaultTolerance);

/// The same system obtained from the full canonical dual: {V^#_i M_J^{-1}}.
ReconstructionSystem truncated_canonical_dual_from_full(const ReconstructionSystem& v,
                                                        const std::vector<std::size_t>& dropped,
                                                        double tolerance = kDefaultTolerance);

struct CkCondition {
  bool holds = false;
  /// A_V - sum_{i in J} ||V_i||_sp^2.
  double estimate = 0.0;
};

/// Sufficient test sum_{i in J} ||V_i||_sp^2 < A_V for the kept blocks to
/// remain an RS.
CkCondition ck_sufficient_condition(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped,
                                    double tolerance = kDefaultTolerance);

}  // namespace gframe
