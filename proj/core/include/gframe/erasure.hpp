#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gframe/system.hpp"

namespace gframe {

/// A set of erased packet indices out of m (0-based).
class ErasureMask {
 public:
  /// Throws StructuralError for out-of-range or duplicate indices.
  ErasureMask(std::size_t packets, std::vector<std::size_t> erased);

  static ErasureMask none(std::size_t packets) { return ErasureMask(packets, {}); }
  static ErasureMask single(std::size_t packets, std::size_t index) { return ErasureMask(packets, {index}); }

  std::size_t packets() const { return packets_; }
  /// Sorted erased indices.
  const std::vector<std::size_t>& erased() const { return erased_; }
  bool is_erased(std::size_t i) const;

 private:
  std::size_t packets_;
  std::vector<std::size_t> erased_;
};

/// Per-packet reconstruction errors ||W_j^* V_j||_2 and their aggregates.
struct ErrorReport {
  std::vector<double> per_index;
  double two_error = 0.0;
  double worst_case = 0.0;
};

/// sum over kept packets of W_i^* coeffs_i (erased packets read as zero).
Vector blind_reconstruct(const ReconstructionSystem& v, const ReconstructionSystem& w,
                         std::span<const Vector> coeffs, const ErasureMask& mask);

ErrorReport error_report(const ReconstructionSystem& v, const ReconstructionSystem& w);

/// The unique dual of a projective system minimizing the 2-norm of the
/// single-erasure error vector: blocks v_i^{-2} V_i S_{V,D}^{-1} with
/// S_{V,D} = sum v_i^{-2} V_i^* V_i.
/// Throws PreconditionError if `v` is not projective, NotAnRsError if not an RS.
ReconstructionSystem optimal_dual_two_error(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// S_{V,D} = sum v_i^{-2} V_i^* V_i for a projective system.
Matrix weighted_projection_sum(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// Common value c of ||S_V^{-1} V_i^* V_i||_2 when all m values agree within
/// tolerance * max(1, c); absent otherwise. When present the canonical dual
/// is the only dual minimizing the worst-case single-erasure error.
std::optional<double> wce_condition(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

struct WceOptions {
  int iterations = 5000;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
};

struct WceResult {
  ReconstructionSystem system;
  double worst_case = 0.0;
  /// Iteration at which the returned system was found (0 = starting point).
  int best_iteration = 0;
};

/// Minimizes max_i ||W_i^* V_i||_2 over D(V) by normalized projected
/// subgradient descent (step ~ 1/sqrt(t)) starting at the canonical dual.
/// Requires an injective RS.
WceResult wce_minimize(const ReconstructionSystem& v, const WceOptions& options = {});

}  // namespace gframe
