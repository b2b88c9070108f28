#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gframe/system.hpp"

namespace gframe {

/// A finite group given by its multiplication table together with a unitary
/// matrix for each element. Elements are numbered 0..order-1.
class UnitaryRepresentation {
 public:
  /// `table[g][h]` is the index of the product g*h. Throws PreconditionError
  /// when a matrix is not unitary, the table is not respected, or there is no
  /// identity element (all within `tolerance`, Frobenius).
  UnitaryRepresentation(std::vector<Matrix> unitaries, std::vector<std::vector<std::size_t>> table,
                        double tolerance = 1e-10);

  std::size_t order() const { return unitaries_.size(); }
  Eigen::Index dim() const { return unitaries_.front().rows(); }
  const Matrix& unitary(std::size_t g) const { return unitaries_.at(g); }
  const std::vector<Matrix>& unitaries() const { return unitaries_; }
  std::size_t product(std::size_t g, std::size_t h) const { return table_.at(g).at(h); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t identity_element() const { return identity_; }

 private:
  std::vector<Matrix> unitaries_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

/// Z_n acting on C^n by cyclic shift of coordinates.
UnitaryRepresentation cyclic_shift_representation(std::size_t n);

/// Z_n acting on C^d diagonally: U_g = diag(exp(2 pi i g c_j / n)).
UnitaryRepresentation cyclic_character_representation(std::size_t n, const std::vector<int>& charges);

/// G x H acting on the tensor product; element (g, h) has index g * |H| + h.
UnitaryRepresentation direct_product(const UnitaryRepresentation& a, const UnitaryRepresentation& b);

/// g -> Q U_g Q^* for a unitary Q.
UnitaryRepresentation conjugated(const UnitaryRepresentation& rep, const Matrix& q);

/// {V U_g}_{g in G}.
ReconstructionSystem group_rs(const UnitaryRepresentation& rep, const Matrix& base);

struct GroupRsReport {
  /// max_h ||S U_h - U_h S||_2.
  double commutation_residual = 0.0;
  /// max_g ||(canonical dual)_g - V S^{-1} U_g||_2.
  double canonical_dual_residual = 0.0;
  bool base_surjective = false;
  /// tr|V S^{-1}| / k, when the base is surjective.
  std::optional<double> projective_weight;
  /// max_g ||(nearest projective to the canonical dual)_g - w W U_g||_2, with
  /// W the polar coisometry of V S^{-1}; present when the base is surjective.
  std::optional<double> nearest_projective_residual;
};

GroupRsReport group_rs_checks(const UnitaryRepresentation& rep, const Matrix& base,
                              double tolerance = kDefaultTolerance);

/// One block of the common-eigenspace resolution of commuting projections.
struct CommonEigenspace {
  /// Orthonormal basis (columns) of the block; Q_j = basis * basis^*.
  Matrix basis;
  /// Sorted indices i with Q_j <= P_i.
  std::vector<std::size_t> members;
};

/// Resolution of the identity {Q_j} refining pairwise commuting orthogonal
/// projections {P_i}. Throws PreconditionError when they do not commute.
std::vector<CommonEigenspace> common_eigenspace_resolution(const std::vector<Matrix>& projections,
                                                           double tolerance = kDefaultTolerance);

/// Unit-modulus coefficients from {1, -1, w, conj(w)}, w = 1/2 + i sqrt(3)/2,
/// whose conjugates sum to 1. `multiplicity` >= 1.
std::vector<Complex> epsilon_coefficients(std::size_t multiplicity);

/// A projective dual of a projective RS whose range projections
/// P_i = v_i^{-2} V_i^* V_i pairwise commute.
ReconstructionSystem commuting_projective_dual(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// Projective system whose block i reads the coordinates `subsets[i]` of
/// C^d, scaled by `weights[i]`. Its range projections commute.
ReconstructionSystem coordinate_projective_system(const std::vector<std::vector<Eigen::Index>>& subsets,
                                                  Eigen::Index dim, const std::vector<double>& weights);

struct RieszDualReport {
  /// Every V_i restricted to the intersection of the other kernels is a
  /// multiple of an isometry (equivalently D(V) contains a projective system).
  bool has_projective_dual = false;
  std::vector<bool> restriction_is_scaled_isometry;
  /// (sigma_max - sigma_min) of V_i on that intersection.
  std::vector<double> restriction_spread;
  /// Whether the canonical dual itself is projective.
  bool canonical_dual_projective = false;
};

/// Requires a Riesz RS (sum k_i = d).
RieszDualReport riesz_projective_dual_check(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// Worked examples: "c3_pair", "c3_omega_dual", "c4_riesz", "c4_riesz_enlarged", "c4_riesz_projective".
std::map<std::string, ReconstructionSystem> example_fixtures();

}  // namespace gframe
