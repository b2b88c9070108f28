#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gframe/linalg.hpp"

namespace gframe {

/// Shape of a reconstruction system: m blocks of sizes k_i acting on C^d.
class Signature {
 public:
  Signature(std::vector<Eigen::Index> block_dims, Eigen::Index dim);

  std::size_t blocks() const { return k_.size(); }
  Eigen::Index dim() const { return d_; }
  Eigen::Index block_dim(std::size_t i) const { return k_.at(i); }
  const std::vector<Eigen::Index>& block_dims() const { return k_; }

  /// Sum of the block dimensions (dimension of the coefficient space).
  Eigen::Index total() const;

  /// Row offset of block i inside the stacked analysis matrix.
  Eigen::Index offset(std::size_t i) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Eigen::Index> k_;
  Eigen::Index d_;
};

/// An ordered family of linear maps V_i : C^d -> C^{k_i}.
///
/// Construction validates shapes and finiteness only. Whether the family is
/// an actual reconstruction system (invertible frame operator) is a
/// numerical question answered by `classify`.
class ReconstructionSystem {
 public:
  explicit ReconstructionSystem(std::vector<Matrix> blocks);
  ReconstructionSystem(const Signature& signature, std::vector<Matrix> blocks);

  /// Splits a stacked (sum k_i) x d analysis matrix into blocks.
  static ReconstructionSystem from_analysis(const Signature& signature, const Matrix& analysis);

  /// Builds the system whose synthesis operator is `synthesis` (d x sum k_i).
  static ReconstructionSystem from_synthesis(const Signature& signature, const Matrix& synthesis);

  const Signature& signature() const { return signature_; }
  std::size_t size() const { return blocks_.size(); }
  Eigen::Index dim() const { return signature_.dim(); }
  const Matrix& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// T_V: the vertical stack of all blocks.
  Matrix analysis_matrix() const;
  /// T_V^*.
  Matrix synthesis_matrix() const { return analysis_matrix().adjoint(); }

  /// Block i multiplied on the right by `m` (d x d), for every block.
  ReconstructionSystem right_multiplied(const Matrix& m) const;

 private:
  void validate() const;

  Signature signature_;
  std::vector<Matrix> blocks_;
};

/// Flags and spectral data computed by `classify`.
struct SystemClassification {
  bool is_rs = false;
  bool is_injective = false;
  bool is_projective = false;
  std::optional<std::vector<double>> weights;
  bool is_uniform = false;
  bool is_protocol = false;
  bool is_riesz = false;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double tolerance = kDefaultTolerance;
};

/// S_V = sum V_i^* V_i, symmetrized.
Matrix frame_operator(const ReconstructionSystem& v);

/// (V_1 x, ..., V_m x).
std::vector<Vector> analysis_apply(const ReconstructionSystem& v, const Vector& x);

/// sum V_i^* y_i.
Vector synthesis_apply(const ReconstructionSystem& v, std::span<const Vector> y);

/// Concatenates packets into one coefficient vector of length sum k_i.
Vector concatenate(const Signature& signature, std::span<const Vector> packets);

/// Spectral norms ||V_i||_sp, whether or not the system is projective.
std::vector<double> block_norms(const ReconstructionSystem& v);

/// True when V V^* = w^2 I within tolerance * max(1, w^2), w = ||V||_sp.
bool is_weighted_coisometry(const Matrix& block, double tolerance);

SystemClassification classify(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// lambda_min(S_V) > tolerance * max(1, lambda_max(S_V)).
bool is_rs(const ReconstructionSystem& v, double tolerance = kDefaultTolerance);

/// Throws NotAnRsError unless `is_rs(v, tolerance)`.
void require_rs(const ReconstructionSystem& v, double tolerance, const char* context);

/// Throws StructuralError unless both systems share (m, k, d).
void require_same_signature(const ReconstructionSystem& a, const ReconstructionSystem& b,
                            const char* context);

/// Largest blockwise Frobenius distance max_i ||A_i - B_i||_2.
double max_block_distance(const ReconstructionSystem& a, const ReconstructionSystem& b);

}  // namespace gframe
