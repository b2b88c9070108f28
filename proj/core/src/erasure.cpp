#include "gframe/erasure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "gframe/duals.hpp"
#include "gframe/errors.hpp"
#include "gframe/random.hpp"

namespace gframe {

ErasureMask::ErasureMask(std::size_t packets, std::vector<std::size_t> erased)
    : packets_(packets), erased_(std::move(erased)) {
  std::sort(erased_.begin(), erased_.end());
  if (std::adjacent_find(erased_.begin(), erased_.end()) != erased_.end()) {
    throw StructuralError("erasure mask: duplicate index");
  }
  if (!erased_.empty() && erased_.back() >= packets_) {
    throw StructuralError("erasure mask: index " + std::to_string(erased_.back()) + " out of range for " +
                          std::to_string(packets_) + " packets");
  }
}

bool ErasureMask::is_erased(std::size_t i) const { return std::binary_search(erased_.begin(), erased_.end(), i); }

Vector blind_reconstruct(const ReconstructionSystem& v, const ReconstructionSystem& w,
                         std::span<const Vector> coeffs, const ErasureMask& mask) {
  require_same_signature(v, w, "blind_reconstruct");
  if (mask.packets() != v.size()) throw StructuralError("blind_reconstruct: mask size does not match system");
  if (coeffs.size() != v.size()) throw StructuralError("blind_reconstruct: packet count mismatch");
  Vector x = Vector::Zero(v.dim());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].size() != v.signature().block_dim(i)) {
      throw StructuralError("blind_reconstruct: packet " + std::to_string(i) + " has wrong length");
    }
    if (!mask.is_erased(i)) x.noalias() += w.block(i).adjoint() * coeffs[i];
  }
  return x;
}

ErrorReport error_report(const ReconstructionSystem& v, const ReconstructionSystem& w) {
  require_same_signature(v, w, "error_report");
  ErrorReport r;
  r.per_index.reserve(v.size());
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double e = frobenius_norm(w.block(j).adjoint() * v.block(j));
    r.per_index.push_back(e);
    sum_sq += e * e;
    r.worst_case = std::max(r.worst_case, e);
  }
  r.two_error = std::sqrt(sum_sq);
  return r;
}

namespace {

std::vector<double> require_projective_weights(const ReconstructionSystem& v, double tolerance,
                                               const char* context) {
  const SystemClassification c = classify(v, tolerance);
  if (!c.is_projective) throw PreconditionError(std::string(context) + ": system is not projective");
  if (!c.is_rs) throw NotAnRsError(std::string(context) + ": frame operator is not invertible");
  return *c.weights;
}

}  // namespace

Matrix weighted_projection_sum(const ReconstructionSystem& v, double tolerance) {
  const auto weights = require_projective_weights(v, tolerance, "weighted_projection_sum");
  Matrix s = Matrix::Zero(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    s.noalias() += (1.0 / (weights[i] * weights[i])) * (v.block(i).adjoint() * v.block(i));
  }
  return hermitian_part(s);
}

ReconstructionSystem optimal_dual_two_error(const ReconstructionSystem& v, double tolerance) {
  const auto weights = require_projective_weights(v, tolerance, "optimal_dual_two_error");
  // S_{V,D} >= min(v_i^{-2}) S_V > 0 for any projective RS.
  const Matrix s_d_inv = hermitian_inverse(weighted_projection_sum(v, tolerance));
  std::vector<Matrix> blocks;
  blocks.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    blocks.emplace_back((1.0 / (weights[i] * weights[i])) * v.block(i) * s_d_inv);
  }
  return ReconstructionSystem(v.signature(), std::move(blocks));
}

std::optional<double> wce_condition(const ReconstructionSystem& v, double tolerance) {
  require_projective_weights(v, tolerance, "wce_condition");
  const Matrix s_inv = hermitian_inverse(frame_operator(v));
  std::vector<double> norms;
  norms.reserve(v.size());
  for (const auto& b : v.blocks()) norms.push_back(frobenius_norm(s_inv * b.adjoint() * b));
  const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
  if (*hi - *lo > tolerance * std::max(1.0, *hi)) return std::nullopt;
  return *hi;
}

WceResult wce_minimize(const ReconstructionSystem& v, const WceOptions& options) {
  const double tol = options.tolerance;
  const SystemClassification c = classify(v, tol);
  if (!c.is_injective) throw PreconditionError("wce_minimize: system is not injective");
  if (!c.is_rs) throw NotAnRsError("wce_minimize: frame operator is not invertible");

  const Signature& sig = v.signature();
  const std::size_t m = v.size();
  const Matrix projector = range_complement_projector(v, tol);
  const Matrix start = canonical_dual(v, tol).synthesis_matrix();

  // grad of ||G_i V_i||_2 with respect to G_i is G_i V_i V_i^* / ||G_i V_i||_2.
  std::vector<Matrix> right;
  right.reserve(m);
  for (const auto& b : v.blocks()) right.emplace_back(b * b.adjoint());

  auto objective = [&](const Matrix& g, std::vector<double>& values) {
    values.resize(m);
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      values[i] = frobenius_norm(g.middleCols(sig.offset(i), sig.block_dim(i)) * v.block(i));
      worst = std::max(worst, values[i]);
    }
    return worst;
  };

  std::vector<double> values;
  Matrix g = start;
  Matrix best = start;
  double best_value = objective(g, values);
  int best_iteration = 0;

  const double step0 = 0.25 * frobenius_norm(start) / std::sqrt(static_cast<double>(m));
  Rng rng(options.seed);
  std::exponential_distribution<double> mix(1.0);

  if (frobenius_norm(projector) > tol) {
    for (int t = 1; t <= options.iterations; ++t) {
      const double worst = objective(g, values);
      Matrix direction = Matrix::Zero(g.rows(), g.cols());
      double total_weight = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (values[i] < worst * (1.0 - 1e-9) || values[i] == 0.0) continue;
        const double weight = mix(rng);
        total_weight += weight;
        direction.middleCols(sig.offset(i), sig.block_dim(i)) +=
            (weight / values[i]) * g.middleCols(sig.offset(i), sig.block_dim(i)) * right[i];
      }
      if (total_weight == 0.0) break;
      direction = (direction / total_weight) * projector;
      const double norm = frobenius_norm(direction);
      // Zero projected subgradient: 0 lies in the subdifferential, so g is optimal.
      if (norm <= 1e-14 * std::max(1.0, frobenius_norm(g))) break;

      g -= (step0 / std::sqrt(static_cast<double>(t))) * (direction / norm);
      const double value = objective(g, values);
      if (value < best_value) {
        best_value = value;
        best = g;
        best_iteration = t;
      }
    }
  }

  // Re-anchor on the affine dual manifold to remove accumulated rounding.
  best = start + (best - start) * projector;
  auto system = ReconstructionSystem::from_synthesis(sig, best);
  const double worst = error_report(v, system).worst_case;
  return WceResult{std::move(system), worst, best_iteration};
}

}  // namespace gframe
