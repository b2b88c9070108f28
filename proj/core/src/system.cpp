#include "gframe/system.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gframe/errors.hpp"

namespace gframe {

Signature::Signature(std::vector<Eigen::Index> block_dims, Eigen::Index dim)
    : k_(std::move(block_dims)), d_(dim) {
  if (k_.empty()) throw StructuralError("signature: a system needs at least one block");
  if (d_ < 1) throw StructuralError("signature: ambient dimension must be positive");
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (k_[i] < 1) {
      throw StructuralError("signature: block " + std::to_string(i) + " has non-positive dimension");
    }
  }
}

Eigen::Index Signature::total() const { return std::accumulate(k_.begin(), k_.end(), Eigen::Index{0}); }

Eigen::Index Signature::offset(std::size_t i) const {
  return std::accumulate(k_.begin(), k_.begin() + static_cast<std::ptrdiff_t>(i), Eigen::Index{0});
}

namespace {

Signature infer_signature(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw StructuralError("reconstruction system: no blocks");
  std::vector<Eigen::Index> k;
  k.reserve(blocks.size());
  for (const auto& b : blocks) k.push_back(b.rows());
  return Signature(std::move(k), blocks.front().cols());
}

}  // namespace

ReconstructionSystem::ReconstructionSystem(std::vector<Matrix> blocks)
    : signature_(infer_signature(blocks)), blocks_(std::move(blocks)) {
  validate();
}

ReconstructionSystem::ReconstructionSystem(const Signature& signature, std::vector<Matrix> blocks)
    : signature_(signature), blocks_(std::move(blocks)) {
  validate();
}

void ReconstructionSystem::validate() const {
  if (blocks_.size() != signature_.blocks()) {
    throw StructuralError("reconstruction system: expected " + std::to_string(signature_.blocks()) +
                          " blocks, got " + std::to_string(blocks_.size()));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Matrix& b = blocks_[i];
    if (b.rows() != signature_.block_dim(i) || b.cols() != signature_.dim()) {
      throw StructuralError("reconstruction system: block " + std::to_string(i) + " has shape " +
                            std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ", expected " +
                            std::to_string(signature_.block_dim(i)) + "x" +
                            std::to_string(signature_.dim()));
    }
    if (!all_finite(b)) {
      throw StructuralError("reconstruction system: block " + std::to_string(i) + " has non-finite entries");
    }
  }
}

ReconstructionSystem ReconstructionSystem::from_analysis(const Signature& signature, const Matrix& analysis) {
  if (analysis.rows() != signature.total() || analysis.cols() != signature.dim()) {
    throw StructuralError("from_analysis: matrix shape does not match signature");
  }
  std::vector<Matrix> blocks;
  blocks.reserve(signature.blocks());
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < signature.blocks(); ++i) {
    blocks.emplace_back(analysis.middleRows(row, signature.block_dim(i)));
    row += signature.block_dim(i);
  }
  return ReconstructionSystem(signature, std::move(blocks));
}

ReconstructionSystem ReconstructionSystem::from_synthesis(const Signature& signature, const Matrix& synthesis) {
  return from_analysis(signature, synthesis.adjoint());
}

Matrix ReconstructionSystem::analysis_matrix() const {
  Matrix t(signature_.total(), signature_.dim());
  Eigen::Index row = 0;
  for (const auto& b : blocks_) {
    t.middleRows(row, b.rows()) = b;
    row += b.rows();
  }
  return t;
}

ReconstructionSystem ReconstructionSystem::right_multiplied(const Matrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) {
    throw StructuralError("right_multiplied: operator must be d x d");
  }
  std::vector<Matrix> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.emplace_back(b * m);
  return ReconstructionSystem(signature_, std::move(out));
}

Matrix frame_operator(const ReconstructionSystem& v) {
  Matrix s = Matrix::Zero(v.dim(), v.dim());
  for (const auto& b : v.blocks()) s.noalias() += b.adjoint() * b;
  return hermitian_part(s);
}

std::vector<Vector> analysis_apply(const ReconstructionSystem& v, const Vector& x) {
  if (x.size() != v.dim()) {
    throw StructuralError("analysis_apply: vector has length " + std::to_string(x.size()) + ", expected " +
                          std::to_string(v.dim()));
  }
  std::vector<Vector> out;
  out.reserve(v.size());
  for (const auto& b : v.blocks()) out.emplace_back(b * x);
  return out;
}

Vector synthesis_apply(const ReconstructionSystem& v, std::span<const Vector> y) {
  if (y.size() != v.size()) {
    throw StructuralError("synthesis_apply: expected " + std::to_string(v.size()) + " packets, got " +
                          std::to_string(y.size()));
  }
  Vector x = Vector::Zero(v.dim());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].size() != v.signature().block_dim(i)) {
      throw StructuralError("synthesis_apply: packet " + std::to_string(i) + " has wrong length");
    }
    x.noalias() += v.block(i).adjoint() * y[i];
  }
  return x;
}

Vector concatenate(const Signature& signature, std::span<const Vector> packets) {
  if (packets.size() != signature.blocks()) throw StructuralError("concatenate: packet count mismatch");
  Vector out(signature.total());
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < packets.size(); ++i) {
    if (packets[i].size() != signature.block_dim(i)) {
      throw StructuralError("concatenate: packet " + std::to_string(i) + " has wrong length");
    }
    out.segment(row, packets[i].size()) = packets[i];
    row += packets[i].size();
  }
  return out;
}

std::vector<double> block_norms(const ReconstructionSystem& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& b : v.blocks()) out.push_back(spectral_norm(b));
  return out;
}

bool is_weighted_coisometry(const Matrix& block, double tolerance) {
  const double w = spectral_norm(block);
  if (!(w > 0.0)) return false;
  const Matrix gram = block * block.adjoint();
  const double residual = frobenius_norm(gram - (w * w) * identity(block.rows()));
  return residual <= tolerance * std::max(1.0, w * w);
}

SystemClassification classify(const ReconstructionSystem& v, double tolerance) {
  SystemClassification c;
  c.tolerance = tolerance;

  const Matrix s = frame_operator(v);
  const RealVector eig = hermitian_eigenvalues(s);
  c.lower_bound = eig(0);
  c.upper_bound = eig(eig.size() - 1);
  c.is_rs = c.lower_bound > tolerance * std::max(1.0, c.upper_bound);

  c.is_injective = std::all_of(v.blocks().begin(), v.blocks().end(), [&](const Matrix& b) {
    const Matrix gram = b * b.adjoint();
    const double top = spectral_norm(gram);
    return top > 0.0 && min_singular_value(gram) > tolerance * std::max(1.0, top);
  });

  c.is_projective = std::all_of(v.blocks().begin(), v.blocks().end(),
                                [&](const Matrix& b) { return is_weighted_coisometry(b, tolerance); });
  if (c.is_projective) {
    c.weights = block_norms(v);
    const auto [lo, hi] = std::minmax_element(c.weights->begin(), c.weights->end());
    c.is_uniform = (*hi - *lo) <= tolerance * std::max(1.0, *hi);
  }

  c.is_protocol = frobenius_norm(s - identity(v.dim())) <= tolerance;
  c.is_riesz = v.signature().total() == v.dim();
  return c;
}

bool is_rs(const ReconstructionSystem& v, double tolerance) {
  const RealVector eig = hermitian_eigenvalues(frame_operator(v));
  return eig(0) > tolerance * std::max(1.0, eig(eig.size() - 1));
}

void require_rs(const ReconstructionSystem& v, double tolerance, const char* context) {
  if (!is_rs(v, tolerance)) {
    throw NotAnRsError(std::string(context) + ": frame operator is not invertible (not a reconstruction system)");
  }
}

void require_same_signature(const ReconstructionSystem& a, const ReconstructionSystem& b, const char* context) {
  if (!(a.signature() == b.signature())) {
    throw StructuralError(std::string(context) + ": systems have different signatures");
  }
}

double max_block_distance(const ReconstructionSystem& a, const ReconstructionSystem& b) {
  require_same_signature(a, b, "max_block_distance");
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, frobenius_norm(a.block(i) - b.block(i)));
  return out;
}

}  // namespace gframe
