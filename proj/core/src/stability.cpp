#include "gframe/stability.hpp"

#include <algorithm>
#include <string>

#include "gframe/duals.hpp"
#include "gframe/errors.hpp"

namespace gframe {

std::vector<std::size_t> validate_drop_set(const ReconstructionSystem& v, std::vector<std::size_t> dropped) {
  std::sort(dropped.begin(), dropped.end());
  if (std::adjacent_find(dropped.begin(), dropped.end()) != dropped.end()) {
    throw StructuralError("truncation: duplicate index");
  }
  if (!dropped.empty() && dropped.back() >= v.size()) {
    throw StructuralError("truncation: index " + std::to_string(dropped.back()) + " out of range");
  }
  if (dropped.size() == v.size()) throw StructuralError("truncation: dropping every block leaves an empty system");
  return dropped;
}

namespace {

std::vector<std::size_t> complement(std::size_t m, const std::vector<std::size_t>& dropped) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::binary_search(dropped.begin(), dropped.end(), i)) kept.push_back(i);
  }
  return kept;
}

Matrix m_j_matrix(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped, const Matrix& s_inv) {
  Matrix lost = Matrix::Zero(v.dim(), v.dim());
  for (std::size_t i : dropped) lost.noalias() += v.block(i).adjoint() * v.block(i);
  return identity(v.dim()) - lost * s_inv;
}

bool invertible(const Matrix& m, double tolerance) {
  return min_singular_value(m) > tolerance * std::max(1.0, spectral_norm(m));
}

}  // namespace

ReconstructionSystem drop_blocks(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped) {
  const auto j = validate_drop_set(v, dropped);
  std::vector<Matrix> blocks;
  for (std::size_t i : complement(v.size(), j)) blocks.push_back(v.block(i));
  return ReconstructionSystem(std::move(blocks));
}

TruncationReport truncate(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped, double tolerance) {
  require_rs(v, tolerance, "truncate");
  TruncationReport r;
  r.dropped = validate_drop_set(v, dropped);
  r.kept = complement(v.size(), r.dropped);

  const Matrix s = frame_operator(v);
  const RealVector eig = hermitian_eigenvalues(s);
  r.bounds_original = {eig(0), eig(eig.size() - 1)};

  r.m_j = m_j_matrix(v, r.dropped, hermitian_inverse(s));
  r.m_j_min_singular_value = min_singular_value(r.m_j);
  r.is_rs_after = invertible(r.m_j, tolerance);

  const ReconstructionSystem kept = drop_blocks(v, r.dropped);
  r.s_truncated = frame_operator(kept);

  if (r.is_rs_after) {
    r.lower_bound_estimate = r.bounds_original.first * r.m_j_min_singular_value;
    const RealVector eig_kept = hermitian_eigenvalues(r.s_truncated);
    r.bounds_actual = std::make_pair(eig_kept(0), eig_kept(eig_kept.size() - 1));
  }
  return r;
}

ReconstructionSystem truncated_canonical_dual(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped,
                                              double tolerance) {
  require_rs(v, tolerance, "truncated_canonical_dual");
  const auto j = validate_drop_set(v, dropped);
  const Matrix m_j = m_j_matrix(v, j, hermitian_inverse(frame_operator(v)));
  if (!invertible(m_j, tolerance)) {
    throw NotAnRsError("truncated_canonical_dual: M_J is singular, the kept blocks are not an RS");
  }
  return canonical_dual(drop_blocks(v, j), tolerance);
}

ReconstructionSystem truncated_canonical_dual_from_full(const ReconstructionSystem& v,
                                                        const std::vector<std::size_t>& dropped, double tolerance) {
  require_rs(v, tolerance, "truncated_canonical_dual_from_full");
  const auto j = validate_drop_set(v, dropped);
  const Matrix s_inv = hermitian_inverse(frame_operator(v));
  const Matrix m_j = m_j_matrix(v, j, s_inv);
  if (!invertible(m_j, tolerance)) {
    throw NotAnRsError("truncated_canonical_dual_from_full: M_J is singular, the kept blocks are not an RS");
  }
  const Matrix m_j_inv = m_j.partialPivLu().inverse();
  std::vector<Matrix> blocks;
  for (std::size_t i : complement(v.size(), j)) blocks.emplace_back(v.block(i) * s_inv * m_j_inv);
  return ReconstructionSystem(std::move(blocks));
}

CkCondition ck_sufficient_condition(const ReconstructionSystem& v, const std::vector<std::size_t>& dropped,
                                    double tolerance) {
  require_rs(v, tolerance, "ck_sufficient_condition");
  const auto j = validate_drop_set(v, dropped);
  const double lower = hermitian_eigenvalues(frame_operator(v))(0);
  double lost = 0.0;
  for (std::size_t i : j) {
    const double n = spectral_norm(v.block(i));
    lost += n * n;
  }
  return CkCondition{lost < lower, lower - lost};
}

}  // namespace gframe
