#include "gframe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "gframe/approx.hpp"
#include "gframe/duals.hpp"
#include "gframe/errors.hpp"

namespace gframe {

namespace {

const Complex kOmega(0.5, std::numbers::sqrt3 / 2.0);

}  // namespace

UnitaryRepresentation::UnitaryRepresentation(std::vector<Matrix> unitaries,
                                             std::vector<std::vector<std::size_t>> table, double tolerance)
    : unitaries_(std::move(unitaries)), table_(std::move(table)) {
  const std::size_t n = unitaries_.size();
  if (n == 0) throw StructuralError("representation: empty group");
  if (table_.size() != n) throw StructuralError("representation: table has wrong number of rows");
  const Eigen::Index d = unitaries_.front().rows();
  for (std::size_t g = 0; g < n; ++g) {
    const Matrix& u = unitaries_[g];
    if (u.rows() != d || u.cols() != d) throw StructuralError("representation: matrices must be d x d");
    if (table_[g].size() != n) throw StructuralError("representation: table has a row of wrong length");
    if (frobenius_norm(u * u.adjoint() - identity(d)) > tolerance) {
      throw PreconditionError("representation: element " + std::to_string(g) + " is not unitary");
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = table_[g][h];
      if (gh >= n) throw StructuralError("representation: table entry out of range");
      if (frobenius_norm(unitaries_[g] * unitaries_[h] - unitaries_[gh]) > tolerance) {
        throw PreconditionError("representation: U_g U_h != U_gh for g=" + std::to_string(g) +
                                ", h=" + std::to_string(h));
      }
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool neutral = frobenius_norm(unitaries_[e] - identity(d)) <= tolerance;
    for (std::size_t g = 0; g < n && neutral; ++g) neutral = table_[e][g] == g && table_[g][e] == g;
    if (neutral) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw PreconditionError("representation: no identity element");
}

UnitaryRepresentation cyclic_shift_representation(std::size_t n) {
  if (n == 0) throw StructuralError("cyclic_shift_representation: n must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  std::vector<Matrix> unitaries;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g) {
    Matrix u = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < n; ++j) u(static_cast<Eigen::Index>((j + g) % n), static_cast<Eigen::Index>(j)) = 1.0;
    unitaries.push_back(std::move(u));
    for (std::size_t h = 0; h < n; ++h) table[g][h] = (g + h) % n;
  }
  return UnitaryRepresentation(std::move(unitaries), std::move(table));
}

UnitaryRepresentation cyclic_character_representation(std::size_t n, const std::vector<int>& charges) {
  if (n == 0 || charges.empty()) throw StructuralError("cyclic_character_representation: empty input");
  const auto dim = static_cast<Eigen::Index>(charges.size());
  std::vector<Matrix> unitaries;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g) {
    Matrix u = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const long long phase = (static_cast<long long>(g) * charges[static_cast<std::size_t>(j)]) %
                              static_cast<long long>(n);
      u(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n));
    }
    unitaries.push_back(std::move(u));
    for (std::size_t h = 0; h < n; ++h) table[g][h] = (g + h) % n;
  }
  return UnitaryRepresentation(std::move(unitaries), std::move(table));
}

UnitaryRepresentation direct_product(const UnitaryRepresentation& a, const UnitaryRepresentation& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const Eigen::Index da = a.dim();
  const Eigen::Index db = b.dim();
  std::vector<Matrix> unitaries;
  std::vector<std::vector<std::size_t>> table(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t h = 0; h < nb; ++h) {
      Matrix u(da * db, da * db);
      for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) u.block(i * db, j * db, db, db) = a.unitary(g)(i, j) * b.unitary(h);
      }
      unitaries.push_back(std::move(u));
      for (std::size_t g2 = 0; g2 < na; ++g2) {
        for (std::size_t h2 = 0; h2 < nb; ++h2) table[g * nb + h][g2 * nb + h2] = a.product(g, g2) * nb + b.product(h, h2);
      }
    }
  }
  return UnitaryRepresentation(std::move(unitaries), std::move(table));
}

UnitaryRepresentation conjugated(const UnitaryRepresentation& rep, const Matrix& q) {
  std::vector<Matrix> unitaries;
  unitaries.reserve(rep.order());
  for (const auto& u : rep.unitaries()) unitaries.emplace_back(q * u * q.adjoint());
  return UnitaryRepresentation(std::move(unitaries), rep.table());
}

ReconstructionSystem group_rs(const UnitaryRepresentation& rep, const Matrix& base) {
  if (base.cols() != rep.dim()) throw StructuralError("group_rs: base must have d columns");
  std::vector<Matrix> blocks;
  blocks.reserve(rep.order());
  for (const auto& u : rep.unitaries()) blocks.emplace_back(base * u);
  return ReconstructionSystem(std::move(blocks));
}

GroupRsReport group_rs_checks(const UnitaryRepresentation& rep, const Matrix& base, double tolerance) {
  const ReconstructionSystem v = group_rs(rep, base);
  require_rs(v, tolerance, "group_rs_checks");
  GroupRsReport r;

  const Matrix s = frame_operator(v);
  for (const auto& u : rep.unitaries()) {
    r.commutation_residual = std::max(r.commutation_residual, frobenius_norm(s * u - u * s));
  }

  const Matrix base_dual = base * hermitian_inverse(s);
  const ReconstructionSystem dual = canonical_dual(v, tolerance);
  r.canonical_dual_residual = max_block_distance(dual, group_rs(rep, base_dual));

  const double top = spectral_norm(base);
  r.base_surjective = base.rows() <= base.cols() && top > 0.0 &&
                      min_singular_value(base) > tolerance * std::max(1.0, top);
  if (r.base_surjective) {
    const PolarFactorization polar = polar_coisometry(base_dual, tolerance);
    const double w = polar.positive.trace().real() / static_cast<double>(base.rows());
    r.projective_weight = w;
    const NearestProjective nearest = nearest_projective(dual, tolerance);
    r.nearest_projective_residual = max_block_distance(nearest.system, group_rs(rep, w * polar.coisometry));
  }
  return r;
}

std::vector<CommonEigenspace> common_eigenspace_resolution(const std::vector<Matrix>& projections, double tolerance) {
  if (projections.empty()) throw StructuralError("common_eigenspace_resolution: no projections");
  if (projections.size() > 30) {
    throw PreconditionError("common_eigenspace_resolution: at most 30 projections are supported");
  }
  const Eigen::Index d = projections.front().rows();
  for (std::size_t i = 0; i < projections.size(); ++i) {
    if (projections[i].rows() != d || projections[i].cols() != d) {
      throw StructuralError("common_eigenspace_resolution: projections must be d x d");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Matrix c = projections[i] * projections[j] - projections[j] * projections[i];
      if (frobenius_norm(c) > tolerance) {
        throw PreconditionError("common_eigenspace_resolution: projections " + std::to_string(j) + " and " +
                                std::to_string(i) + " do not commute");
      }
    }
  }

  // Membership patterns b in {0,1}^m map to distinct eigenvalues sum 3^i b_i.
  Matrix weighted = Matrix::Zero(d, d);
  double power = 1.0;
  for (const auto& p : projections) {
    weighted += power * p;
    power *= 3.0;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(weighted));
  const Matrix& q = solver.eigenvectors();

  std::map<std::vector<std::size_t>, std::vector<Eigen::Index>> groups;
  for (Eigen::Index c = 0; c < d; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < projections.size(); ++i) {
      const double inside = (q.col(c).adjoint() * projections[i] * q.col(c))(0, 0).real();
      if (std::abs(inside - std::round(inside)) > 1e-6) {
        throw PreconditionError("common_eigenspace_resolution: inputs are not orthogonal projections");
      }
      if (inside > 0.5) members.push_back(i);
    }
    groups[members].push_back(c);
  }

  std::vector<CommonEigenspace> out;
  out.reserve(groups.size());
  for (auto& [members, cols] : groups) {
    Matrix basis(d, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) basis.col(static_cast<Eigen::Index>(j)) = q.col(cols[j]);
    out.push_back(CommonEigenspace{std::move(basis), members});
  }
  return out;
}

std::vector<Complex> epsilon_coefficients(std::size_t multiplicity) {
  if (multiplicity == 0) throw StructuralError("epsilon_coefficients: multiplicity must be positive");
  std::vector<Complex> eps;
  eps.reserve(multiplicity);
  const std::size_t pairs = multiplicity % 2 == 1 ? (multiplicity - 1) / 2 : (multiplicity - 2) / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    eps.emplace_back(1.0);
    eps.emplace_back(-1.0);
  }
  if (multiplicity % 2 == 1) {
    eps.emplace_back(1.0);
  } else {
    eps.push_back(kOmega);
    eps.push_back(std::conj(kOmega));
  }
  return eps;
}

ReconstructionSystem commuting_projective_dual(const ReconstructionSystem& v, double tolerance) {
  const SystemClassification c = classify(v, tolerance);
  if (!c.is_projective) throw PreconditionError("commuting_projective_dual: system is not projective");
  if (!c.is_rs) throw NotAnRsError("commuting_projective_dual: frame operator is not invertible");
  const std::vector<double>& weights = *c.weights;

  std::vector<Matrix> projections;
  projections.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    projections.push_back(hermitian_part(v.block(i).adjoint() * v.block(i)) / (weights[i] * weights[i]));
  }
  const auto resolution = common_eigenspace_resolution(projections, tolerance);

  std::vector<Matrix> unitary_parts(v.size(), Matrix::Zero(v.dim(), v.dim()));
  for (const auto& space : resolution) {
    if (space.members.empty()) throw NotAnRsError("commuting_projective_dual: ranges do not span the space");
    const auto eps = epsilon_coefficients(space.members.size());
    const Matrix q = space.basis * space.basis.adjoint();
    for (std::size_t n = 0; n < space.members.size(); ++n) unitary_parts[space.members[n]] += eps[n] * q;
  }

  std::vector<Matrix> blocks;
  blocks.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    blocks.emplace_back(v.block(i) * unitary_parts[i] / (weights[i] * weights[i]));
  }
  return ReconstructionSystem(v.signature(), std::move(blocks));
}

ReconstructionSystem coordinate_projective_system(const std::vector<std::vector<Eigen::Index>>& subsets,
                                                  Eigen::Index dim, const std::vector<double>& weights) {
  if (subsets.size() != weights.size()) throw StructuralError("coordinate_projective_system: size mismatch");
  std::vector<Matrix> blocks;
  blocks.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Matrix b = Matrix::Zero(static_cast<Eigen::Index>(subsets[i].size()), dim);
    for (std::size_t r = 0; r < subsets[i].size(); ++r) {
      const Eigen::Index col = subsets[i][r];
      if (col < 0 || col >= dim) throw StructuralError("coordinate_projective_system: coordinate out of range");
      b(static_cast<Eigen::Index>(r), col) = weights[i];
    }
    blocks.push_back(std::move(b));
  }
  return ReconstructionSystem(std::move(blocks));
}

RieszDualReport riesz_projective_dual_check(const ReconstructionSystem& v, double tolerance) {
  if (v.signature().total() != v.dim()) throw PreconditionError("riesz_projective_dual_check: not a Riesz system");
  require_rs(v, tolerance, "riesz_projective_dual_check");

  RieszDualReport r;
  r.has_projective_dual = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Matrix> others;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j != i) others.push_back(v.block(j));
    }
    Matrix basis;
    if (others.empty()) {
      basis = identity(v.dim());
    } else {
      basis = null_space_basis(ReconstructionSystem(std::move(others)).analysis_matrix(), tolerance);
    }
    if (basis.cols() != v.block(i).rows()) {
      throw PreconditionError("riesz_projective_dual_check: kernel intersection has unexpected dimension");
    }
    const RealVector s = singular_values(v.block(i) * basis);
    const double spread = s(0) - s(s.size() - 1);
    const bool scaled_isometry = spread <= tolerance * std::max(1.0, s(0));
    r.restriction_spread.push_back(spread);
    r.restriction_is_scaled_isometry.push_back(scaled_isometry);
    r.has_projective_dual = r.has_projective_dual && scaled_isometry;
  }
  r.canonical_dual_projective = classify(canonical_dual(v, tolerance), tolerance).is_projective;
  return r;
}

std::map<std::string, ReconstructionSystem> example_fixtures() {
  const double r2 = 1.0 / std::numbers::sqrt2;
  std::map<std::string, ReconstructionSystem> out;

  // C^3 -> C^2: (x,y,z) -> (y,z) and (x,y,z) -> (x,z).
  Matrix v1(2, 3), v2(2, 3);
  v1 << 0, 1, 0, 0, 0, 1;
  v2 << 1, 0, 0, 0, 0, 1;
  out.emplace("c3_pair", ReconstructionSystem(std::vector<Matrix>{v1, v2}));

  // Adjoints (x,y) -> (0, x, w y) and (x,y) -> (x, 0, conj(w) y).
  Matrix w1 = Matrix::Zero(2, 3), w2 = Matrix::Zero(2, 3);
  w1(0, 1) = 1.0;
  w1(1, 2) = std::conj(kOmega);
  w2(0, 0) = 1.0;
  w2(1, 2) = kOmega;
  out.emplace("c3_omega_dual", ReconstructionSystem(std::vector<Matrix>{w1, w2}));

  // C^4 -> C^2: (x1,x2) and (x3, (x2-x4)/sqrt2).
  Matrix a1 = Matrix::Zero(2, 4), a2 = Matrix::Zero(2, 4);
  a1(0, 0) = 1.0;
  a1(1, 1) = 1.0;
  a2(0, 2) = 1.0;
  a2(1, 1) = r2;
  a2(1, 3) = -r2;
  out.emplace("c4_riesz", ReconstructionSystem(std::vector<Matrix>{a1, a2}));

  // Third coisometry with the same kernel as the second block.
  Matrix hadamard(2, 2);
  hadamard << r2, r2, r2, -r2;
  out.emplace("c4_riesz_enlarged", ReconstructionSystem(std::vector<Matrix>{a1, a2, Matrix(hadamard * a2)}));

  // (x1 - x3, x2 - x4).
  Matrix a3 = Matrix::Zero(2, 4);
  a3(0, 0) = 1.0;
  a3(0, 2) = -1.0;
  a3(1, 1) = 1.0;
  a3(1, 3) = -1.0;
  out.emplace("c4_riesz_projective", ReconstructionSystem(std::vector<Matrix>{a1, a3}));

  return out;
}

}  // namespace gframe
