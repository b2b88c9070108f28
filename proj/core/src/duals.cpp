#include "gframe/duals.hpp"

#include "gframe/errors.hpp"
#include "gframe/random.hpp"

namespace gframe {

ReconstructionSystem canonical_dual(const ReconstructionSystem& v, double tolerance) {
  require_rs(v, tolerance, "canonical_dual");
  return v.right_multiplied(hermitian_inverse(frame_operator(v)));
}

DualCandidate verify_dual(const ReconstructionSystem& w, const ReconstructionSystem& v, double tolerance) {
  require_same_signature(w, v, "verify_dual");
  Matrix product = Matrix::Zero(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.size(); ++i) product.noalias() += w.block(i).adjoint() * v.block(i);
  const double residual = frobenius_norm(product - identity(v.dim()));
  return DualCandidate{w, v, residual, tolerance};
}

Matrix range_complement_projector(const ReconstructionSystem& v, double tolerance) {
  require_rs(v, tolerance, "range_complement_projector");
  const Matrix t = v.analysis_matrix();
  const Matrix p = t * hermitian_inverse(frame_operator(v)) * t.adjoint();
  return hermitian_part(identity(t.rows()) - p);
}

ReconstructionSystem dual_from_parameter(const ReconstructionSystem& v, const Matrix& z, double tolerance) {
  const Eigen::Index total = v.signature().total();
  if (z.rows() != v.dim() || z.cols() != total) {
    throw StructuralError("dual_from_parameter: parameter must be d x sum(k)");
  }
  const Matrix canonical_synthesis = canonical_dual(v, tolerance).synthesis_matrix();
  const Matrix synthesis = canonical_synthesis + z * range_complement_projector(v, tolerance);
  return ReconstructionSystem::from_synthesis(v.signature(), synthesis);
}

std::vector<ReconstructionSystem> dual_manifold_sample(const ReconstructionSystem& v, std::uint64_t seed,
                                                       std::size_t count, const DualSampleOptions& options) {
  const double tol = options.tolerance;
  const Matrix canonical_synthesis = canonical_dual(v, tol).synthesis_matrix();
  const Matrix projector = range_complement_projector(v, tol);

  Rng rng(seed);
  std::vector<ReconstructionSystem> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    bool accepted = false;
    for (int attempt = 0; attempt <= options.max_redraws && !accepted; ++attempt) {
      const Matrix z = gaussian_matrix(v.dim(), v.signature().total(), rng, options.scale);
      auto w = ReconstructionSystem::from_synthesis(v.signature(), canonical_synthesis + z * projector);
      if (is_rs(w, tol)) {
        out.push_back(std::move(w));
        accepted = true;
      }
    }
    if (!accepted) throw PreconditionError("dual_manifold_sample: every redraw produced a singular system");
  }
  return out;
}

}  // namespace gframe
