#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "gframe/gframe.hpp"

namespace gframe {
namespace {

using testing::random_projective;
using testing::random_system;

ReconstructionSystem c3_pair() { return example_fixtures().at("c3_pair"); }

// Worked example with the second block doubled: projective, weights (1, 2).
ReconstructionSystem c3_pair_rescaled() {
  const auto v = c3_pair();
  return ReconstructionSystem(std::vector<Matrix>{v.block(0), 2.0 * v.block(1)});
}

double two_error_squared(const ReconstructionSystem& v, const ReconstructionSystem& w) {
  const double e = error_report(v, w).two_error;
  return e * e;
}

TEST(ErasureMask, Validation) {
  EXPECT_THROW(ErasureMask(3, {3}), StructuralError);
  EXPECT_THROW(ErasureMask(3, {1, 1}), StructuralError);
  const ErasureMask mask(4, {3, 0});
  EXPECT_EQ(mask.erased(), (std::vector<std::size_t>{0, 3}));
  EXPECT_TRUE(mask.is_erased(3));
  EXPECT_FALSE(mask.is_erased(1));
}

TEST(BlindReconstruct, EmptyMaskIsExact) {
  Rng rng(1);
  const auto v = random_system(rng, {2, 2, 1}, 4);
  const auto w = canonical_dual(v);
  const Vector x = gaussian_matrix(4, 1, rng);
  const auto coeffs = analysis_apply(v, x);
  EXPECT_LE((blind_reconstruct(v, w, coeffs, ErasureMask::none(3)) - x).norm(), 1e-10);
}

TEST(BlindReconstruct, SingleErasureErrorIsErasedTerm) {
  Rng rng(2);
  const auto v = random_system(rng, {2, 3, 1, 2}, 4);
  for (const auto& w : dual_manifold_sample(v, 4, 10)) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Vector x = gaussian_matrix(4, 1, rng);
      const auto coeffs = analysis_apply(v, x);
      const Vector err = x - blind_reconstruct(v, w, coeffs, ErasureMask::single(v.size(), j));
      EXPECT_LE((err - w.block(j).adjoint() * v.block(j) * x).norm(), 1e-9 * std::max(1.0, x.norm()));
    }
  }
}

TEST(BlindReconstruct, AllErasedGivesZero) {
  const auto v = c3_pair();
  const auto coeffs = analysis_apply(v, Vector{{1.0, 2.0, 3.0}});
  EXPECT_EQ(blind_reconstruct(v, canonical_dual(v), coeffs, ErasureMask(2, {0, 1})), Vector::Zero(3));
}

TEST(BlindReconstruct, ShapeErrors) {
  const auto v = c3_pair();
  const auto coeffs = analysis_apply(v, Vector{{1.0, 2.0, 3.0}});
  EXPECT_THROW(blind_reconstruct(v, v, coeffs, ErasureMask::none(3)), StructuralError);
  Rng rng(3);
  EXPECT_THROW(blind_reconstruct(v, random_system(rng, {1, 2}, 3), coeffs, ErasureMask::none(2)), StructuralError);
}

TEST(ErrorReport, IdentityBlock) {
  const ReconstructionSystem v(std::vector<Matrix>{identity(5)});
  const auto r = error_report(v, v);
  ASSERT_EQ(r.per_index.size(), 1u);
  EXPECT_NEAR(r.per_index[0], std::sqrt(5.0), 1e-14);
}

TEST(ErrorReport, ProjectiveNormIdentity) {
  Rng rng(4);
  const std::vector<double> weights{0.5, 1.5, 2.0};
  const auto v = random_projective(rng, {2, 1, 3}, 4, weights);
  for (const auto& w : dual_manifold_sample(v, 6, 20)) {
    const auto r = error_report(v, w);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_NEAR(r.per_index[i], weights[i] * frobenius_norm(w.block(i)), 1e-10);
    }
  }
}

TEST(ErrorReport, MatchesTraceOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_system(rng, {2, 3, 2}, 4);
    const auto w = random_system(rng, {2, 3, 2}, 4);
    const auto r = error_report(v, w);
    double sum_sq = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Matrix& vi = v.block(i);
      const Matrix& wi = w.block(i);
      // tr(V_i^* W_i W_i^* V_i), accumulated entry by entry.
      double trace = 0.0;
      for (Eigen::Index a = 0; a < vi.cols(); ++a) {
        for (Eigen::Index b = 0; b < wi.cols(); ++b) {
          Complex entry = 0.0;
          for (Eigen::Index l = 0; l < vi.rows(); ++l) entry += std::conj(wi(l, b)) * vi(l, a);
          trace += std::norm(entry);
        }
      }
      EXPECT_NEAR(r.per_index[i], std::sqrt(trace), 1e-10);
      sum_sq += trace;
      worst = std::max(worst, std::sqrt(trace));
    }
    EXPECT_NEAR(r.two_error * r.two_error, sum_sq, 1e-10 * sum_sq);
    EXPECT_NEAR(r.worst_case, worst, 1e-10);
  }
}

TEST(ErrorReport, NormEquivalence) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_system(rng, {1, 2, 2, 3}, 4);
    const auto r = error_report(v, canonical_dual(v));
    const double sqrt_m = std::sqrt(static_cast<double>(v.size()));
    double sum_sq = 0.0;
    for (double e : r.per_index) {
      EXPECT_GE(e, 0.0);
      sum_sq += e * e;
    }
    EXPECT_NEAR(r.two_error * r.two_error, sum_sq, 1e-12 * std::max(1.0, sum_sq));
    EXPECT_EQ(r.worst_case, *std::max_element(r.per_index.begin(), r.per_index.end()));
    EXPECT_GE(r.worst_case + 1e-12, r.two_error / sqrt_m);
    EXPECT_GE(r.two_error / sqrt_m + 1e-12, r.worst_case / sqrt_m);
  }
}

TEST(OptimalDualTwoError, UniformIsCanonical) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_projective(rng, {2, 1, 3, 2}, 4, {1.3, 1.3, 1.3, 1.3});
    EXPECT_LE(max_block_distance(optimal_dual_two_error(v), canonical_dual(v)), 1e-10);
  }
  const auto v = c3_pair();
  EXPECT_LE(max_block_distance(optimal_dual_two_error(v), canonical_dual(v)), 1e-14);
}

TEST(OptimalDualTwoError, NonUniformBeatsSampledDuals) {
  const auto v = c3_pair_rescaled();
  const auto w0 = optimal_dual_two_error(v);
  EXPECT_LE(verify_dual(w0, v).dual_residual, 1e-9);
  const double best = error_report(v, w0).two_error;
  for (double scale : {1.0, 0.1, 0.01}) {
    DualSampleOptions opts;
    opts.scale = scale;
    for (const auto& w : dual_manifold_sample(v, 21, 1000 / 3, opts)) {
      EXPECT_LE(best, error_report(v, w).two_error + 1e-9);
    }
  }
  // The canonical dual is not optimal once the weights differ.
  EXPECT_LT(best, error_report(v, canonical_dual(v)).two_error - 1e-6);
}

TEST(OptimalDualTwoError, Preconditions) {
  Rng rng(8);
  EXPECT_THROW(optimal_dual_two_error(random_system(rng, {2, 2}, 3)), PreconditionError);
  const ReconstructionSystem rank_deficient(std::vector<Matrix>{Matrix::Identity(1, 3), Matrix::Identity(1, 3)});
  EXPECT_THROW(optimal_dual_two_error(rank_deficient), NotAnRsError);
}

TEST(ErasureProperty, TwoErrorIdentity) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_projective(rng, {2, 1, 2, 3}, 4, testing::distinct_weights(rng, 4));
    const auto weights = *classify(v).weights;
    Matrix s_d = Matrix::Zero(4, 4);
    for (std::size_t i = 0; i < v.size(); ++i) {
      s_d += v.block(i).adjoint() * v.block(i) / (weights[i] * weights[i]);
    }
    const Matrix s_d_inv = s_d.inverse();
    double direct = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      direct += (s_d_inv * v.block(i).adjoint()).squaredNorm() / (weights[i] * weights[i]);
    }
    EXPECT_NEAR(two_error_squared(v, optimal_dual_two_error(v)), direct, 1e-10 * direct);
  }
}

TEST(ErasureProperty, FirstOrderStationarity) {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = random_projective(rng, {2, 2, 1, 3}, 4, testing::distinct_weights(rng, 4));
    const auto w0 = optimal_dual_two_error(v);
    const double base = two_error_squared(v, w0);
    const Matrix projector = range_complement_projector(v);
    for (int n = 0; n < 50; ++n) {
      Matrix dz = gaussian_matrix(4, v.signature().total(), rng);
      dz /= frobenius_norm(dz);
      const Matrix moved = w0.synthesis_matrix() + 1e-4 * dz * projector;
      const auto w = ReconstructionSystem::from_synthesis(v.signature(), moved);
      ASSERT_LE(verify_dual(w, v).dual_residual, 1e-9);
      EXPECT_GE(two_error_squared(v, w) - base, -1e-8);
    }
  }
}

TEST(ErasureProperty, Uniqueness) {
  Rng rng(11);
  const auto v = random_projective(rng, {2, 2, 2}, 3, {0.6, 1.0, 1.8});
  const auto w0 = optimal_dual_two_error(v);
  const double best = error_report(v, w0).two_error;
  for (double scale : {1e-4, 1e-2, 1.0}) {
    DualSampleOptions opts;
    opts.scale = scale;
    for (const auto& w : dual_manifold_sample(v, 31, 100, opts)) {
      ASSERT_GT(max_block_distance(w, w0), 1e-7);
      EXPECT_GT(error_report(v, w).two_error, best);
    }
  }
}

TEST(ErasureProperty, Factorization) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_projective(rng, {3, 1, 2}, 4, testing::distinct_weights(rng, 3));
    const auto weights = *classify(v).weights;
    std::vector<Matrix> normalized;
    for (std::size_t i = 0; i < v.size(); ++i) normalized.emplace_back(v.block(i) / weights[i]);
    const ReconstructionSystem u(std::move(normalized));
    EXPECT_LE(frobenius_norm(weighted_projection_sum(v) - frame_operator(u)), 1e-12);
    const auto u_dual = canonical_dual(u);
    const auto w0 = optimal_dual_two_error(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_LE(frobenius_norm(w0.block(i) - u_dual.block(i) / weights[i]), 1e-10);
    }
  }
}

TEST(WceCondition, UniformProtocol) {
  Rng rng(13);
  for (int copies : {1, 2, 3}) {
    const auto v = testing::uniform_protocol(rng, 6, 2, copies);
    const auto c = wce_condition(v);
    ASSERT_TRUE(c.has_value());
    // v^2 sqrt(k) with v^2 = 1 / copies.
    EXPECT_NEAR(*c, std::sqrt(2.0) / copies, 1e-12);
  }
}

TEST(WceCondition, WorkedExample) {
  const auto c = wce_condition(c3_pair());
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(*c, std::sqrt(5.0) / 2.0, 1e-14);
}

TEST(WceCondition, AbsentWhenNormsDiffer) {
  EXPECT_FALSE(wce_condition(c3_pair_rescaled()).has_value());
  Rng rng(14);
  EXPECT_THROW(wce_condition(random_system(rng, {2, 2}, 3)), PreconditionError);
}

TEST(WceMinimize, ConditionMakesCanonicalOptimal) {
  Rng rng(15);
  const auto v = testing::uniform_protocol(rng, 4, 2, 3);
  const auto result = wce_minimize(v, {.iterations = 2000, .seed = 1});
  const double reference = error_report(v, canonical_dual(v)).worst_case;
  EXPECT_NEAR(result.worst_case, reference, 1e-6);
  EXPECT_LE(verify_dual(result.system, v).dual_residual, 1e-9);
}

TEST(WceMinimize, RieszReturnsCanonical) {
  Rng rng(16);
  const auto v = testing::random_riesz(rng, {2, 1, 2});
  const auto result = wce_minimize(v, {.iterations = 200});
  EXPECT_LE(max_block_distance(result.system, canonical_dual(v)), 1e-10);
  EXPECT_EQ(result.best_iteration, 0);
}

TEST(WceMinimize, BeatsSampledDuals) {
  Rng rng(17);
  const auto v = random_projective(rng, {2, 1, 2, 1}, 3, testing::distinct_weights(rng, 4));
  const auto result = wce_minimize(v);
  EXPECT_LE(verify_dual(result.system, v).dual_residual, 1e-9);
  EXPECT_NEAR(result.worst_case, error_report(v, result.system).worst_case, 1e-12);
  EXPECT_LE(result.worst_case, error_report(v, canonical_dual(v)).worst_case);
  for (double scale : {1.0, 0.1, 0.01}) {
    DualSampleOptions opts;
    opts.scale = scale;
    for (const auto& w : dual_manifold_sample(v, 41, 1000 / 3, opts)) {
      EXPECT_LE(result.worst_case, error_report(v, w).worst_case + 1e-9);
    }
  }
}

TEST(WceMinimize, DeterministicInSeed) {
  Rng rng(18);
  const auto v = random_system(rng, {2, 2, 2, 1}, 3);
  const auto a = wce_minimize(v, {.iterations = 300, .seed = 5});
  const auto b = wce_minimize(v, {.iterations = 300, .seed = 5});
  EXPECT_EQ(a.worst_case, b.worst_case);
  EXPECT_EQ(max_block_distance(a.system, b.system), 0.0);
}

TEST(WceMinimize, RequiresInjective) {
  const ReconstructionSystem v(std::vector<Matrix>{identity(2), Matrix::Zero(1, 2)});
  EXPECT_THROW(wce_minimize(v), PreconditionError);
}

}  // namespace
}  // namespace gframe
