#include <gtest/gtest.h>

#include <cmath>

#include "abnorm/harness.hpp"

using namespace abnorm;

namespace {

const std::vector<Weights> kGrid{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, 3.0}, {0.5, 5.0}, {3.0, 0.2}};

}  // namespace

TEST(Weights, Validation) {
  EXPECT_THROW(Weights({0.0, 0.0}).validate(), InvalidWeights);
  EXPECT_THROW(Weights({-1.0, 1.0}).validate(), InvalidWeights);
  EXPECT_THROW(Weights({1.0, NAN}).validate(), InvalidWeights);
  EXPECT_NO_THROW(Weights({0.0, 2.0}).validate());
  EXPECT_THROW(alpha_beta_norm(examples::jordan2(), {0.0, 0.0}), InvalidWeights);
  EXPECT_NEAR(MixRatio::of({12.0, 5.0}).t, 12.0 / 17.0, 1e-15);
}

TEST(AlphaBeta, JordanClosedForm) {
  for (double a : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    for (double b : {0.0, 0.3, 1.0, 2.0, 4.0}) {
      const Weights w{a, b};
      EXPECT_NEAR(alpha_beta_norm(examples::jordan2(), w).value, examples::jordan2_closed_form(w), 1e-8)
          << "alpha=" << a << " beta=" << b;
    }
  }
}

TEST(AlphaBeta, EndpointsRecoverClassicalNorms) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Matrix T = random_matrix({GeneratorKind::ginibre, 4, s, {}});
    EXPECT_NEAR(alpha_beta_norm(T, {1.0, 0.0}).value, numerical_radius(T).value, 1e-7);
    EXPECT_NEAR(alpha_beta_norm(T, {0.0, 1.0}).value, operator_norm(T).value, 1e-7);
  }
}

TEST(AlphaBeta, WitnessAttainsValue) {
  const Matrix T = random_matrix({GeneratorKind::ginibre, 5, 77, {}});
  const Weights w{2.0, 3.0};
  const NormCertificate c = alpha_beta_norm(T, w);
  EXPECT_NEAR(c.witness.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::sqrt(alpha_beta_objective(T, w, c.witness)), c.value, 1e-12);
}

TEST(AlphaBeta, GradientMatchesFiniteDifference) {
  Rng rng(4);
  const Matrix T = ginibre(3, rng);
  const Weights w{0.7, 1.3};
  const Vector x = random_unit_vector(3, rng);
  const Vector d = random_unit_vector(3, rng);
  const double h = 1e-6;
  const double fd = (alpha_beta_objective(T, w, x + h * d) - alpha_beta_objective(T, w, x - h * d)) / (2.0 * h);
  EXPECT_NEAR(alpha_beta_gradient(T, w, x).dot(d).real(), fd, 1e-6);
}

TEST(AlphaBeta, OracleAgreesOnSmallMatrices) {
  OracleOptions o;
  o.grid = 400;
  o.samples = 60000;
  o.refine_count = 100;
  for (std::uint64_t s = 0; s < 4; ++s) {
    for (Eigen::Index n : {2, 3}) {
      const Matrix T = random_matrix({GeneratorKind::ginibre, n, s, {}});
      for (const Weights& w : kGrid) {
        const double opt = alpha_beta_norm(T, w).value;
        const double orc = alpha_beta_norm_oracle(T, w, o);
        EXPECT_NEAR(opt, orc, 1e-3 * (1.0 + opt)) << "n=" << n << " seed=" << s;
        EXPECT_LE(orc, opt + 1e-9 * (1.0 + opt));
      }
    }
  }
  EXPECT_THROW(alpha_beta_norm_oracle(Matrix::Identity(4, 4), {1.0, 1.0}), UnsupportedDimension);
}

TEST(AlphaBeta, NormAxioms) {
  const Matrix S = random_matrix({GeneratorKind::ginibre, 4, 1, {}});
  const Matrix T = random_matrix({GeneratorKind::ginibre, 4, 2, {}});
  const Matrix U = random_matrix({GeneratorKind::unitary, 4, 3, {}});
  for (const Weights& w : kGrid) {
    const double s = alpha_beta_norm(S, w).value;
    const double t = alpha_beta_norm(T, w).value;
    EXPECT_LE(alpha_beta_norm(S + T, w).value, s + t + 1e-7);
    EXPECT_NEAR(alpha_beta_norm(cplx(-1.5, 2.0) * T, w).value, 2.5 * t, 1e-7 * (1.0 + t));
    EXPECT_NEAR(alpha_beta_norm(U.adjoint() * T * U, w).value, t, 1e-7 * (1.0 + t));
    EXPECT_NEAR(alpha_beta_norm(T.adjoint(), w).value, t, 1e-7 * (1.0 + t));
  }
}

TEST(AlphaBeta, EquivalenceWithRadiusAndNorm) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const Matrix T = random_matrix({GeneratorKind::ginibre, 4, s + 40, {}});
    const double wr = numerical_radius(T).value;
    const double nm = operator_norm(T).value;
    for (const Weights& w : kGrid) {
      const double v = alpha_beta_norm(T, w).value;
      EXPECT_LE(std::sqrt(w.sum()) * wr, v + 1e-7);
      EXPECT_LE(v, std::sqrt(w.alpha + 4.0 * w.beta) * wr + 1e-7);
      EXPECT_LE(std::max(0.5 * std::sqrt(w.sum()), std::sqrt(w.beta)) * nm, v + 1e-7);
      EXPECT_LE(v, std::sqrt(w.sum()) * nm + 1e-7);
    }
  }
}

TEST(AlphaBeta, NormalOperatorsAttainTheTopOfTheScale) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Matrix T = random_matrix({GeneratorKind::normal, 3, s, {}});
    const double nm = operator_norm(T).value;
    for (const Weights& w : kGrid) {
      EXPECT_NEAR(alpha_beta_norm(T, w).value, std::sqrt(w.sum()) * nm, 1e-7 * (1.0 + nm));
    }
  }
}

TEST(AlphaBeta, RestartsAreDeterministic) {
  const Matrix T = random_matrix({GeneratorKind::ginibre, 6, 9, {}});
  OptimizerOptions o;
  o.seed = 123;
  const NormCertificate a = alpha_beta_norm(T, {1.0, 2.0}, o);
  const NormCertificate b = alpha_beta_norm(T, {1.0, 2.0}, o);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ((a.witness - b.witness).norm(), 0.0);
  o.restarts = 0;
  EXPECT_THROW(alpha_beta_norm(T, {1.0, 2.0}, o), InvalidParams);
}

TEST(EqualityDiagnostics, NormaloidIffDecomposedValue) {
  const EqualityDiagnostics herm = equality_diagnostics(random_matrix({GeneratorKind::hermitian, 3, 5, {}}), {1.0, 1.0});
  EXPECT_TRUE(herm.normaloid);
  EXPECT_TRUE(herm.attains_decomposed);
  EXPECT_FALSE(herm.forces_zero);

  const EqualityDiagnostics up = equality_diagnostics(examples::upper_shift_2_2(), {2.0, 3.0});
  EXPECT_FALSE(up.normaloid);
  EXPECT_FALSE(up.attains_decomposed);
  EXPECT_FALSE(up.forces_zero);

  EXPECT_THROW(equality_diagnostics(examples::jordan2(), {1.0, 0.0}), InvalidWeights);
}

TEST(Counterexamples, SubmultiplicativityFails) {
  const ProductViolation v = algebra_norm_counterexample();
  EXPECT_NEAR(v.norm_product, 1.0, 1e-9);
  EXPECT_NEAR(v.product_norms, 0.25, 1e-9);
  EXPECT_GT(v.norm_product, v.product_norms);
}

TEST(Counterexamples, SearchFindsAllThreeKinds) {
  const CounterexampleSearch s = search_counterexamples(400, 42);
  ASSERT_TRUE(s.product.has_value());
  EXPECT_GT(s.product->norm_product, s.product->product_norms);
  ASSERT_TRUE(s.power_below.has_value());
  EXPECT_LT(s.power_below->norm_of_power, s.power_below->power_of_norm);
  ASSERT_TRUE(s.power_above.has_value());
  EXPECT_GT(s.power_above->norm_of_power, s.power_above->power_of_norm);
}
