#include <gtest/gtest.h>

#include <cmath>

#include "abnorm/harness.hpp"

using namespace abnorm;

TEST(NumericalRadius, JordanBlock) {
  const Matrix J = examples::jordan2();
  const NormCertificate c = numerical_radius(J);
  EXPECT_NEAR(c.value, 0.5, 1e-12);
  EXPECT_NEAR(std::abs(inner(J * c.witness, c.witness)), c.value, 1e-14);
  EXPECT_NEAR(c.witness.norm(), 1.0, 1e-14);
  EXPECT_NEAR(crawford_number(J).value, 0.0, 1e-12);
}

TEST(NumericalRadius, DiagOneI) {
  const Matrix T = examples::diag_one_i();
  EXPECT_NEAR(numerical_radius(T).value, 1.0, 1e-12);
  // W(T) is the segment [1, i]; its closest point to 0 is (1+i)/2
  EXPECT_NEAR(crawford_number(T).value, 1.0 / std::sqrt(2.0), 1e-9);
}

TEST(NumericalRadius, UpperShiftIsNotNormaloid) {
  const Matrix T = examples::upper_shift_2_2();
  EXPECT_NEAR(operator_norm(T).value, 2.0, 1e-12);
  EXPECT_NEAR(numerical_radius(T).value, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(spectral_radius(T), 0.0, 1e-6);
  EXPECT_FALSE(is_normaloid(T));
}

TEST(NumericalRadius, HermitianAndNormalAreNormaloid) {
  Rng rng(21);
  for (int k = 0; k < 5; ++k) {
    const Matrix H = random_hermitian(4, rng);
    EXPECT_TRUE(is_normaloid(H, 1e-9));
    const Matrix N = random_normal(4, rng);
    EXPECT_NEAR(numerical_radius(N).value, spectral_radius(N), 1e-9 * (1.0 + spectral_radius(N)));
  }
}

TEST(NumericalRadius, ClassicalSandwich) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix T = random_matrix({GeneratorKind::ginibre, 5, s, {}});
    const double w = numerical_radius(T).value;
    const double nm = operator_norm(T).value;
    EXPECT_LE(0.5 * nm, w + 1e-9 * (1.0 + nm));
    EXPECT_LE(w, nm + 1e-12);
    EXPECT_LE(spectral_radius(T), w + 1e-9 * (1.0 + nm));
  }
}

TEST(NumericalRadius, ZeroOperator) {
  EXPECT_EQ(numerical_radius(Matrix::Zero(3, 3)).value, 0.0);
  EXPECT_EQ(operator_norm(Matrix::Zero(3, 3)).value, 0.0);
}

TEST(OperatorNorm, ShiftAndRankTwo) {
  EXPECT_NEAR(operator_norm(examples::shift_2_1()).value, 2.0, 1e-12);
  EXPECT_NEAR(spectral_radius(examples::rank_two_example()), 1.0, 1e-12);
  const NormCertificate c = operator_norm(examples::shift_2_1());
  EXPECT_NEAR((examples::shift_2_1() * c.witness).norm(), 2.0, 1e-12);
}

TEST(RestrictedNorm, OnCoordinateSpans) {
  Matrix B = Matrix::Zero(3, 3);
  B.diagonal() << 4.0, 1.0, 0.0;
  Matrix e12 = Matrix::Zero(3, 2);
  e12(0, 0) = 1.0;
  e12(1, 1) = 1.0;
  EXPECT_NEAR(restricted_norm(B, Subspace{3, e12}), 4.0, 1e-12);
  Matrix e3 = Matrix::Zero(3, 1);
  e3(2, 0) = 1.0;
  EXPECT_NEAR(restricted_norm(B, Subspace{3, e3}), 0.0, 1e-12);
  EXPECT_THROW(restricted_norm(B, Subspace::trivial(3)), EmptySubspace);
  EXPECT_THROW(restricted_norm(B, Subspace::full(2)), DimensionMismatch);
}

TEST(RestrictedNorm, AttainmentSubspaceOfDegenerateTop) {
  Matrix M = Matrix::Zero(3, 3);
  M.diagonal() << 16.0, 16.0, 3.0;
  const Subspace L = norm_attainment_subspace(M);
  EXPECT_EQ(L.dim(), 2);
  Vector e3 = Vector::Zero(3);
  e3(2) = 1.0;
  EXPECT_FALSE(L.contains(e3));
}

TEST(Sweep, RejectsTinyGrid) {
  SweepOptions o;
  o.grid_points = 4;
  EXPECT_THROW(numerical_radius(examples::jordan2(), o), InvalidParams);
}
