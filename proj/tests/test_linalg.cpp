#include <gtest/gtest.h>

#include <cmath>

#include "abnorm/golden.hpp"
#include "abnorm/linalg.hpp"
#include "abnorm/random.hpp"

using namespace abnorm;

namespace {

Matrix diag(std::initializer_list<cplx> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (cplx x : d) v(i++) = x;
  return v.asDiagonal();
}

Vector unit(Eigen::Index n, Eigen::Index k) {
  Vector e = Vector::Zero(n);
  e(k) = 1.0;
  return e;
}

}  // namespace

TEST(Eigensystem, AscendingAndReconstructs) {
  Rng rng(7);
  const Matrix H = random_hermitian(5, rng);
  const HermitianEigensystem es = hermitian_eigensystem(H);
  for (Eigen::Index i = 1; i < es.size(); ++i) EXPECT_LE(es.eigenvalues(i - 1), es.eigenvalues(i));
  const Matrix R = es.eigenvectors * es.eigenvalues.cast<cplx>().asDiagonal() * es.eigenvectors.adjoint();
  EXPECT_LT((R - H).norm(), 1e-12 * (1.0 + H.norm()));
  EXPECT_NEAR(lambda_max(H), es.max(), 1e-12);
}

TEST(Eigensystem, RejectsNonHermitian) {
  Matrix J = Matrix::Zero(2, 2);
  J(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigensystem(J), NonHermitianInput);
}

TEST(Eigensystem, RejectsNonSquare) { EXPECT_THROW(require_square(Matrix(2, 3)), DimensionError); }

TEST(FunctionalCalculus, SqrtOfDiagonal) {
  const Matrix R = psd_function(diag({9.0, 4.0, 0.0}), SqrtFn{});
  EXPECT_LT((R - diag({3.0, 2.0, 0.0})).norm(), 1e-12);
}

TEST(FunctionalCalculus, AbsOfShift) {
  const Matrix T = weighted_shift(3, {2.0, 1.0});
  EXPECT_LT((polar_abs(T) - diag({2.0, 1.0, 0.0})).norm(), 1e-12);
  EXPECT_LT((polar_abs(T.adjoint()) - diag({0.0, 2.0, 1.0})).norm(), 1e-12);
}

TEST(FunctionalCalculus, PowerPairMultipliesToIdentity) {
  Rng rng(3);
  const Matrix P = random_psd(4, rng);
  const PowerPair fg{0.3};
  const Matrix prod = psd_function(P, fg.f()) * psd_function(P, fg.g());
  EXPECT_LT((prod - P).norm(), 1e-9 * (1.0 + P.norm()));
}

TEST(FunctionalCalculus, TableOutsideDomainThrows) {
  EXPECT_THROW(apply_scalar(TableFn{{0.0, 1.0}, {0.0, 1.0}}, 2.0), DomainError);
  EXPECT_NEAR(apply_scalar(TableFn{{0.0, 1.0}, {0.0, 2.0}}, 0.25), 0.5, 1e-15);
}

TEST(Cartesian, ReImRecombine) {
  Rng rng(11);
  const Matrix T = ginibre(4, rng);
  const Matrix R = real_part(T);
  const Matrix I = imag_part(T);
  EXPECT_TRUE(is_hermitian(R));
  EXPECT_TRUE(is_hermitian(I));
  EXPECT_LT((R + cplx(0.0, 1.0) * I - T).norm(), 1e-12);
}

TEST(Cartesian, DiagOneI) {
  const Matrix T = diag({1.0, cplx(0.0, 1.0)});
  EXPECT_LT((real_part(T) - diag({1.0, 0.0})).norm(), 1e-15);
  EXPECT_LT((imag_part(T) - diag({0.0, 1.0})).norm(), 1e-15);
}

TEST(Subspaces, TopEigenspaceKeepsDegeneracy) {
  const Subspace s = top_eigenspace(diag({32.0 / 5.0, 32.0 / 5.0, 3.0 / 5.0}));
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.contains(unit(3, 0)));
  EXPECT_TRUE(s.contains(unit(3, 1)));
  EXPECT_FALSE(s.contains(unit(3, 2)));
}

TEST(Subspaces, KernelOfDifferenceOfAbsValues) {
  const Subspace k = kernel(diag({2.0, 0.0, -2.0}));
  ASSERT_EQ(k.dim(), 1);
  EXPECT_TRUE(k.contains(unit(3, 1)));
  EXPECT_EQ(kernel(Matrix::Identity(3, 3)).dim(), 0);
}

TEST(Subspaces, IntersectionOfSpans) {
  const Subspace e2{3, unit(3, 1)};
  Matrix b23(3, 2);
  b23 << unit(3, 1), unit(3, 2);
  const Subspace out = intersect_subspaces({e2, Subspace{3, b23}, e2});
  ASSERT_EQ(out.dim(), 1);
  EXPECT_TRUE(out.contains(unit(3, 1)));

  const Subspace disjoint = intersect_subspaces({Subspace{2, unit(2, 0)}, Subspace{2, unit(2, 1)}});
  EXPECT_TRUE(disjoint.is_trivial());
  EXPECT_THROW(intersect_subspaces({}), DimensionMismatch);
  EXPECT_THROW(intersect_subspaces({Subspace::full(2), Subspace::full(3)}), DimensionMismatch);
}

TEST(Subspaces, CanonicalPhaseIsRealFirst) {
  Vector v(2);
  v << cplx(0.0, 2.0), cplx(1.0, 1.0);
  const Vector c = canonical_phase(v);
  EXPECT_NEAR(c(0).imag(), 0.0, 1e-15);
  EXPECT_GT(c(0).real(), 0.0);
  EXPECT_NEAR(c.norm(), v.norm(), 1e-14);
}

TEST(GoldenSection, FindsParabolaMinimum) {
  const auto r = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(r.x, 0.3, 1e-7);
  EXPECT_NEAR(r.fx, 1.0, 1e-15);
}

TEST(GoldenSection, MaxOfAffineKink) {
  const auto r = golden_section_minimize([](double x) { return std::max(2.0 - 3.0 * x, 4.0 * x - 1.0); }, 0.0, 1.0,
                                         1e-12);
  EXPECT_NEAR(r.x, 3.0 / 7.0, 1e-9);
}

TEST(Random, SameSeedSameStream) {
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.bits(), b.bits());
  EXPECT_NE(Rng(99).bits(), Rng(100).bits());
  EXPECT_NE(derive_seed(42, 1), derive_seed(42, 2));
}

TEST(Random, GeneratorsAreReproducible) {
  const GeneratorSpec spec{GeneratorKind::ginibre, 4, 1234, {}};
  EXPECT_EQ((random_matrix(spec) - random_matrix(spec)).norm(), 0.0);
}

TEST(Random, UnitaryIsUnitary) {
  Rng rng(5);
  const Matrix U = random_unitary(5, rng);
  EXPECT_LT((U.adjoint() * U - Matrix::Identity(5, 5)).norm(), 1e-12);
}

TEST(Random, ShiftIsSubdiagonal) {
  const Matrix T = weighted_shift(3, {2.0, 1.0});
  EXPECT_EQ(T(1, 0), cplx(2.0));
  EXPECT_EQ(T(2, 1), cplx(1.0));
  EXPECT_EQ(T.cwiseAbs().sum(), 3.0);
  EXPECT_THROW(weighted_shift(3, {1.0}), InvalidSpec);
}

TEST(Random, PairsSatisfyTheirHypotheses) {
  const auto commutator = [](const Matrix& X, const Matrix& Y) { return (X * Y - Y * X).norm(); };
  for (std::uint64_t s = 0; s < 10; ++s) {
    const MatrixPair c = random_pair({GeneratorKind::commuting_pair, 4, s, {}});
    EXPECT_LT(commutator(c.A, c.B), 1e-9 * (1.0 + c.A.norm() * c.B.norm()));

    const MatrixPair n = random_pair({GeneratorKind::normal_poly_pair, 4, s, {}});
    EXPECT_LT((n.A.adjoint() * n.B - n.B * n.A.adjoint()).norm(), 1e-9 * (1.0 + n.A.norm() * n.B.norm()));

    const MatrixPair iso = random_pair({GeneratorKind::isometry_pair, 4, s, {}});
    EXPECT_LT((iso.A.adjoint() * iso.A - Matrix::Identity(4, 4)).norm(), 1e-12);
    EXPECT_LT(commutator(iso.A, iso.B), 1e-9 * (1.0 + iso.B.norm()));

    const MatrixPair h = random_pair({GeneratorKind::block_hermitian_pair, 4, s, {}});
    const Matrix absA = polar_abs(h.A);
    EXPECT_LT((absA * h.B - h.B.adjoint() * absA).norm(), 1e-9 * (1.0 + h.A.norm() * h.B.norm()));
  }
  EXPECT_THROW(random_pair({GeneratorKind::ginibre, 3, 0, {}}), InvalidSpec);
  EXPECT_THROW(random_matrix({GeneratorKind::commuting_pair, 3, 0, {}}), InvalidSpec);
  EXPECT_THROW(random_matrix({GeneratorKind::ginibre, 0, 0, {}}), InvalidSpec);
}
