#ifndef ABNORM_RANDOM_HPP
#define ABNORM_RANDOM_HPP

// Seeded random matrices and hypothesis pairs. Streams are derived per case
// as hash(seed, index) so parallel campaigns reproduce serial ones.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "abnorm/errors.hpp"
#include "abnorm/linalg.hpp"

namespace abnorm {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

/// Uniform and Gaussian draws with a platform-independent bit layout
/// (std distributions are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  /// Standard complex Gaussian, E|z|² = 1.
  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline Matrix ginibre(Eigen::Index n, Rng& rng, double scale = 1.0) {
  Matrix M(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) M(i, j) = scale * rng.complex_normal();
  return M;
}

inline Vector random_unit_vector(Eigen::Index n, Rng& rng) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  double nv = v.norm();
  while (nv == 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
    nv = v.norm();
  }
  return v / nv;
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal phases removed.
inline Matrix random_unitary(Eigen::Index n, Rng& rng) {
  const Matrix G = ginibre(n, rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double m = std::abs(R(i, i));
    if (m > 0.0) Q.col(i) *= R(i, i) / m;
  }
  return Q;
}

inline Matrix random_hermitian(Eigen::Index n, Rng& rng) {
  const Matrix G = ginibre(n, rng);
  return 0.5 * (G + G.adjoint());
}

inline Matrix random_psd(Eigen::Index n, Rng& rng) {
  const Matrix G = ginibre(n, rng);
  return G.adjoint() * G;
}

inline Matrix random_normal(Eigen::Index n, Rng& rng) {
  const Matrix U = random_unitary(n, rng);
  Vector d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = rng.complex_normal();
  return U * d.asDiagonal() * U.adjoint();
}

/// Weighted sub-diagonal shift: T(i+1, i) = weights[i].
inline Matrix weighted_shift(Eigen::Index n, const std::vector<double>& weights) {
  if (static_cast<Eigen::Index>(weights.size()) != n - 1) {
    throw InvalidSpec("nilpotent-shift needs dim-1 weights, got " + std::to_string(weights.size()));
  }
  Matrix T = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) T(i + 1, i) = weights[static_cast<std::size_t>(i)];
  return T;
}

enum class GeneratorKind {
  ginibre,
  normal,
  hermitian,
  unitary,
  nilpotent_shift,
  commuting_pair,        // (p(M), q(M)), M Ginibre: AB = BA
  normal_poly_pair,      // (p(M), q(M)), M normal: also A*B = BA*, AB* = B*A
  isometry_pair,         // A unitary with two eigenvalue blocks, B block-diagonal in the same basis
  block_scalar_pair,     // A = U(a₁I ⊕ a₂I)U*, B = U(B₁ ⊕ B₂)U*: doubly commuting
  block_hermitian_pair,  // as above with Hermitian blocks: |A|B = B*|A| as well
  scalar_hermitian_pair  // (cI, H)
};

inline const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::ginibre: return "ginibre";
    case GeneratorKind::normal: return "normal";
    case GeneratorKind::hermitian: return "hermitian";
    case GeneratorKind::unitary: return "unitary";
    case GeneratorKind::nilpotent_shift: return "nilpotent-shift";
    case GeneratorKind::commuting_pair: return "commuting-pair";
    case GeneratorKind::normal_poly_pair: return "normal-poly-pair";
    case GeneratorKind::isometry_pair: return "isometry-pair";
    case GeneratorKind::block_scalar_pair: return "block-scalar-pair";
    case GeneratorKind::block_hermitian_pair: return "block-hermitian-pair";
    case GeneratorKind::scalar_hermitian_pair: return "scalar-hermitian-pair";
  }
  return "?";
}

inline bool is_pair_kind(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::commuting_pair:
    case GeneratorKind::normal_poly_pair:
    case GeneratorKind::isometry_pair:
    case GeneratorKind::block_scalar_pair:
    case GeneratorKind::block_hermitian_pair:
    case GeneratorKind::scalar_hermitian_pair:
      return true;
    default:
      return false;
  }
}

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::ginibre;
  Eigen::Index dim = 3;
  std::uint64_t seed = 0;
  /// nilpotent-shift weights; empty means draw them uniformly in [0, 3).
  std::vector<double> weights;
};

struct MatrixPair {
  Matrix A;
  Matrix B;
};

namespace detail {

inline void validate(const GeneratorSpec& spec) {
  if (spec.dim < 1) throw InvalidSpec("dim must be >= 1");
}

/// c₀I + c₁M + c₂M² with complex Gaussian coefficients.
inline Matrix random_quadratic(const Matrix& M, Rng& rng) {
  const Eigen::Index n = M.rows();
  const cplx c0 = rng.complex_normal();
  const cplx c1 = rng.complex_normal();
  const cplx c2 = rng.complex_normal();
  return c0 * Matrix::Identity(n, n) + c1 * M + c2 * (M * M);
}

/// Basis U and split point k for the two-block constructions.
inline std::pair<Matrix, Eigen::Index> block_basis(Eigen::Index n, Rng& rng) {
  Matrix U = random_unitary(n, rng);
  const Eigen::Index k = n == 1 ? 1 : 1 + static_cast<Eigen::Index>(rng.bits() % static_cast<std::uint64_t>(n - 1));
  return {std::move(U), k};
}

inline Matrix block_diag_conj(const Matrix& U, const Matrix& B1, const Matrix& B2) {
  const Eigen::Index n = U.rows();
  Matrix D = Matrix::Zero(n, n);
  D.topLeftCorner(B1.rows(), B1.cols()) = B1;
  if (B2.size() > 0) D.bottomRightCorner(B2.rows(), B2.cols()) = B2;
  return U * D * U.adjoint();
}

}  // namespace detail

inline Matrix random_matrix(const GeneratorSpec& spec) {
  detail::validate(spec);
  Rng rng(spec.seed);
  const Eigen::Index n = spec.dim;
  switch (spec.kind) {
    case GeneratorKind::ginibre: return ginibre(n, rng);
    case GeneratorKind::normal: return random_normal(n, rng);
    case GeneratorKind::hermitian: return random_hermitian(n, rng);
    case GeneratorKind::unitary: return random_unitary(n, rng);
    case GeneratorKind::nilpotent_shift: {
      std::vector<double> w = spec.weights;
      if (w.empty()) {
        for (Eigen::Index i = 0; i + 1 < n; ++i) w.push_back(rng.uniform(0.0, 3.0));
      }
      return weighted_shift(n, w);
    }
    default:
      throw InvalidSpec(std::string("generator kind ") + to_string(spec.kind) + " produces a pair");
  }
}

inline MatrixPair random_pair(const GeneratorSpec& spec) {
  detail::validate(spec);
  Rng rng(spec.seed);
  const Eigen::Index n = spec.dim;
  switch (spec.kind) {
    case GeneratorKind::commuting_pair: {
      const Matrix M = ginibre(n, rng);
      Matrix A = detail::random_quadratic(M, rng);
      Matrix B = detail::random_quadratic(M, rng);
      return {std::move(A), std::move(B)};
    }
    case GeneratorKind::normal_poly_pair: {
      const Matrix M = random_normal(n, rng);
      Matrix A = detail::random_quadratic(M, rng);
      Matrix B = detail::random_quadratic(M, rng);
      return {std::move(A), std::move(B)};
    }
    case GeneratorKind::isometry_pair: {
      auto [U, k] = detail::block_basis(n, rng);
      const double p1 = rng.uniform(0.0, 2.0 * kPi);
      const double p2 = rng.uniform(0.0, 2.0 * kPi);
      const Matrix A = detail::block_diag_conj(U, std::polar(1.0, p1) * Matrix::Identity(k, k),
                                               std::polar(1.0, p2) * Matrix::Identity(n - k, n - k));
      const Matrix B = detail::block_diag_conj(U, ginibre(k, rng), ginibre(n - k, rng));
      return {A, B};
    }
    case GeneratorKind::block_scalar_pair:
    case GeneratorKind::block_hermitian_pair: {
      const bool herm = spec.kind == GeneratorKind::block_hermitian_pair;
      auto [U, k] = detail::block_basis(n, rng);
      const cplx a1 = rng.complex_normal();
      const cplx a2 = rng.complex_normal();
      const Matrix A = detail::block_diag_conj(U, a1 * Matrix::Identity(k, k), a2 * Matrix::Identity(n - k, n - k));
      const Matrix B = herm ? detail::block_diag_conj(U, random_hermitian(k, rng), random_hermitian(n - k, rng))
                            : detail::block_diag_conj(U, ginibre(k, rng), ginibre(n - k, rng));
      return {A, B};
    }
    case GeneratorKind::scalar_hermitian_pair: {
      const double c = rng.uniform(0.1, 2.0);
      Matrix A = c * Matrix::Identity(n, n);
      Matrix B = random_hermitian(n, rng);
      return {std::move(A), std::move(B)};
    }
    default:
      throw InvalidSpec(std::string("generator kind ") + to_string(spec.kind) + " produces a single matrix");
  }
}

}  // namespace abnorm

#endif  // ABNORM_RANDOM_HPP
