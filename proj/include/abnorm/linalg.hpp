#ifndef ABNORM_LINALG_HPP
#define ABNORM_LINALG_HPP

// Dense complex linear algebra on small square matrices: Hermitian
// eigensystems, polar absolute value, functional calculus on PSD matrices
// and orthonormal-basis subspace algebra.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "abnorm/errors.hpp"

namespace abnorm {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Throws unless M is square, non-empty and finite.
inline void require_square(const Matrix& M, const char* what = "matrix") {
  if (M.rows() == 0 || M.cols() == 0) {
    throw DimensionError(std::string(what) + " must have dimension n >= 1");
  }
  if (M.rows() != M.cols()) {
    throw DimensionError(std::string(what) + " must be square, got " + std::to_string(M.rows()) + "x" +
                         std::to_string(M.cols()));
  }
  if (!M.allFinite()) {
    throw DomainError(std::string(what) + " has non-finite entries");
  }
}

inline Matrix adjoint(const Matrix& M) { return M.adjoint(); }

/// Largest singular value.
inline double spectral_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

/// ⟨x, y⟩ linear in the first slot, matching ⟨Tx, x⟩ = x^* T x.
inline cplx inner(const Vector& x, const Vector& y) { return y.dot(x); }

inline Matrix real_part(const Matrix& T) { return 0.5 * (T + T.adjoint()); }

inline Matrix imag_part(const Matrix& T) { return (T - T.adjoint()) / cplx(0.0, 2.0); }

inline double hermitian_defect(const Matrix& H) { return (H - H.adjoint()).norm(); }

inline bool is_hermitian(const Matrix& H, double tol = 1e-10) {
  return hermitian_defect(H) <= tol * (1.0 + H.norm());
}

struct HermitianEigensystem {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns orthonormal

  Eigen::Index size() const { return eigenvalues.size(); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
  double min() const { return eigenvalues(0); }
  Matrix reconstruct() const { return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint(); }
};

namespace detail {

inline Matrix checked_symmetrize(const Matrix& H, double tol) {
  require_square(H);
  const double defect = hermitian_defect(H);
  if (defect > tol * (1.0 + H.norm())) {
    throw NonHermitianInput("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  return 0.5 * (H + H.adjoint());
}

}  // namespace detail

inline HermitianEigensystem hermitian_eigensystem(const Matrix& H, double tol = 1e-10) {
  const Matrix S = detail::checked_symmetrize(H, tol);
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("Hermitian eigensolver did not converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

/// Eigenvalues only (ascending); skips the Hermitian pre-check, input is symmetrized.
inline RealVector hermitian_eigenvalues_unchecked(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("Hermitian eigensolver did not converge");
  }
  return es.eigenvalues();
}

inline double lambda_max(const Matrix& H) {
  const RealVector ev = hermitian_eigenvalues_unchecked(H);
  return ev(ev.size() - 1);
}

inline double lambda_min(const Matrix& H) { return hermitian_eigenvalues_unchecked(H)(0); }

// ---------------------------------------------------------------------------
// Scalar functions for the PSD functional calculus
// ---------------------------------------------------------------------------

/// t^exponent on [0, ∞), exponent > 0.
struct PowerFn {
  double exponent;
};
struct SqrtFn {};
struct IdentityFn {};
/// Piecewise-linear interpolation of a monotone table; undefined outside [xs.front(), xs.back()].
struct TableFn {
  std::vector<double> xs;
  std::vector<double> ys;
};

using ScalarFunctionSpec = std::variant<PowerFn, SqrtFn, IdentityFn, TableFn>;

inline double apply_scalar(const ScalarFunctionSpec& f, double t) {
  return std::visit(
      [t](const auto& fn) -> double {
        using F = std::decay_t<decltype(fn)>;
        if constexpr (std::is_same_v<F, PowerFn>) {
          if (!(fn.exponent > 0.0)) throw DomainError("power exponent must be positive");
          return t == 0.0 ? 0.0 : std::pow(t, fn.exponent);
        } else if constexpr (std::is_same_v<F, SqrtFn>) {
          return std::sqrt(t);
        } else if constexpr (std::is_same_v<F, IdentityFn>) {
          return t;
        } else {
          if (fn.xs.size() < 2 || fn.xs.size() != fn.ys.size()) throw DomainError("malformed function table");
          if (t < fn.xs.front() || t > fn.xs.back()) {
            throw DomainError("table function undefined at " + std::to_string(t));
          }
          auto it = std::upper_bound(fn.xs.begin(), fn.xs.end(), t);
          if (it == fn.xs.end()) return fn.ys.back();
          const auto hi = static_cast<std::size_t>(it - fn.xs.begin());
          const auto lo = hi - 1;
          const double s = (t - fn.xs[lo]) / (fn.xs[hi] - fn.xs[lo]);
          return fn.ys[lo] + s * (fn.ys[hi] - fn.ys[lo]);
        }
      },
      f);
}

/// The pair f(t) = t^γ, g(t) = t^(1-γ), for which f·g is the identity.
struct PowerPair {
  double gamma;

  PowerFn f() const { return {gamma}; }
  PowerFn g() const { return {1.0 - gamma}; }
};

/// U·diag(f(λ))·U*, with negative eigenvalues clamped to zero first.
inline Matrix psd_function(const Matrix& P, const ScalarFunctionSpec& f, double tol = 1e-10) {
  const HermitianEigensystem es = hermitian_eigensystem(P, tol);
  RealVector mapped(es.size());
  for (Eigen::Index i = 0; i < es.size(); ++i) {
    mapped(i) = apply_scalar(f, std::max(0.0, es.eigenvalues(i)));
  }
  return es.eigenvectors * mapped.cast<cplx>().asDiagonal() * es.eigenvectors.adjoint();
}

inline Matrix psd_power(const Matrix& P, double exponent) {
  if (exponent == 1.0) return 0.5 * (P + P.adjoint());
  return psd_function(P, PowerFn{exponent});
}

/// |T| = (T*T)^{1/2}.
inline Matrix polar_abs(const Matrix& T) {
  require_square(T);
  return psd_function(T.adjoint() * T, SqrtFn{});
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

struct Subspace {
  Eigen::Index ambient_dim = 0;
  Matrix basis;  // ambient_dim x k, orthonormal columns

  Subspace() = default;
  Subspace(Eigen::Index n, Matrix b) : ambient_dim(n), basis(std::move(b)) {}

  static Subspace trivial(Eigen::Index n) { return {n, Matrix(n, 0)}; }
  static Subspace full(Eigen::Index n) { return {n, Matrix::Identity(n, n)}; }

  Eigen::Index dim() const { return basis.cols(); }
  bool is_trivial() const { return basis.cols() == 0; }
  Matrix projector() const {
    if (is_trivial()) return Matrix::Zero(ambient_dim, ambient_dim);
    return basis * basis.adjoint();
  }
  bool contains(const Vector& v, double tol = 1e-8) const {
    const Vector r = v - projector() * v;
    return r.norm() <= tol * (1.0 + v.norm());
  }
};

/// Span of eigenvectors with λ ≥ λ_max − tol·(1 + |λ_max|).
inline Subspace top_eigenspace(const Matrix& H, double tol = 1e-9) {
  const HermitianEigensystem es = hermitian_eigensystem(H);
  const Eigen::Index n = es.size();
  const double top = es.max();
  const double cut = top - tol * (1.0 + std::abs(top));
  Eigen::Index k = 0;
  while (k < n && es.eigenvalues(n - 1 - k) >= cut) ++k;
  // columns ordered from the top eigenvalue down
  return {n, es.eigenvectors.rightCols(k).rowwise().reverse()};
}

/// Right-singular vectors with σ ≤ tol·(1 + σ_max).
inline Subspace kernel(const Matrix& M, double tol = 1e-9) {
  const Eigen::Index n = M.cols();
  if (n == 0) return Subspace::trivial(0);
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const double cut = tol * (1.0 + (s.size() > 0 ? s(0) : 0.0));
  // singular values are descending; rows(M) < n leaves implicit zeros
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return {n, svd.matrixV().rightCols(n - rank)};
}

/// Null space of the stacked complement projectors (I − P₁; I − P₂; …).
inline Subspace intersect_subspaces(const std::vector<Subspace>& spaces, double threshold = 1e-8) {
  if (spaces.empty()) throw DimensionMismatch("cannot intersect an empty list of subspaces");
  const Eigen::Index n = spaces.front().ambient_dim;
  for (const auto& s : spaces) {
    if (s.ambient_dim != n || s.basis.rows() != n) throw DimensionMismatch("subspaces live in different spaces");
  }
  Matrix stacked(n * static_cast<Eigen::Index>(spaces.size()), n);
  const Matrix I = Matrix::Identity(n, n);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = I - spaces[i].projector();
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > threshold) ++rank;
  return {n, svd.matrixV().rightCols(n - rank)};
}

/// Cosines of the principal angles between two subspaces, descending.
inline RealVector principal_cosines(const Subspace& a, const Subspace& b) {
  if (a.is_trivial() || b.is_trivial()) return RealVector(0);
  Eigen::JacobiSVD<Matrix> svd(a.basis.adjoint() * b.basis);
  return svd.singularValues();
}

/// True when both subspaces have the same dimension and all principal angles are ≤ max_angle.
inline bool same_span(const Subspace& a, const Subspace& b, double max_angle = 1e-7) {
  if (a.dim() != b.dim()) return false;
  if (a.is_trivial()) return true;
  const RealVector c = principal_cosines(a, b);
  const double smallest = std::clamp(c(c.size() - 1), -1.0, 1.0);
  return std::acos(smallest) <= max_angle || (1.0 - smallest) <= 0.5 * max_angle * max_angle;
}

/// Makes the first non-negligible coordinate real and non-negative.
inline Vector canonical_phase(Vector v) {
  const double scale = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > 1e-12 * scale && m > 0.0) {
      v *= std::conj(v(i)) / m;
      v(i) = cplx(m, 0.0);
      break;
    }
  }
  return v;
}

}  // namespace abnorm

#endif  // ABNORM_LINALG_HPP
