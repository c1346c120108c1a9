#ifndef ABNORM_NORMS_HPP
#define ABNORM_NORMS_HPP

// Classical scalar quantities of a square complex matrix: operator norm,
// spectral radius, numerical radius, Crawford number, restricted norms and
// norm-attainment subspaces.
//
// The numerical radius and the Crawford number are both read off the support
// function θ ↦ λ_max(Re(e^{iθ}T)) of the numerical range W(T):
//
//   w(T) = max_θ λ_max(Re(e^{iθ}T)),
//   c(T) = max(0, max_θ λ_min(Re(e^{iθ}T))),
//
// the second one because the distance from 0 to the convex set W(T) is its
// largest positive signed support distance. Both are evaluated on a uniform
// θ grid followed by golden-section refinement of the best cell.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "abnorm/errors.hpp"
#include "abnorm/golden.hpp"
#include "abnorm/linalg.hpp"

namespace abnorm {

enum class Method { eigen, theta_sweep, sphere_ascent, oracle_grid };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::eigen: return "eigen";
    case Method::theta_sweep: return "theta-sweep";
    case Method::sphere_ascent: return "sphere-ascent";
    case Method::oracle_grid: return "oracle-grid";
  }
  return "?";
}

/// An extremal value together with the unit vector that attains it.
struct NormCertificate {
  double value = 0.0;
  Vector witness;
  Method method = Method::eigen;
  int iterations = 0;
  double tol = 0.0;
};

struct SweepOptions {
  int grid_points = 720;
  double refine_tol = 1e-12;
  bool post_check = true;
};

inline Matrix rotated_real_part(const Matrix& T, double theta) {
  const cplx e = std::polar(1.0, theta);
  return 0.5 * (e * T + std::conj(e) * T.adjoint());
}

/// λ_max(Re(e^{iθ}T)), the support function of W(T) in direction e^{-iθ}.
inline double support_function(const Matrix& T, double theta) {
  require_square(T);
  return lambda_max(rotated_real_part(T, theta));
}

inline NormCertificate operator_norm(const Matrix& T) {
  require_square(T);
  Eigen::JacobiSVD<Matrix> svd(T, Eigen::ComputeFullV);
  const double s = svd.singularValues()(0);
  return {s, canonical_phase(svd.matrixV().col(0)), Method::eigen, 0, 1e-12 * (1.0 + s)};
}

inline double spectral_radius(const Matrix& T) {
  require_square(T);
  Eigen::ComplexEigenSolver<Matrix> es(T, false);
  if (es.info() != Eigen::Success) throw ConvergenceFailure("complex eigensolver did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

namespace detail {

struct SweepResult {
  double theta;
  double value;
  int evaluations;
};

/// Maximizes a 2π-periodic f over a uniform grid, then golden-refines one cell either side.
template <typename F>
SweepResult theta_sweep(F&& f, const SweepOptions& opts) {
  if (opts.grid_points < 8) throw InvalidParams("theta sweep needs at least 8 grid points");
  const double h = 2.0 * kPi / opts.grid_points;
  double best_theta = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < opts.grid_points; ++k) {
    const double th = k * h;
    const double v = f(th);
    if (v > best) {
      best = v;
      best_theta = th;
    }
  }
  const LineSearchResult r = golden_section_maximize(f, best_theta - h, best_theta + h, opts.refine_tol);
  if (r.fx > best) return {r.x, r.fx, opts.grid_points + r.iterations + 2};
  return {best_theta, best, opts.grid_points + r.iterations + 2};
}

inline Vector top_eigenvector(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()));
  if (es.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver did not converge");
  return es.eigenvectors().col(H.rows() - 1);
}

inline Vector bottom_eigenvector(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()));
  if (es.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver did not converge");
  return es.eigenvectors().col(0);
}

}  // namespace detail

/// w(T) as a certified lower estimate: value = |⟨Tx,x⟩| at the returned witness.
inline NormCertificate numerical_radius(const Matrix& T, const SweepOptions& opts = {}) {
  require_square(T);
  const Eigen::Index n = T.rows();
  if (T.isZero(0.0)) return {0.0, Vector::Unit(n, 0), Method::theta_sweep, 0, opts.refine_tol};

  const Matrix Tadj = T.adjoint();
  auto support = [&](double th) {
    const cplx e = std::polar(1.0, th);
    return lambda_max(0.5 * (e * T + std::conj(e) * Tadj));
  };
  const detail::SweepResult sw = detail::theta_sweep(support, opts);
  Vector x = detail::top_eigenvector(rotated_real_part(T, sw.theta));
  x.normalize();
  const double value = std::max(std::abs(inner(T * x, x)), 0.0);

  if (opts.post_check) {
    const double norm = spectral_norm(T);
    const double slack = 1e-9 * (1.0 + norm);
    const double r = spectral_radius(T);
    if (r > value + slack || 0.5 * norm > value + slack || value > norm + slack) {
      throw PostCheckViolation("numerical radius " + std::to_string(value) + " outside [max(r, |T|/2), |T|] = [" +
                               std::to_string(std::max(r, 0.5 * norm)) + ", " + std::to_string(norm) + "]");
    }
  }
  return {value, canonical_phase(x), Method::theta_sweep, sw.evaluations, opts.refine_tol};
}

/// c(T) = distance from 0 to W(T). The witness is best-effort when c(T) = 0.
inline NormCertificate crawford_number(const Matrix& T, const SweepOptions& opts = {}) {
  require_square(T);
  const Eigen::Index n = T.rows();
  const Matrix Tadj = T.adjoint();
  auto lower_support = [&](double th) {
    const cplx e = std::polar(1.0, th);
    return lambda_min(0.5 * (e * T + std::conj(e) * Tadj));
  };
  const detail::SweepResult sw = detail::theta_sweep(lower_support, opts);
  if (sw.value > 0.0) {
    Vector x = detail::bottom_eigenvector(rotated_real_part(T, sw.theta));
    x.normalize();
    return {sw.value, canonical_phase(x), Method::theta_sweep, sw.evaluations, opts.refine_tol};
  }
  // 0 ∈ W(T): report the boundary point of smallest modulus on a coarse grid.
  Vector best = Vector::Unit(n, 0);
  double best_mod = std::abs(T(0, 0));
  const int samples = std::max(8, opts.grid_points / 8);
  for (int k = 0; k < samples; ++k) {
    const Matrix H = rotated_real_part(T, 2.0 * kPi * k / samples);
    for (const Vector& x : {detail::bottom_eigenvector(H), detail::top_eigenvector(H)}) {
      const double m = std::abs(inner(T * x, x));
      if (m < best_mod) {
        best_mod = m;
        best = x;
      }
    }
  }
  return {0.0, canonical_phase(best.normalized()), Method::theta_sweep, sw.evaluations + 2 * samples,
          opts.refine_tol};
}

/// sup{‖Bx‖ : x ∈ L, ‖x‖ = 1}.
inline double restricted_norm(const Matrix& B, const Subspace& L) {
  if (L.is_trivial()) throw EmptySubspace("restricted norm over the trivial subspace");
  if (L.ambient_dim != B.cols() || L.basis.rows() != B.cols()) {
    throw DimensionMismatch("subspace ambient dimension does not match the operator");
  }
  return spectral_norm(B * L.basis);
}

/// Span of right-singular vectors with σ ≥ σ_max − tol·(1 + σ_max), i.e. span M_T.
inline Subspace norm_attainment_subspace(const Matrix& T, double tol = 1e-9) {
  require_square(T);
  const Eigen::Index n = T.rows();
  Eigen::JacobiSVD<Matrix> svd(T, Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  const double cut = s(0) - tol * (1.0 + s(0));
  Eigen::Index k = 0;
  while (k < n && s(k) >= cut) ++k;
  return {n, svd.matrixV().leftCols(k)};
}

inline bool is_normaloid(const Matrix& T, double tol = 1e-9, const SweepOptions& opts = {}) {
  const double norm = operator_norm(T).value;
  const double w = numerical_radius(T, opts).value;
  return std::abs(w - norm) <= tol * (1.0 + norm);
}

}  // namespace abnorm

#endif  // ABNORM_NORMS_HPP
