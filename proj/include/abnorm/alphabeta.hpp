#ifndef ABNORM_ALPHABETA_HPP
#define ABNORM_ALPHABETA_HPP

// The weighted norm
//
//   ‖T‖_{α,β} = sup_{‖x‖=1} √(α|⟨Tx,x⟩|² + β‖Tx‖²),
//
// which interpolates the numerical radius (1,0), the operator norm (0,1) and
// the modified Davis-Wielandt radius (1,1).
//
// The supremum is a nonconvex quartic problem on the complex unit sphere. It
// is maximized by multi-start projected gradient ascent; the value returned
// is always the objective at the returned witness, hence a lower estimate.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abnorm/errors.hpp"
#include "abnorm/linalg.hpp"
#include "abnorm/norms.hpp"
#include "abnorm/random.hpp"

namespace abnorm {

/// Non-negative weights (α, β), not both zero.
struct Weights {
  double alpha = 1.0;
  double beta = 0.0;

  void validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0.0 || beta < 0.0) {
      throw InvalidWeights("weights must be finite and non-negative");
    }
    if (alpha == 0.0 && beta == 0.0) throw InvalidWeights("weights (0, 0) are excluded");
  }
  double sum() const { return alpha + beta; }
  Weights scaled(double c) const { return {c * alpha, c * beta}; }
  bool both_positive() const { return alpha > 0.0 && beta > 0.0; }
};

/// t = α/(α+β); every bound that is homogeneous of degree 0 in (α, β) depends only on t.
struct MixRatio {
  double t = 1.0;

  static MixRatio of(const Weights& w) {
    w.validate();
    return {w.alpha / w.sum()};
  }
  Weights weights() const { return {t, 1.0 - t}; }
};

struct OptimizerOptions {
  int restarts = 32;
  int max_iters = 5000;
  double step_tol = 1e-12;
  double value_tol = 1e-10;
  std::uint64_t seed = 0;
  bool post_check = true;
};

/// α|⟨Tx,x⟩|² + β‖Tx‖² for a unit x.
inline double alpha_beta_objective(const Matrix& T, const Weights& w, const Vector& x) {
  const Vector Tx = T * x;
  return w.alpha * std::norm(x.dot(Tx)) + w.beta * Tx.squaredNorm();
}

/// Euclidean gradient 2(α(φ̄·Tx + φ·T*x) + β·T*Tx) with φ = ⟨Tx,x⟩.
inline Vector alpha_beta_gradient(const Matrix& T, const Weights& w, const Vector& x) {
  const Vector Tx = T * x;
  const cplx phi = x.dot(Tx);
  return 2.0 * (T.adjoint() * (w.alpha * phi * x + w.beta * Tx) + w.alpha * std::conj(phi) * Tx);
}

namespace detail {

struct AscentResult {
  double value = 0.0;
  Vector x;
  int iterations = 0;
};

/// Projected gradient ascent on the unit sphere with Armijo backtracking.
class SphereAscent {
 public:
  SphereAscent(const Matrix& T, const Weights& w, const OptimizerOptions& opts)
      : T_(T), Tadj_(T.adjoint()), w_(w), opts_(opts), n_(T.rows()) {
    Tx_.resize(n_);
    grad_.resize(n_);
    trial_.resize(n_);
    trialTx_.resize(n_);
    const double scale = w.sum() * T.squaredNorm();
    step0_ = scale > 0.0 ? 0.5 / scale : 1.0;
  }

  double evaluate(const Vector& x, Vector& Tx) const {
    Tx.noalias() = T_ * x;
    return w_.alpha * std::norm(x.dot(Tx)) + w_.beta * Tx.squaredNorm();
  }

  AscentResult run(Vector x) {
    x.normalize();
    double f = evaluate(x, Tx_);
    double step = step0_;
    const double gtol_factor = std::sqrt(opts_.value_tol) * 1e-3;
    int it = 0;
    for (; it < opts_.max_iters; ++it) {
      const cplx phi = x.dot(Tx_);
      grad_.noalias() = Tadj_ * (w_.alpha * phi * x + w_.beta * Tx_);
      grad_ += w_.alpha * std::conj(phi) * Tx_;
      grad_ *= 2.0;
      grad_ -= x.dot(grad_).real() * x;  // tangent projection
      const double gnorm2 = grad_.squaredNorm();
      if (std::sqrt(gnorm2) <= gtol_factor * (1.0 + f)) break;

      bool accepted = false;
      while (step * std::sqrt(gnorm2) > opts_.step_tol) {
        trial_ = x + step * grad_;
        trial_.normalize();
        const double ft = evaluate(trial_, trialTx_);
        if (ft >= f + 1e-4 * step * gnorm2) {
          x.swap(trial_);
          Tx_.swap(trialTx_);
          f = ft;
          accepted = true;
          step *= 2.0;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }
    return {f, std::move(x), it};
  }

 private:
  const Matrix& T_;
  Matrix Tadj_;
  Weights w_;
  OptimizerOptions opts_;
  Eigen::Index n_;
  double step0_;
  Vector Tx_, grad_, trial_, trialTx_;
};

}  // namespace detail

/// ‖T‖_{α,β} from precomputed operator-norm and numerical-radius certificates,
/// whose witnesses seed the first two restarts.
inline NormCertificate alpha_beta_norm(const Matrix& T, const Weights& w, const OptimizerOptions& opts,
                                       const NormCertificate& norm_cert, const NormCertificate& radius_cert) {
  require_square(T);
  w.validate();
  if (opts.restarts < 1 || opts.max_iters < 1) throw InvalidParams("optimizer needs restarts >= 1 and max_iters >= 1");
  const Eigen::Index n = T.rows();

  if (T.isZero(0.0)) return {0.0, Vector::Unit(n, 0), Method::sphere_ascent, 0, opts.value_tol};

  detail::SphereAscent ascent(T, w, opts);
  detail::AscentResult best;
  best.value = -1.0;
  int total_iters = 0;
  for (int r = 0; r < opts.restarts; ++r) {
    Vector start;
    if (r == 0) {
      start = norm_cert.witness;
    } else if (r == 1) {
      start = radius_cert.witness;
    } else {
      Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
      start = random_unit_vector(n, rng);
    }
    detail::AscentResult res = ascent.run(std::move(start));
    total_iters += res.iterations;
    if (res.value > best.value) best = std::move(res);
  }

  const double value = std::sqrt(std::max(0.0, best.value));
  if (opts.post_check) {
    const double wr = radius_cert.value;
    const double nm = norm_cert.value;
    const double lo = std::sqrt(w.sum()) * wr;
    const double hi = std::sqrt(w.alpha * wr * wr + w.beta * nm * nm);
    const double tol = 1e-8 * (1.0 + hi);
    if (value < lo - tol || value > hi + tol) {
      throw PostCheckViolation("(alpha,beta)-norm " + std::to_string(value) + " outside [" + std::to_string(lo) +
                               ", " + std::to_string(hi) + "]");
    }
  }
  return {value, canonical_phase(best.x), Method::sphere_ascent, total_iters, opts.value_tol};
}

inline NormCertificate alpha_beta_norm(const Matrix& T, const Weights& w, const OptimizerOptions& opts = {},
                                       const SweepOptions& sweep = {}) {
  require_square(T);
  w.validate();
  return alpha_beta_norm(T, w, opts, operator_norm(T), numerical_radius(T, sweep));
}

inline NormCertificate modified_davis_wielandt(const Matrix& T, const OptimizerOptions& opts = {}) {
  return alpha_beta_norm(T, Weights{1.0, 1.0}, opts);
}

struct OracleOptions {
  int grid = 2000;             // n = 2: grid × grid points over (s, φ)
  int samples = 1'000'000;     // n = 3: random unit vectors
  int refine_count = 1000;     // n = 3: best samples refined by ascent steps
  int refine_steps = 50;
  std::uint64_t seed = 0x5eed;
};

/// Brute-force ‖T‖_{α,β} for n ∈ {2, 3}, independent of the restart schedule of alpha_beta_norm.
///
/// n = 2: exhaustive grid over x = (cos s, e^{iφ} sin s), s ∈ [0, π/2], φ ∈ [0, 2π).
/// n = 3: seeded random unit vectors; the best `refine_count` are refined by
/// fixed-step gradient steps. The maximum over every evaluated point is returned.
inline double alpha_beta_norm_oracle(const Matrix& T, const Weights& w, const OracleOptions& opts = {}) {
  require_square(T);
  w.validate();
  const Eigen::Index n = T.rows();
  if (n != 2 && n != 3) throw UnsupportedDimension("oracle supports n = 2 or 3, got " + std::to_string(n));

  if (n == 2) {
    if (opts.grid < 100) throw InvalidParams("oracle grid must be >= 100");
    const cplx a = T(0, 0), b = T(0, 1), c = T(1, 0), d = T(1, 1);
    double best = 0.0;
    for (int i = 0; i <= opts.grid; ++i) {
      const double s = 0.5 * kPi * i / opts.grid;
      const double cs = std::cos(s);
      const double sn = std::sin(s);
      for (int j = 0; j < opts.grid; ++j) {
        const cplx x1(cs, 0.0);
        const cplx x2 = std::polar(sn, 2.0 * kPi * j / opts.grid);
        const cplx y1 = a * x1 + b * x2;
        const cplx y2 = c * x1 + d * x2;
        const cplx phi = std::conj(x1) * y1 + std::conj(x2) * y2;
        const double f = w.alpha * std::norm(phi) + w.beta * (std::norm(y1) + std::norm(y2));
        best = std::max(best, f);
      }
    }
    return std::sqrt(best);
  }

  // n == 3
  Rng rng(opts.seed);
  const int keep = std::max(1, std::min(opts.refine_count, opts.samples));
  std::vector<std::pair<double, Vector>> top;
  top.reserve(static_cast<std::size_t>(keep) + 1);
  double best = 0.0;
  auto worst_kept = [&top]() {
    return std::min_element(top.begin(), top.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  };
  double threshold = -1.0;
  for (int k = 0; k < opts.samples; ++k) {
    const Vector x = random_unit_vector(3, rng);
    const double f = alpha_beta_objective(T, w, x);
    best = std::max(best, f);
    if (static_cast<int>(top.size()) < keep) {
      top.emplace_back(f, x);
      if (static_cast<int>(top.size()) == keep) threshold = worst_kept()->first;
    } else if (f > threshold) {
      *worst_kept() = {f, x};
      threshold = worst_kept()->first;
    }
  }
  const double scale = w.sum() * T.squaredNorm();
  const double eta = scale > 0.0 ? 0.25 / scale : 0.0;
  for (auto& [f0, x0] : top) {
    Vector x = x0;
    for (int s = 0; s < opts.refine_steps; ++s) {
      Vector g = alpha_beta_gradient(T, w, x);
      g -= x.dot(g).real() * x;
      x += eta * g;
      x.normalize();
      best = std::max(best, alpha_beta_objective(T, w, x));
    }
  }
  return std::sqrt(best);
}

struct EqualityDiagnostics {
  bool attains_decomposed = false;  // ‖T‖²_{α,β} = α·w(T)² + β·‖T‖²
  bool normaloid = false;           // w(T) = ‖T‖
  bool forces_zero = false;         // ‖T‖_{α,β} = √(α+4β)·w(T)
  double norm_ab = 0.0;
  double radius = 0.0;
  double op_norm = 0.0;
};

/// Equality diagnostics for the decomposed bound and the √(α+4β)·w(T) bound (αβ ≠ 0).
inline EqualityDiagnostics equality_diagnostics(const Matrix& T, const Weights& w, double tol = 1e-8,
                                                const OptimizerOptions& opts = {}) {
  w.validate();
  if (!w.both_positive()) throw InvalidWeights("equality diagnostics need alpha*beta != 0");
  const NormCertificate nc = operator_norm(T);
  const NormCertificate rc = numerical_radius(T);
  const NormCertificate ab = alpha_beta_norm(T, w, opts, nc, rc);

  EqualityDiagnostics d;
  d.norm_ab = ab.value;
  d.radius = rc.value;
  d.op_norm = nc.value;
  const double decomposed = w.alpha * rc.value * rc.value + w.beta * nc.value * nc.value;
  d.attains_decomposed = std::abs(ab.value * ab.value - decomposed) <= tol * (1.0 + decomposed);
  d.normaloid = std::abs(rc.value - nc.value) <= tol * (1.0 + nc.value);
  d.forces_zero = std::abs(ab.value - std::sqrt(w.alpha + 4.0 * w.beta) * rc.value) <= tol * (1.0 + ab.value);
  if (d.forces_zero && nc.value > tol) {
    throw PostCheckViolation("norm meets sqrt(alpha+4beta)*w(T) for a nonzero operator");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Failure of submultiplicativity and of the power inequality
// ---------------------------------------------------------------------------

struct ProductViolation {
  Matrix A;
  Matrix B;
  Weights weights;
  double norm_product = 0.0;   // ‖AB‖
  double product_norms = 0.0;  // ‖A‖·‖B‖
};

/// A = [[0,1],[0,0]], B = [[0,0],[1,0]] with (α,β) = (1,0): w(AB) = 1 > w(A)w(B) = 1/4.
inline ProductViolation algebra_norm_counterexample(const OptimizerOptions& opts = {}) {
  Matrix A = Matrix::Zero(2, 2);
  Matrix B = Matrix::Zero(2, 2);
  A(0, 1) = 1.0;
  B(1, 0) = 1.0;
  const Weights w{1.0, 0.0};
  const double ab = alpha_beta_norm(A * B, w, opts).value;
  const double a = alpha_beta_norm(A, w, opts).value;
  const double b = alpha_beta_norm(B, w, opts).value;
  return {A, B, w, ab, a * b};
}

struct PowerViolation {
  Matrix A;
  Weights weights;
  int power = 0;
  double norm_of_power = 0.0;  // ‖Aⁿ‖
  double power_of_norm = 0.0;  // ‖A‖ⁿ
};

struct CounterexampleSearch {
  int trials = 0;
  std::optional<ProductViolation> product;   // ‖AB‖ > ‖A‖‖B‖
  std::optional<PowerViolation> power_below;  // ‖Aⁿ‖ < ‖A‖ⁿ
  std::optional<PowerViolation> power_above;  // ‖Aⁿ‖ > ‖A‖ⁿ
};

/// Bounded randomized search for the three kinds of violation; a missing entry means "not found".
inline CounterexampleSearch search_counterexamples(int trials, std::uint64_t seed, double margin = 1e-6,
                                                   OptimizerOptions opts = {}) {
  opts.restarts = std::min(opts.restarts, 8);
  CounterexampleSearch out;
  const std::vector<Weights> weight_pool{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.3, 0.2}, {2.0, 3.0}, {0.5, 5.0}};
  for (int k = 0; k < trials; ++k) {
    if (out.product && out.power_below && out.power_above) break;
    ++out.trials;
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    const Weights w = weight_pool[rng.bits() % weight_pool.size()];
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.bits() % 2);
    const bool shift = rng.uniform() < 0.3;
    const Matrix A = shift ? weighted_shift(n, std::vector<double>(static_cast<std::size_t>(n - 1), rng.uniform(0.2, 2.0)))
                           : ginibre(n, rng);
    const Matrix B = ginibre(n, rng);
    opts.seed = derive_seed(seed, static_cast<std::uint64_t>(k) + 0x1000);
    const double na = alpha_beta_norm(A, w, opts).value;

    if (!out.product) {
      const double nb = alpha_beta_norm(B, w, opts).value;
      const double nab = alpha_beta_norm(A * B, w, opts).value;
      if (nab > na * nb + margin) out.product = ProductViolation{A, B, w, nab, na * nb};
    }
    const int p = 2 + static_cast<int>(rng.bits() % 2);
    Matrix Ap = A;
    for (int i = 1; i < p; ++i) Ap = Ap * A;
    const double nap = Ap.isZero(0.0) ? 0.0 : alpha_beta_norm(Ap, w, opts).value;
    const double pn = std::pow(na, p);
    if (!out.power_below && nap < pn - margin) out.power_below = PowerViolation{A, w, p, nap, pn};
    if (!out.power_above && nap > pn + margin) out.power_above = PowerViolation{A, w, p, nap, pn};
  }
  return out;
}

}  // namespace abnorm

#endif  // ABNORM_ALPHABETA_HPP
