#ifndef ABNORM_BOUNDS_HPP
#define ABNORM_BOUNDS_HPP

// Closed-form bounds on ‖T‖_{α,β} and on the numerical radius, product
// bounds, their infimum over the weights, and the sharpness/equality
// conditions attached to them.
//
// Conventions:
//  - A bound "value" is a bound on ‖·‖_{α,β} unless the report's quantity says
//    otherwise ("w" or "w^2").
//  - Every bound on w(T) obtained by dividing by √(α+β) is homogeneous of
//    degree 0 in (α, β), so an infimum over (α, β) is an infimum over
//    t = α/(α+β) ∈ [0, 1]. There the squared bound is λ_max of an affine
//    pencil in t (plus an affine term), hence convex, and golden-section
//    search is exact up to its tolerance.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "abnorm/alphabeta.hpp"
#include "abnorm/errors.hpp"
#include "abnorm/golden.hpp"
#include "abnorm/linalg.hpp"
#include "abnorm/norms.hpp"
#include "abnorm/profile.hpp"

namespace abnorm {

inline constexpr double kOptimizerSlack = 1e-6;
inline constexpr double kBracketSlack = 1e-7;
inline constexpr double kClosedFormSlack = 1e-9;
inline constexpr double kHypothesisTol = 1e-8;

/// Exponents n, m (conjugate), p and the exponent γ of f(t)=t^γ, g(t)=t^{1−γ}.
struct SchattenParams {
  double n_exp = 2.0;
  double m_exp = 2.0;
  double p = 1.0;
  double gamma = 0.5;

  void validate() const {
    if (!(n_exp > 1.0) || !(m_exp > 1.0)) throw InvalidParams("n and m must exceed 1");
    if (std::abs(1.0 / n_exp + 1.0 / m_exp - 1.0) > 1e-12) throw InvalidParams("1/n + 1/m must equal 1");
    if (!(p >= 1.0)) throw InvalidParams("p must be >= 1");
    if (p * n_exp < 2.0 || p * m_exp < 2.0) throw InvalidParams("need p*n >= 2 and p*m >= 2");
    if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidParams("gamma must lie in (0, 1)");
  }
};

struct BoundReport {
  std::string name;
  double value = 0.0;
  std::string quantity = "norm_ab";  // "norm_ab", "w", "w^2", "norm_ab(AB)"
  std::optional<Weights> weights;
  std::optional<MixRatio> mix;
  std::optional<SchattenParams> schatten;
  std::optional<double> compared_to;
  std::optional<bool> strict_improvement;

  /// Records an upper-bound comparison: improvement means strictly smaller.
  BoundReport& compare_upper(double baseline) {
    compared_to = baseline;
    strict_improvement = value < baseline - 1e-12;
    return *this;
  }
  /// Records a lower-bound comparison: improvement means strictly larger.
  BoundReport& compare_lower(double baseline) {
    compared_to = baseline;
    strict_improvement = value > baseline + 1e-12;
    return *this;
  }
};

namespace detail {

inline void post_check(OperatorProfile& P, bool ok, const std::string& what) {
  if (P.options().post_checks && !ok) throw PostCheckViolation(what);
}

inline double relative_residual(const Matrix& R, double scale) { return R.norm() / (1.0 + scale); }

inline void require_commute(const Matrix& X, const Matrix& Y, const std::string& label) {
  const double res = relative_residual(X * Y - Y * X, X.norm() * Y.norm());
  if (res > kHypothesisTol) throw HypothesisViolated(label, res);
}

inline void require_unit_sum(const Weights& w) {
  w.validate();
  if (std::abs(w.sum() - 1.0) > 1e-12) throw InvalidWeights("this bound needs alpha + beta = 1");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Two-sided equivalence with w(·) and ‖·‖, and the lower bound from c(T)
// ---------------------------------------------------------------------------

/// √(α+β)w ≤ ‖T‖_{α,β} ≤ √(α+4β)w and max{√(α+β)/2, √β}‖T‖ ≤ ‖T‖_{α,β} ≤ √(α+β)‖T‖.
inline std::vector<BoundReport> equivalence_bounds(OperatorProfile& P, const Weights& w) {
  w.validate();
  const double wr = P.radius();
  const double nm = P.norm();
  std::vector<BoundReport> out;
  out.push_back({"equiv-lower-w", std::sqrt(w.sum()) * wr, "norm_ab", w});
  out.push_back({"equiv-upper-w", std::sqrt(w.alpha + 4.0 * w.beta) * wr, "norm_ab", w});
  out.push_back({"equiv-lower-op", std::max(0.5 * std::sqrt(w.sum()), std::sqrt(w.beta)) * nm, "norm_ab", w});
  out.push_back({"equiv-upper-op", std::sqrt(w.sum()) * nm, "norm_ab", w});
  return out;
}

/// Square root of max{αw² + βc(T*T), αc² + β‖T‖², 2√(αβ)w√c(T*T), 2√(αβ)c‖T‖}.
inline BoundReport lower_bound_crawford(OperatorProfile& P, const Weights& w) {
  w.validate();
  const double wr = P.radius();
  const double c = P.crawford();
  const double cg = P.gram_min();
  const double nm = P.norm();
  const double cross = 2.0 * std::sqrt(w.alpha * w.beta);
  const double sq = std::max({w.alpha * wr * wr + w.beta * cg, w.alpha * c * c + w.beta * nm * nm,
                              cross * wr * std::sqrt(cg), cross * c * nm});
  BoundReport r{"crawford-lower", std::sqrt(sq), "norm_ab", w};
  if (P.options().post_checks) {
    const double ab = P.alpha_beta_norm(w);
    detail::post_check(P, r.value <= ab + kBracketSlack * (1.0 + ab), "crawford lower bound exceeds the norm");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Upper bounds on ‖T‖_{α,β}
// ---------------------------------------------------------------------------

/// ‖(α/4)(f²(|T|) + g²(|T*|))² + βT*T‖^{1/2} with f = t^γ, g = t^{1−γ}.
inline BoundReport bound_abs_sum(OperatorProfile& P, const Weights& w, double gamma = 0.5) {
  w.validate();
  if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidParams("gamma must lie in (0, 1)");
  // f²(|T|) = (T*T)^γ and g²(|T*|) = (TT*)^{1−γ}
  const Matrix F = gamma == 0.5 ? P.abs() : psd_power(P.gram(), gamma);
  const Matrix G = gamma == 0.5 ? P.abs_adjoint() : psd_power(P.cogram(), 1.0 - gamma);
  const Matrix sum = F + G;
  const Matrix M = (w.alpha / 4.0) * (sum * sum) + w.beta * P.gram();
  BoundReport r{"abs-sum", std::sqrt(std::max(0.0, lambda_max(M))), "norm_ab", w};
  r.schatten = SchattenParams{2.0, 2.0, 1.0, gamma};
  if (P.options().post_checks) {
    const double ab = P.alpha_beta_norm(w);
    detail::post_check(P, ab <= r.value + kOptimizerSlack, "abs-sum: norm exceeds bound");
    detail::post_check(P, P.radius() <= r.value / std::sqrt(w.sum()) + kClosedFormSlack, "abs-sum: w exceeds bound");
  }
  return r;
}

struct GramSumBounds {
  BoundReport lower_half;   // ½‖(α/4)S + βT*T‖, square-rooted
  BoundReport lower_third;  // ⅓‖(α/2)S + βT*T‖, square-rooted
  BoundReport upper;        // ‖(α/2)S + βT*T‖, square-rooted
};

inline GramSumBounds bounds_gram_sum(OperatorProfile& P, const Weights& w) {
  w.validate();
  const Matrix& S = P.gram_sum();
  const Matrix& G = P.gram();
  const double quarter = lambda_max((w.alpha / 4.0) * S + w.beta * G);
  const double half = lambda_max((w.alpha / 2.0) * S + w.beta * G);
  GramSumBounds b{{"gram-sum-lower-half", std::sqrt(std::max(0.0, quarter / 2.0)), "norm_ab", w},
               {"gram-sum-lower-third", std::sqrt(std::max(0.0, half / 3.0)), "norm_ab", w},
               {"gram-sum-upper", std::sqrt(std::max(0.0, half)), "norm_ab", w}};
  if (P.options().post_checks) {
    const double ab = P.alpha_beta_norm(w);
    const double lo = std::max(b.lower_half.value, b.lower_third.value);
    detail::post_check(P, lo <= ab + kBracketSlack * (1.0 + ab), "gram-sum: lower bound exceeds the norm");
    detail::post_check(P, ab <= b.upper.value + kBracketSlack * (1.0 + ab), "gram-sum: norm exceeds upper bound");
  }
  return b;
}

/// ((α/2)w(T²) + ‖(α/4)S + βT*T‖)^{1/2}.
inline BoundReport bound_square_radius(OperatorProfile& P, const Weights& w) {
  w.validate();
  const double sq = 0.5 * w.alpha * P.radius_of_square() +
                    std::max(0.0, lambda_max((w.alpha / 4.0) * P.gram_sum() + w.beta * P.gram()));
  BoundReport r{"square-radius", std::sqrt(sq), "norm_ab", w};
  if (P.options().post_checks) {
    detail::post_check(P, P.alpha_beta_norm(w) <= r.value + kOptimizerSlack, "square-radius: norm exceeds bound");
  }
  return r;
}

/// ‖α(|Re T| + |Im T|)² + βT*T‖^{1/2}.
inline BoundReport bound_re_im(OperatorProfile& P, const Weights& w) {
  w.validate();
  const Matrix sum = psd_function(P.re() * P.re(), SqrtFn{}) + psd_function(P.im() * P.im(), SqrtFn{});
  const double sq = std::max(0.0, lambda_max(w.alpha * (sum * sum) + w.beta * P.gram()));
  BoundReport r{"re-im", std::sqrt(sq), "norm_ab", w};
  if (P.options().post_checks) {
    detail::post_check(P, P.alpha_beta_norm(w) <= r.value + kOptimizerSlack, "re-im: norm exceeds bound");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Infimum over the weights
// ---------------------------------------------------------------------------

enum class MixKind { abs_sum, gram_sum, square_radius, re_im };

inline const char* to_string(MixKind k) {
  switch (k) {
    case MixKind::abs_sum: return "abs-sum";
    case MixKind::gram_sum: return "gram-sum";
    case MixKind::square_radius: return "square-radius";
    case MixKind::re_im: return "re-im";
  }
  return "?";
}

inline MixKind parse_mix_kind(const std::string& s) {
  if (s == "abs-sum") return MixKind::abs_sum;
  if (s == "gram-sum") return MixKind::gram_sum;
  if (s == "square-radius") return MixKind::square_radius;
  if (s == "re-im") return MixKind::re_im;
  throw InvalidParams("unknown infimum kind '" + s + "' (expected abs-sum|gram-sum|square-radius|re-im)");
}

/// The pencil h(t) = λ_max(t·A + (1−t)·T*T) + t·shift for one kind.
class MixPencil {
 public:
  MixPencil(OperatorProfile& P, MixKind kind) : B_(P.gram()) {
    switch (kind) {
      case MixKind::abs_sum: {
        const Matrix s = P.abs() + P.abs_adjoint();
        A_ = 0.25 * (s * s);
        break;
      }
      case MixKind::gram_sum:
        A_ = 0.5 * P.gram_sum();
        break;
      case MixKind::square_radius:
        A_ = 0.25 * P.gram_sum();
        shift_ = 0.5 * P.radius_of_square();
        break;
      case MixKind::re_im: {
        const Matrix s = psd_function(P.re() * P.re(), SqrtFn{}) + psd_function(P.im() * P.im(), SqrtFn{});
        A_ = s * s;
        break;
      }
    }
  }

  double operator()(double t) const { return lambda_max(t * A_ + (1.0 - t) * B_) + t * shift_; }

 private:
  Matrix A_;
  Matrix B_;
  double shift_ = 0.0;
};

/// h(t) for one kind, as used by infimum_mix and the sweep output.
inline double mix_objective(OperatorProfile& P, MixKind kind, double t) { return MixPencil(P, kind)(t); }

/// √(min_{t∈[0,1]} h(t)), a bound on w(T), compared against its t = 1 value.
inline BoundReport infimum_mix(OperatorProfile& P, MixKind kind, double tol = 1e-10) {
  const MixPencil h(P, kind);
  LineSearchResult best = golden_section_minimize(h, 0.0, 1.0, tol);
  const double h0 = h(0.0);
  const double h1 = h(1.0);
  if (h0 <= best.fx) best = {0.0, h0, best.iterations};
  if (h1 <= best.fx) best = {1.0, h1, best.iterations};

  BoundReport r{std::string("inf-") + to_string(kind), std::sqrt(std::max(0.0, best.fx)), "w"};
  r.mix = MixRatio{best.x};
  r.compare_upper(std::sqrt(std::max(0.0, h1)));
  if (P.options().post_checks) {
    detail::post_check(P, P.radius() <= r.value + kBracketSlack, std::string("inf-") + to_string(kind) + ": w exceeds bound");
    detail::post_check(P, r.value <= *r.compared_to + kClosedFormSlack,
                       std::string("inf-") + to_string(kind) + ": infimum exceeds its t=1 baseline");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Classical baselines
// ---------------------------------------------------------------------------

/// ½‖|T|+|T*|‖, ½‖T‖+½‖T²‖^{1/2}, ¼‖S‖, ½‖S‖, ½w(T²)+¼‖S‖ and ‖Re T‖²+‖Im T‖².
inline std::vector<BoundReport> baseline_bounds(OperatorProfile& P) {
  const double abs_sum = spectral_norm(P.abs() + P.abs_adjoint());
  const double s = lambda_max(P.gram_sum());
  const double re = spectral_norm(P.re());
  const double im = spectral_norm(P.im());
  return {{"half-abs-sum", 0.5 * abs_sum, "w"},
          {"norm-power-mean", 0.5 * P.norm() + 0.5 * std::sqrt(spectral_norm(P.square())), "w"},
          {"quarter-gram-sum", 0.25 * s, "w^2"},
          {"half-gram-sum", 0.5 * s, "w^2"},
          {"square-radius-gram-sum", 0.5 * P.radius_of_square() + 0.25 * s, "w^2"},
          {"re-im-squares", re * re + im * im, "w^2"}};
}

inline const BoundReport& find_report(const std::vector<BoundReport>& reports, const std::string& name) {
  for (const auto& r : reports) {
    if (r.name == name) return r;
  }
  throw InvalidParams("no bound report named " + name);
}

// ---------------------------------------------------------------------------
// Refined lower bound through the top eigenspace of S = T*T + TT*
// ---------------------------------------------------------------------------

struct RefinedLowerBound {
  double value = 0.0;      // max(q², ¼‖S‖), a lower bound on w(T)²
  double q = 0.0;          // sup of |⟨Tx,x⟩| over unit x ∈ H₀
  double q_squared = 0.0;
  double quarter_s = 0.0;  // ¼‖S‖
  Subspace h0;
  bool invariant_under_T = false;
};

inline RefinedLowerBound refined_lower_bound(OperatorProfile& P, double tol = 1e-9) {
  RefinedLowerBound out;
  const Eigen::Index n = P.dim();
  if (P.op().isZero(0.0)) {
    out.h0 = Subspace::full(n);
    out.invariant_under_T = true;
    return out;
  }
  const Matrix& T = P.op();
  out.h0 = top_eigenspace(P.gram_sum(), tol);
  const Matrix& V = out.h0.basis;
  const Matrix compressed = V.adjoint() * T * V;  // ⟨TVy, Vy⟩ = ⟨V*TVy, y⟩
  SweepOptions sw = P.options().sweep;
  sw.post_check = false;
  out.q = numerical_radius(compressed, sw).value;
  out.q_squared = out.q * out.q;
  out.quarter_s = 0.25 * lambda_max(P.gram_sum());
  // the (α,β)-combination is affine in t = α/(α+β), so its sup is an endpoint
  out.value = std::max(out.q_squared, out.quarter_s);
  const Matrix leak = (Matrix::Identity(n, n) - V * V.adjoint()) * T * V;
  out.invariant_under_T = leak.norm() <= tol * (1.0 + P.norm());
  if (P.options().post_checks) {
    const double w2 = P.radius() * P.radius();
    detail::post_check(P, out.value <= w2 + kBracketSlack, "refined lower bound exceeds w(T)^2");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strict-improvement and equality conditions
// ---------------------------------------------------------------------------

enum class SharpVariant { abs_sum, gram_sum, square_radius };

inline const char* to_string(SharpVariant v) {
  switch (v) {
    case SharpVariant::gram_sum: return "gram-sum";
    case SharpVariant::abs_sum: return "abs-sum";
    case SharpVariant::square_radius: return "square-radius";
  }
  return "?";
}

struct SharpnessCondition {
  bool applicable = false;  // ‖B‖_L < ‖A‖
  double norm_B_L = 0.0;
  double norm_A = 0.0;
  Subspace L;
  double bound = 0.0;     // the weighted bound on w(T)²
  double baseline = 0.0;  // the classical bound on w(T)²
  bool strictly_below = false;
};

/// L = span M_{αA+βB}; when ‖B‖_L < ‖A‖ the weighted bound is strictly below the baseline.
inline SharpnessCondition condition_sharper(OperatorProfile& P, const Weights& w, SharpVariant variant,
                                            double tol = 1e-9) {
  w.validate();
  if (!w.both_positive()) throw InvalidWeights("sharpness conditions need alpha*beta != 0");
  Matrix A;
  double shift = 0.0;
  switch (variant) {
    case SharpVariant::abs_sum: {
      const Matrix s = P.abs() + P.abs_adjoint();
      A = 0.25 * (s * s);
      break;
    }
    case SharpVariant::gram_sum:
      A = 0.5 * P.gram_sum();
      break;
    case SharpVariant::square_radius:
      A = 0.25 * P.gram_sum();
      shift = 0.5 * P.radius_of_square();
      break;
  }
  const Matrix& B = P.gram();
  const Matrix pencil = w.alpha * A + w.beta * B;

  SharpnessCondition c;
  c.L = norm_attainment_subspace(pencil, tol);
  c.norm_B_L = restricted_norm(B, c.L);
  c.norm_A = spectral_norm(A);
  c.applicable = c.norm_B_L < c.norm_A - tol;
  c.bound = (w.alpha * shift + spectral_norm(pencil)) / w.sum();
  c.baseline = shift + c.norm_A;
  c.strictly_below = c.bound < c.baseline - 1e-12;
  if (c.applicable) {
    // quantitative form: bound ≤ baseline − β(‖A‖ − ‖B‖_L)/(α+β)
    const double gap = w.beta * (c.norm_A - c.norm_B_L) / w.sum();
    detail::post_check(P, c.bound <= c.baseline - gap + kClosedFormSlack * (1.0 + c.baseline),
                       std::string(to_string(variant)) + ": condition holds but bound is not below baseline");
  }
  return c;
}

enum class EqualityVariant { gram_sum, abs_sum };

struct EqualityCondition {
  bool holds = false;  // M_A ∩ M_B ∩ ker C ≠ {0}
  std::optional<Vector> witness;
  Subspace intersection;
  double chain_gap = 0.0;  // max deviation across the equality chain on a weight grid
};

inline EqualityCondition condition_equality(OperatorProfile& P, EqualityVariant variant, double tol = 1e-9) {
  Matrix A, B, C, weighted_A2, B2;
  double middle = 0.0;
  if (variant == EqualityVariant::abs_sum) {
    A = 0.5 * (P.abs() + P.abs_adjoint());
    B = P.abs();
    C = P.abs() - P.abs_adjoint();
    weighted_A2 = A * A;  // ¼(|T|+|T*|)²
    B2 = P.gram();        // |T|²
    middle = lambda_max(weighted_A2);
  } else {
    A = 0.5 * P.gram_sum();
    B = P.gram();
    C = P.gram() - P.cogram();
    weighted_A2 = A;  // ½(T*T+TT*)
    B2 = P.gram();
    middle = lambda_max(weighted_A2);
  }

  EqualityCondition e;
  e.intersection = intersect_subspaces({top_eigenspace(A, tol), top_eigenspace(B, tol), kernel(C, tol)});
  e.holds = !e.intersection.is_trivial();
  if (e.holds) {
    e.witness = canonical_phase(e.intersection.basis.col(0));
    const double target = P.norm() * P.norm();
    e.chain_gap = std::abs(middle - target);
    for (int k = 0; k <= 10; ++k) {
      const double t = k / 10.0;
      const double lhs = lambda_max(t * weighted_A2 + (1.0 - t) * B2);
      e.chain_gap = std::max(e.chain_gap, std::abs(lhs - target));
    }
    detail::post_check(P, e.chain_gap <= 1e-8 * (1.0 + target),
                       "equality condition holds but the equality chain fails");
  }
  return e;
}

// ---------------------------------------------------------------------------
// Product bounds
// ---------------------------------------------------------------------------

struct ProductBound {
  BoundReport report;
  double product_norm = 0.0;                   // ‖AB‖_{α,β}
  std::optional<double> product_radius;        // w(AB), when the bound also covers it
  std::optional<double> block_cross_check;     // ‖X+Y‖^{1/(2p)}, same scale as the block-form value
  bool block_cross_check_agrees = true;        // flagged, not fatal, when the two disagree
};

/// Profiles of A, B and AB shared by every product bound on one pair.
class PairProfile {
 public:
  PairProfile(Matrix A, Matrix B, ProfileOptions opts = {})
      : opts_(opts), a_(check_shape(A, B), opts), b_(std::move(B), opts), ab_(a_.op() * b_.op(), opts) {}

  OperatorProfile& a() { return a_; }
  OperatorProfile& b() { return b_; }
  OperatorProfile& product() { return ab_; }
  const Matrix& A() const { return a_.op(); }
  const Matrix& B() const { return b_.op(); }
  const ProfileOptions& options() const { return opts_; }

 private:
  static Matrix check_shape(Matrix& A, const Matrix& B) {
    require_square(A, "A");
    require_square(B, "B");
    if (A.rows() != B.rows()) throw DimensionMismatch("A and B differ in size");
    return std::move(A);
  }

  ProfileOptions opts_;
  OperatorProfile a_;
  OperatorProfile b_;
  OperatorProfile ab_;
};

namespace detail {

inline ProductBound finish_product(BoundReport report, PairProfile& pp, const Weights& w,
                                   bool covers_radius = false) {
  ProductBound pb{std::move(report), pp.product().alpha_beta_norm(w)};
  if (covers_radius) pb.product_radius = pp.product().radius();
  if (pp.options().post_checks) {
    if (pb.product_norm > pb.report.value + kOptimizerSlack) {
      throw PostCheckViolation(pb.report.name + ": product norm exceeds bound");
    }
    if (pb.product_radius && *pb.product_radius > pb.report.value + kOptimizerSlack) {
      throw PostCheckViolation(pb.report.name + ": w(AB) exceeds bound");
    }
  }
  return pb;
}

}  // namespace detail

/// ‖AB‖ ≤ √min{4/β, (α+β)/β², 16/(α+β)}·‖A‖‖B‖, the first two branches only when β ≠ 0.
inline ProductBound product_bound_general(PairProfile& pp, const Weights& w) {
  w.validate();
  double factor = 16.0 / w.sum();
  if (w.beta > 0.0) factor = std::min({factor, 4.0 / w.beta, w.sum() / (w.beta * w.beta)});
  BoundReport r{"product-general", std::sqrt(factor) * pp.a().alpha_beta_norm(w) * pp.b().alpha_beta_norm(w),
                "norm_ab(AB)", w};
  return detail::finish_product(std::move(r), pp, w);
}

enum class CommutingVariant { general_commuting, isometry, doubly_commuting };

inline ProductBound product_bound_commuting(PairProfile& pp, const Weights& w, CommutingVariant variant) {
  w.validate();
  const Matrix& A = pp.A();
  const Matrix& B = pp.B();
  detail::require_commute(A, B, "AB = BA");
  const double s = w.sum();
  BoundReport r{"", 0.0, "norm_ab(AB)", w};
  switch (variant) {
    case CommutingVariant::general_commuting:
      if (w.beta == 0.0) throw InvalidWeights("the commuting bound needs beta != 0");
      r.name = "product-commuting";
      r.value = std::sqrt(4.0 * w.alpha / (s * s) + 1.0 / w.beta) * pp.a().alpha_beta_norm(w) *
                pp.b().alpha_beta_norm(w);
      break;
    case CommutingVariant::isometry: {
      const Eigen::Index n = A.rows();
      const double res = detail::relative_residual(A.adjoint() * A - Matrix::Identity(n, n), 1.0);
      if (res > kHypothesisTol) throw HypothesisViolated("A*A = I", res);
      r.name = "product-isometry";
      r.value = std::sqrt(w.alpha / s + 1.0) * pp.b().alpha_beta_norm(w);
      break;
    }
    case CommutingVariant::doubly_commuting:
      if (w.beta == 0.0) throw InvalidWeights("the doubly-commuting bound needs beta != 0");
      detail::require_commute(A, B.adjoint(), "AB* = B*A");
      r.name = "product-doubly-commuting";
      r.value = std::sqrt(w.alpha / s + 1.0) * std::min(2.0 / std::sqrt(s), 1.0 / std::sqrt(w.beta)) *
                pp.a().alpha_beta_norm(w) * pp.b().alpha_beta_norm(w);
      break;
  }
  return detail::finish_product(std::move(r), pp, w);
}

/// (2·w([[0, X], [Y, 0]]))^{1/(2p)} with X = (1/n)(α(AA*)^{pn} + β(A*A)^{pn}), Y = (1/m)(B*B)^{pm}.
inline ProductBound product_bound_block(PairProfile& pp, const SchattenParams& sp, const Weights& w) {
  sp.validate();
  detail::require_unit_sum(w);
  const Matrix& A = pp.A();
  const Matrix& B = pp.B();
  detail::require_commute(A, B, "AB = BA");
  {
    const double res = detail::relative_residual(A.adjoint() * B - B * A.adjoint(), A.norm() * B.norm());
    if (res > kHypothesisTol) throw HypothesisViolated("A*B = BA*", res);
  }
  const Eigen::Index n = A.rows();
  const Matrix X = (1.0 / sp.n_exp) * (w.alpha * psd_power(pp.a().cogram(), sp.p * sp.n_exp) +
                                      w.beta * psd_power(pp.a().gram(), sp.p * sp.n_exp));
  const Matrix Y = (1.0 / sp.m_exp) * psd_power(pp.b().gram(), sp.p * sp.m_exp);
  Matrix block = Matrix::Zero(2 * n, 2 * n);
  block.topRightCorner(n, n) = X;
  block.bottomLeftCorner(n, n) = Y;
  SweepOptions sw = pp.options().sweep;
  sw.post_check = false;
  const double wb = block.isZero(0.0) ? 0.0 : numerical_radius(block, sw).value;
  BoundReport r{"product-block", std::pow(2.0 * wb, 1.0 / (2.0 * sp.p)), "norm_ab(AB)", w};
  r.schatten = sp;
  ProductBound pb = detail::finish_product(std::move(r), pp, w);
  pb.block_cross_check = std::pow(spectral_norm(X + Y), 1.0 / (2.0 * sp.p));
  pb.block_cross_check_agrees = std::abs(*pb.block_cross_check - pb.report.value) <= 1e-6 * (1.0 + pb.report.value);
  return pb;
}

enum class FgVariant { mean, split, abs_sum };

inline const char* to_string(FgVariant v) {
  switch (v) {
    case FgVariant::mean: return "fg-mean";
    case FgVariant::split: return "fg-split";
    case FgVariant::abs_sum: return "fg-abs-sum";
  }
  return "?";
}

/// Product bounds built from f(t) = t^γ, g(t) = t^{1−γ}; each also bounds w(AB) since α+β = 1.
inline ProductBound product_bound_fg(PairProfile& pp, const SchattenParams& sp, const Weights& w, FgVariant variant) {
  detail::require_unit_sum(w);
  const Matrix& A = pp.A();
  const Matrix& B = pp.B();
  SchattenParams params = variant == FgVariant::abs_sum ? SchattenParams{2.0, 2.0, 1.0, 0.5} : sp;
  params.validate();

  const Matrix& absA = pp.a().abs();
  const Matrix& absAadj = pp.a().abs_adjoint();
  {
    const double res = detail::relative_residual(absA * B - B.adjoint() * absA, absA.norm() * B.norm());
    if (res > kHypothesisTol) throw HypothesisViolated("|A|B = B*|A|", res);
  }
  if (variant != FgVariant::mean) {
    detail::require_commute(A, B, "AB = BA");
    detail::require_commute(A, B.adjoint(), "AB* = B*A");
  }

  const double n = params.n_exp, m = params.m_exp, p = params.p, g = params.gamma;
  const double rB = pp.b().spectral_radius();
  double sq = 0.0;  // value^{2p}
  if (variant == FgVariant::abs_sum) {
    const Matrix s = absA + absAadj;
    const double rBB = spectral_radius(pp.b().gram());
    sq = lambda_max((w.alpha / 4.0) * rB * rB * (s * s) + w.beta * rBB * pp.a().gram());
  } else {
    // f^{np}(|A|) = |A|^{γnp}, g^{mp}(|A*|) = |A*|^{(1−γ)mp}
    const Matrix X = (1.0 / n) * psd_power(absA, g * n * p) + (1.0 / m) * psd_power(absAadj, (1.0 - g) * m * p);
    const double rB2p = std::pow(rB, 2.0 * p);
    if (variant == FgVariant::mean) {
      sq = lambda_max(w.alpha * rB2p * (X * X) + w.beta * psd_power(pp.product().gram(), p));
    } else {
      const Matrix& AA = pp.a().gram();
      const Matrix Y = (1.0 / n) * psd_power(AA, g * n * p) + (1.0 / m) * psd_power(AA, (1.0 - g) * m * p);
      const double rBBp = std::pow(spectral_radius(pp.b().gram()), p);
      sq = lambda_max(w.alpha * rB2p * (X * X) + w.beta * rBBp * Y);
    }
  }
  BoundReport r{std::string("product-") + to_string(variant), std::pow(std::max(0.0, sq), 1.0 / (2.0 * p)),
                "norm_ab(AB)", w};
  r.schatten = params;
  return detail::finish_product(std::move(r), pp, w, /*covers_radius=*/true);
}

inline ProductBound product_bound_general(const Matrix& A, const Matrix& B, const Weights& w,
                                          const ProfileOptions& opts = {}) {
  PairProfile pp(A, B, opts);
  return product_bound_general(pp, w);
}

inline ProductBound product_bound_commuting(const Matrix& A, const Matrix& B, const Weights& w,
                                            CommutingVariant variant, const ProfileOptions& opts = {}) {
  PairProfile pp(A, B, opts);
  return product_bound_commuting(pp, w, variant);
}

inline ProductBound product_bound_block(const Matrix& A, const Matrix& B, const SchattenParams& sp,
                                        const Weights& w, const ProfileOptions& opts = {}) {
  PairProfile pp(A, B, opts);
  return product_bound_block(pp, sp, w);
}

inline ProductBound product_bound_fg(const Matrix& A, const Matrix& B, const SchattenParams& sp, const Weights& w,
                                     FgVariant variant, const ProfileOptions& opts = {}) {
  PairProfile pp(A, B, opts);
  return product_bound_fg(pp, sp, w, variant);
}

// Matrix-argument conveniences.

inline BoundReport bound_abs_sum(const Matrix& T, const Weights& w, double gamma = 0.5, ProfileOptions opts = {}) {
  OperatorProfile P(T, std::move(opts));
  return bound_abs_sum(P, w, gamma);
}

inline BoundReport infimum_mix(const Matrix& T, MixKind kind, double tol = 1e-10, ProfileOptions opts = {}) {
  OperatorProfile P(T, std::move(opts));
  return infimum_mix(P, kind, tol);
}

inline RefinedLowerBound refined_lower_bound(const Matrix& T, double tol = 1e-9, ProfileOptions opts = {}) {
  OperatorProfile P(T, std::move(opts));
  return refined_lower_bound(P, tol);
}

}  // namespace abnorm

#endif  // ABNORM_BOUNDS_HPP
