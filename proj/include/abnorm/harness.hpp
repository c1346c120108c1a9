#ifndef ABNORM_HARNESS_HPP
#define ABNORM_HARNESS_HPP

// Verification campaigns over the bound catalog, the table of worked
// examples, lemma spot checks and infimum-curve sweeps.
//
// A check asserts lhs ≤ rhs (or lhs = rhs); slack = rhs − lhs (or −|lhs − rhs|)
// and the check passes when slack ≥ −tol. Tolerances are relative:
// tol = base·(1 + max(|lhs|, |rhs|)).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "abnorm/alphabeta.hpp"
#include "abnorm/bounds.hpp"
#include "abnorm/errors.hpp"
#include "abnorm/io.hpp"
#include "abnorm/linalg.hpp"
#include "abnorm/norms.hpp"
#include "abnorm/profile.hpp"
#include "abnorm/random.hpp"

namespace abnorm {

struct Tolerances {
  double closed_form = 1e-9;   // eigenvalue-only identities
  double optimizer = 1e-6;     // comparisons of two optimizer results
  double inequality = 1e-7;    // inequalities with an optimizer value on one side
  double homogeneity = 1e-10;  // degree-0 invariance of weighted bounds
};

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::string matrix_id;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // flagged observations that are not failures
  std::uint64_t seed = 0;
  double elapsed = 0.0;

  /// lhs ≤ rhs.
  void le(std::string name, double lhs, double rhs, double base_tol) {
    const double tol = base_tol * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
    const double slack = rhs - lhs;
    checks.push_back({std::move(name), lhs, rhs, slack, tol, slack >= -tol});
  }
  /// lhs = rhs.
  void eq(std::string name, double lhs, double rhs, double base_tol) {
    const double tol = base_tol * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
    const double slack = -std::abs(lhs - rhs);
    checks.push_back({std::move(name), lhs, rhs, slack, tol, slack >= -tol});
  }
  /// lhs ≤ rhs with an absolute tolerance.
  void le_abs(std::string name, double lhs, double rhs, double tol) {
    const double slack = rhs - lhs;
    checks.push_back({std::move(name), lhs, rhs, slack, tol, slack >= -tol});
  }
  void fail(std::string name, const std::string& why) {
    checks.push_back({std::move(name), 0.0, 0.0, -1.0, 0.0, false});
    notes.push_back(checks.back().name + ": " + why);
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  }
  bool passed() const { return failures() == 0; }
};

/// Elapsed time is omitted unless asked for, so serialized reports are reproducible byte for byte.
inline json report_to_json(const VerificationReport& r, bool include_timing = false) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}, {"tol", c.tol},
                      {"pass", c.pass}});
  }
  json j = {{"matrix_id", r.matrix_id}, {"seed", r.seed}, {"checks", std::move(checks)}, {"notes", r.notes}};
  if (include_timing) j["elapsed"] = r.elapsed;
  return j;
}

inline VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.matrix_id = j.at("matrix_id").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const json& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("lhs").get<double>(), c.at("rhs").get<double>(),
                          c.at("slack").get<double>(), c.at("tol").get<double>(), c.at("pass").get<bool>()});
    }
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("elapsed")) r.elapsed = j.at("elapsed").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad verification report: ") + e.what());
  }
}

inline json bound_to_json(const BoundReport& b) {
  json j = {{"name", b.name}, {"value", b.value}, {"quantity", b.quantity}};
  if (b.weights) j["weights"] = {{"alpha", b.weights->alpha}, {"beta", b.weights->beta}};
  if (b.mix) j["mix_t"] = b.mix->t;
  if (b.schatten) {
    j["schatten"] = {{"n", b.schatten->n_exp}, {"m", b.schatten->m_exp}, {"p", b.schatten->p},
                     {"gamma", b.schatten->gamma}};
  }
  if (b.compared_to) j["compared_to"] = *b.compared_to;
  if (b.strict_improvement) j["strict_improvement"] = *b.strict_improvement;
  return j;
}

inline std::vector<Weights> default_weights() { return {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {2.0, 3.0}, {0.5, 5.0}}; }

inline std::string weights_tag(const Weights& w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "@(%g,%g)", w.alpha, w.beta);
  return buf;
}

struct VerifyOptions {
  Tolerances tol;
  ProfileOptions profile{SweepOptions{}, OptimizerOptions{16}, false};
  std::uint64_t seed = 0;
  std::string matrix_id = "T";
};

namespace detail {

/// Runs fn(i) for i in [0, count) on `threads` workers; results land at their own index.
inline void run_indexed(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int n = std::min<int>(threads, static_cast<int>(count));
  for (int t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Profile of U*TU, T* or cT sharing the certificates of T.
inline OperatorProfile transported(const Matrix& M, OperatorProfile& P, const Matrix& U, double scale, bool adjoint_map,
                                   const ProfileOptions& opts) {
  OperatorProfile Q(M, opts);
  NormCertificate nc = P.norm_cert();
  NormCertificate rc = P.radius_cert();
  if (adjoint_map) {
    // T v = σ u  ⇒  T* u = σ v
    const Vector Tv = P.op() * nc.witness;
    const double nv = Tv.norm();
    nc.witness = nv > 0.0 ? Vector(Tv / nv) : nc.witness;
  }
  nc.witness = U.adjoint() * nc.witness;
  rc.witness = U.adjoint() * rc.witness;
  nc.value *= scale;
  rc.value *= scale;
  Q.adopt(std::move(nc), std::move(rc));
  return Q;
}

}  // namespace detail

/// Every applicable check on one operator; failures are recorded, never thrown.
inline VerificationReport verify_matrix(const Matrix& T, const std::vector<Weights>& weights,
                                        const VerifyOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.matrix_id = opts.matrix_id;
  rep.seed = opts.seed;
  const Tolerances& tol = opts.tol;
  ProfileOptions popts = opts.profile;
  popts.post_checks = false;
  popts.optimizer.seed = derive_seed(opts.seed, 1);

  try {
    require_square(T, "operator");
    const Eigen::Index n = T.rows();
    OperatorProfile P(T, popts);
    const double w = P.radius();
    const double nm = P.norm();
    const double w2 = w * w;
    const double s_norm = lambda_max(P.gram_sum());

    // classical chains
    rep.le("spectral-radius<=w", P.spectral_radius(), w, tol.inequality);
    rep.le("half-norm<=w", 0.5 * nm, w, tol.inequality);
    rep.le("w<=norm", w, nm, tol.inequality);
    rep.le("quarter-S<=w^2", 0.25 * s_norm, w2, tol.inequality);
    rep.le("w^2<=half-S", w2, 0.5 * s_norm, tol.inequality);
    const auto base = baseline_bounds(P);
    rep.le("w<=abs-sum-baseline", w, find_report(base, "half-abs-sum").value, tol.inequality);
    rep.le("w<=power-baseline", w, find_report(base, "norm-power-mean").value, tol.inequality);
    const double bz_base = find_report(base, "square-radius-gram-sum").value;
    rep.le("w^2<=square-radius-baseline", w2, bz_base, tol.inequality);
    rep.le("square-radius-baseline<=half-S", bz_base, 0.5 * s_norm, tol.inequality);
    rep.le("abs-sum-baseline<=norm", find_report(base, "half-abs-sum").value, nm, tol.closed_form);

    // infimum over the weights
    std::map<MixKind, double> inf_value;
    for (MixKind k : {MixKind::abs_sum, MixKind::gram_sum, MixKind::square_radius, MixKind::re_im}) {
      const BoundReport r = infimum_mix(P, k);
      inf_value[k] = r.value;
      const std::string tag = std::string("inf-") + to_string(k);
      rep.le("w<=" + tag, w, r.value, tol.inequality);
      rep.le(tag + "<=t1-baseline", r.value, *r.compared_to, tol.closed_form);
    }
    rep.eq("inf-abs-sum-t1=abs-sum-baseline", std::sqrt(mix_objective(P, MixKind::abs_sum, 1.0)),
           find_report(base, "half-abs-sum").value, tol.closed_form);
    rep.eq("inf-gram-sum-t1=half-S", mix_objective(P, MixKind::gram_sum, 1.0), 0.5 * s_norm, tol.closed_form);
    rep.eq("inf-square-radius-t1=square-radius-baseline", mix_objective(P, MixKind::square_radius, 1.0), bz_base, tol.closed_form);

    // refined lower bound
    const RefinedLowerBound rl = refined_lower_bound(P);
    rep.le("quarter-S<=refined", rl.quarter_s, rl.value, tol.closed_form);
    rep.le("refined<=w^2", rl.value, w2, tol.inequality);

    // equality conditions
    for (EqualityVariant v : {EqualityVariant::gram_sum, EqualityVariant::abs_sum}) {
      const EqualityCondition e = condition_equality(P, v);
      if (e.holds) {
        rep.le(std::string(v == EqualityVariant::gram_sum ? "gram-sum" : "abs-sum") + "-chain-gap", e.chain_gap, 0.0,
               1e-8 * (1.0 + nm * nm));
      }
    }

    // transported copies for invariance checks, and a companion for the triangle inequality
    Rng rng(derive_seed(opts.seed, 2));
    const Matrix U = random_unitary(n, rng);
    const cplx c = rng.complex_normal() + cplx(0.5, 0.0);
    const Matrix I = Matrix::Identity(n, n);
    OperatorProfile PU = detail::transported(U.adjoint() * T * U, P, U, 1.0, false, popts);
    OperatorProfile PA = detail::transported(T.adjoint(), P, I, 1.0, true, popts);
    OperatorProfile PC = detail::transported(c * T, P, I, std::abs(c), false, popts);
    const Matrix S = ginibre(n, rng);
    OperatorProfile PS(S, popts);
    OperatorProfile PST(S + T, popts);

    for (const Weights& wt : weights) {
      const std::string tag = weights_tag(wt);
      const double s = wt.sum();
      const double rs = std::sqrt(s);
      const double ab = P.alpha_beta_norm(wt);

      for (const BoundReport& b : equivalence_bounds(P, wt)) {
        if (b.name.find("lower") != std::string::npos) {
          rep.le(b.name + tag, b.value, ab, tol.inequality);
        } else {
          rep.le(b.name + tag, ab, b.value, tol.inequality);
        }
      }
      if (wt.beta == 0.0) rep.eq("interp-w" + tag, ab / std::sqrt(wt.alpha), w, 1e-8);
      if (wt.alpha == 0.0) rep.eq("interp-norm" + tag, ab / std::sqrt(wt.beta), nm, 1e-8);

      const BoundReport e2a = lower_bound_crawford(P, wt);
      rep.le("crawford-lower" + tag, e2a.value, ab, tol.inequality);

      const BoundReport e4 = bound_abs_sum(P, wt);
      rep.le("abs-sum" + tag, ab, e4.value, tol.inequality);
      rep.le("abs-sum-w" + tag, w, e4.value / rs, tol.inequality);
      rep.le("inf-abs-sum<=abs-sum" + tag, inf_value[MixKind::abs_sum], e4.value / rs, tol.closed_form);

      const GramSumBounds e5 = bounds_gram_sum(P, wt);
      rep.le("gram-sum-lower-half" + tag, e5.lower_half.value, ab, tol.inequality);
      rep.le("gram-sum-lower-third" + tag, e5.lower_third.value, ab, tol.inequality);
      rep.le("gram-sum-upper" + tag, ab, e5.upper.value, tol.inequality);
      rep.le("inf-gram-sum<=gram-sum" + tag, inf_value[MixKind::gram_sum], e5.upper.value / rs, tol.closed_form);

      const BoundReport bz = bound_square_radius(P, wt);
      rep.le("square-radius" + tag, ab, bz.value, tol.inequality);
      rep.le("inf-square-radius<=square-radius" + tag, inf_value[MixKind::square_radius], bz.value / rs, tol.closed_form);

      const BoundReport ri = bound_re_im(P, wt);
      rep.le("re-im" + tag, ab, ri.value, tol.inequality);
      rep.le("inf-re-im<=re-im" + tag, inf_value[MixKind::re_im], ri.value / rs, tol.closed_form);

      // degree-0 homogeneity of the normalized bounds
      const Weights scaled = wt.scaled(2.5);
      const double rsc = std::sqrt(scaled.sum());
      rep.eq("homog-abs-sum" + tag, bound_abs_sum(P, scaled).value / rsc, e4.value / rs, tol.homogeneity);
      rep.eq("homog-gram-sum" + tag, bounds_gram_sum(P, scaled).upper.value / rsc, e5.upper.value / rs, tol.homogeneity);
      rep.eq("homog-square-radius" + tag, bound_square_radius(P, scaled).value / rsc, bz.value / rs, tol.homogeneity);
      rep.eq("homog-re-im" + tag, bound_re_im(P, scaled).value / rsc, ri.value / rs, tol.homogeneity);
      rep.eq("homog-crawford-lower" + tag, lower_bound_crawford(P, scaled).value / rsc, e2a.value / rs, tol.homogeneity);

      // norm axioms and invariance
      rep.eq("abs-homogeneity" + tag, PC.alpha_beta_norm(wt), std::abs(c) * ab, tol.inequality);
      rep.le("triangle" + tag, PST.alpha_beta_norm(wt), PS.alpha_beta_norm(wt) + ab, tol.inequality);
      rep.eq("unitary-invariance" + tag, PU.alpha_beta_norm(wt), ab, tol.optimizer);
      rep.eq("adjoint-invariance" + tag, PA.alpha_beta_norm(wt), ab, tol.optimizer);

      if (wt.both_positive()) {
        const double decomposed = wt.alpha * w2 + wt.beta * nm * nm;
        const bool attains = std::abs(ab * ab - decomposed) <= 1e-8 * (1.0 + decomposed);
        const bool normaloid = std::abs(w - nm) <= 1e-8 * (1.0 + nm);
        rep.eq("decomposed-iff-normaloid" + tag, attains ? 1.0 : 0.0, normaloid ? 1.0 : 0.0, 0.0);
        const bool forces_zero = std::abs(ab - std::sqrt(wt.alpha + 4.0 * wt.beta) * w) <= 1e-8 * (1.0 + ab);
        rep.le("forces-zero" + tag, forces_zero ? nm : 0.0, 1e-8, 0.0);

        for (SharpVariant v : {SharpVariant::gram_sum, SharpVariant::abs_sum, SharpVariant::square_radius}) {
          const SharpnessCondition sc = condition_sharper(P, wt, v);
          rep.le(std::string(to_string(v)) + "-bound" + tag, w2, sc.bound, tol.inequality);
          if (sc.applicable) {
            const double gap = wt.beta * (sc.norm_A - sc.norm_B_L) / s;
            rep.le(std::string(to_string(v)) + "-strict" + tag, sc.bound, sc.baseline - gap, tol.closed_form);
          }
        }
      }
    }
  } catch (const std::exception& e) {
    rep.fail("exception", e.what());
  }
  rep.elapsed = detail::elapsed_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Product bounds on generated hypothesis pairs
// ---------------------------------------------------------------------------

inline std::vector<SchattenParams> default_schatten_params() {
  return {{2.0, 2.0, 1.0, 0.5}, {3.0, 1.5, 2.0, 0.3}, {1.5, 3.0, 4.0 / 3.0, 0.7}};
}

/// Product bounds whose hypotheses the generator kind guarantees.
inline VerificationReport verify_pair(const MatrixPair& pair, GeneratorKind kind, const std::vector<Weights>& weights,
                                      const VerifyOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.matrix_id = opts.matrix_id;
  rep.seed = opts.seed;
  ProfileOptions popts = opts.profile;
  popts.post_checks = false;
  popts.optimizer.seed = derive_seed(opts.seed, 3);
  const double tol = opts.tol.optimizer;
  const bool doubly = kind == GeneratorKind::normal_poly_pair || kind == GeneratorKind::isometry_pair ||
                      kind == GeneratorKind::block_scalar_pair || kind == GeneratorKind::block_hermitian_pair ||
                      kind == GeneratorKind::scalar_hermitian_pair;
  const bool isometry = kind == GeneratorKind::isometry_pair;
  const bool fg = kind == GeneratorKind::scalar_hermitian_pair || kind == GeneratorKind::block_hermitian_pair;
  // the block form needs A*B = BA*, which holds when A is normal and doubly commutes with B
  const bool block = doubly;

  auto record = [&](const ProductBound& pb) {
    const std::string tag = pb.report.name + weights_tag(*pb.report.weights);
    rep.le_abs(tag, pb.product_norm, pb.report.value, tol);
    if (pb.product_radius) rep.le_abs(tag + "-w", *pb.product_radius, pb.report.value, tol);
    if (!pb.block_cross_check_agrees) {
      rep.notes.push_back(tag + ": 2w(block) and ||X+Y|| disagree (" + std::to_string(pb.report.value) + " vs " +
                          std::to_string(*pb.block_cross_check) + ")");
    }
  };

  try {
    PairProfile pp(pair.A, pair.B, popts);
    for (const Weights& w : weights) {
      record(product_bound_general(pp, w));
      // every pair generator yields AB = BA
      if (w.beta > 0.0) record(product_bound_commuting(pp, w, CommutingVariant::general_commuting));
      if (isometry) record(product_bound_commuting(pp, w, CommutingVariant::isometry));
      if (doubly && w.beta > 0.0) record(product_bound_commuting(pp, w, CommutingVariant::doubly_commuting));

      const Weights unit = w.scaled(1.0 / w.sum());
      if (block) {
        for (const SchattenParams& sp : default_schatten_params()) record(product_bound_block(pp, sp, unit));
      }
      if (fg) {
        for (const SchattenParams& sp : default_schatten_params()) {
          record(product_bound_fg(pp, sp, unit, FgVariant::mean));
          record(product_bound_fg(pp, sp, unit, FgVariant::split));
        }
        record(product_bound_fg(pp, {}, unit, FgVariant::abs_sum));
      }
    }
  } catch (const std::exception& e) {
    rep.fail("exception", e.what());
  }
  rep.elapsed = detail::elapsed_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

inline std::vector<GeneratorKind> default_matrix_kinds() {
  return {GeneratorKind::ginibre, GeneratorKind::normal, GeneratorKind::hermitian, GeneratorKind::unitary,
          GeneratorKind::nilpotent_shift};
}

inline std::vector<GeneratorKind> default_pair_kinds() {
  return {GeneratorKind::commuting_pair,    GeneratorKind::normal_poly_pair,     GeneratorKind::isometry_pair,
          GeneratorKind::block_scalar_pair, GeneratorKind::block_hermitian_pair, GeneratorKind::scalar_hermitian_pair};
}

struct CampaignOptions {
  std::vector<Eigen::Index> dims{2, 3, 4, 6};
  int count = 500;  // per dimension
  std::uint64_t seed = 42;
  std::vector<Weights> weights = default_weights();
  std::vector<GeneratorKind> kinds = default_matrix_kinds();
  VerifyOptions verify;
  int threads = 1;
};

struct CampaignResult {
  std::vector<VerificationReport> reports;  // ordered by (dim, index)
  std::size_t checks = 0;
  std::size_t failures = 0;
  double elapsed = 0.0;

  bool passed() const { return failures == 0; }
};

struct CaseSpec {
  GeneratorSpec spec;
  std::string id;
};

inline std::vector<CaseSpec> campaign_cases(const CampaignOptions& o) {
  std::vector<CaseSpec> cases;
  if (o.kinds.empty()) throw InvalidParams("campaign needs at least one generator kind");
  for (Eigen::Index d : o.dims) {
    if (d < 1) throw InvalidSpec("campaign dimension must be >= 1");
    for (int i = 0; i < o.count; ++i) {
      const GeneratorKind kind = o.kinds[static_cast<std::size_t>(i) % o.kinds.size()];
      const std::uint64_t s = derive_seed(o.seed, (static_cast<std::uint64_t>(d) << 32) | static_cast<std::uint64_t>(i));
      cases.push_back({{kind, d, s, {}}, "n" + std::to_string(d) + "-" + to_string(kind) + "-" + std::to_string(i)});
    }
  }
  return cases;
}

namespace detail {

inline CampaignResult finish_campaign(std::vector<VerificationReport> reports,
                                      std::chrono::steady_clock::time_point t0) {
  CampaignResult res;
  res.reports = std::move(reports);
  for (const auto& r : res.reports) {
    res.checks += r.checks.size();
    res.failures += r.failures();
  }
  res.elapsed = elapsed_since(t0);
  return res;
}

}  // namespace detail

/// Verifies every seeded single-matrix case; results are independent of `threads`.
inline CampaignResult campaign(const CampaignOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = campaign_cases(o);
  std::vector<VerificationReport> reports(cases.size());
  detail::run_indexed(cases.size(), o.threads, [&](std::size_t i) {
    VerifyOptions vo = o.verify;
    vo.seed = cases[i].spec.seed;
    vo.matrix_id = cases[i].id;
    reports[i] = verify_matrix(random_matrix(cases[i].spec), o.weights, vo);
  });
  return detail::finish_campaign(std::move(reports), t0);
}

/// Product-bound campaign over hypothesis-pair generators (`kinds` must be pair kinds).
inline CampaignResult pair_campaign(const CampaignOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (GeneratorKind k : o.kinds) {
    if (!is_pair_kind(k)) throw InvalidSpec(std::string("not a pair generator: ") + to_string(k));
  }
  const auto cases = campaign_cases(o);
  std::vector<VerificationReport> reports(cases.size());
  detail::run_indexed(cases.size(), o.threads, [&](std::size_t i) {
    VerifyOptions vo = o.verify;
    vo.seed = cases[i].spec.seed;
    vo.matrix_id = cases[i].id;
    reports[i] = verify_pair(random_pair(cases[i].spec), cases[i].spec.kind, o.weights, vo);
  });
  return detail::finish_campaign(std::move(reports), t0);
}

inline json campaign_to_json(const CampaignResult& r, bool include_timing = false) {
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(report_to_json(rep, include_timing));
  json j = {{"matrices", r.reports.size()}, {"checks", r.checks}, {"failures", r.failures}, {"reports", reports}};
  if (include_timing) j["elapsed"] = r.elapsed;
  return j;
}

// ---------------------------------------------------------------------------
// Strict-improvement frequencies
// ---------------------------------------------------------------------------

struct SharpnessStats {
  std::size_t evaluated = 0;
  std::size_t improved = 0;
  std::size_t tied = 0;
  double mean_gap = 0.0;  // mean relative gap to the baseline, in the improving direction
};

inline std::map<std::string, SharpnessStats> sharpness_campaign(const std::vector<Eigen::Index>& dims, int count,
                                                                std::uint64_t seed,
                                                                const std::vector<GeneratorKind>& kinds,
                                                                double tol = 1e-9) {
  std::map<std::string, SharpnessStats> out;
  if (count < 1) return out;
  CampaignOptions o;
  o.dims = dims;
  o.count = count;
  o.seed = seed;
  o.kinds = kinds;
  ProfileOptions popts;
  popts.post_checks = false;
  auto add = [&](const std::string& name, double value, double baseline, bool upper) {
    SharpnessStats& s = out[name];
    const double gap = upper ? baseline - value : value - baseline;
    ++s.evaluated;
    if (gap > tol * (1.0 + std::abs(baseline))) {
      ++s.improved;
    } else {
      ++s.tied;
    }
    const double rel = baseline != 0.0 ? gap / std::abs(baseline) : 0.0;
    s.mean_gap += (rel - s.mean_gap) / static_cast<double>(s.evaluated);
  };
  for (const CaseSpec& c : campaign_cases(o)) {
    OperatorProfile P(random_matrix(c.spec), popts);
    for (MixKind k : {MixKind::abs_sum, MixKind::gram_sum, MixKind::square_radius, MixKind::re_im}) {
      const BoundReport r = infimum_mix(P, k);
      add(r.name, r.value, *r.compared_to, true);
    }
    const RefinedLowerBound rl = refined_lower_bound(P);
    add("refined-lower", rl.value, rl.quarter_s, false);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma spot checks
// ---------------------------------------------------------------------------

inline VerificationReport lemma_checks(std::uint64_t seed, int count, Eigen::Index dim = 3) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.matrix_id = "lemmas";
  rep.seed = seed;
  const double tol = 1e-10;
  SweepOptions sw;
  sw.post_check = false;
  try {
    for (int k = 0; k < count; ++k) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
      const std::string idx = "#" + std::to_string(k);

      // |⟨a,e⟩⟨e,b⟩| ≤ ½(‖a‖‖b‖ + |⟨a,b⟩|), ‖e‖ = 1
      Vector a(dim), b(dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        a(i) = rng.complex_normal();
        b(i) = rng.complex_normal();
      }
      const Vector e = random_unit_vector(dim, rng);
      rep.le("mixed-schwarz" + idx, std::abs(inner(a, e) * inner(e, b)), 0.5 * (a.norm() * b.norm() + std::abs(inner(a, b))),
             tol);

      // ⟨Ax,x⟩^p ≤ ⟨A^p x,x⟩ for A ≥ 0, p ≥ 1
      const Matrix P = random_psd(dim, rng);
      const Vector x = random_unit_vector(dim, rng);
      const double p = rng.uniform(1.0, 4.0);
      rep.le("power-convexity" + idx, std::pow(std::max(0.0, inner(P * x, x).real()), p),
             inner(psd_power(P, p) * x, x).real(), tol);

      // |⟨Hx,x⟩| ≤ ⟨|H|x,x⟩ for Hermitian H
      const Matrix H = random_hermitian(dim, rng);
      rep.le("abs-value" + idx, std::abs(inner(H * x, x)), inner(polar_abs(H) * x, x).real(), tol);

      // w(AB) ≤ 4w(A)w(B); commuting: ≤ 2w(A)w(B); isometry: ≤ w(B); doubly commuting: ≤ w(B)‖A‖
      const Matrix A1 = ginibre(dim, rng);
      const Matrix B1 = ginibre(dim, rng);
      rep.le("w-product" + idx, numerical_radius(A1 * B1, sw).value,
             4.0 * numerical_radius(A1, sw).value * numerical_radius(B1, sw).value, tol);
      const MatrixPair cp = random_pair({GeneratorKind::commuting_pair, dim, rng.bits(), {}});
      rep.le("w-product-commuting" + idx, numerical_radius(cp.A * cp.B, sw).value,
             2.0 * numerical_radius(cp.A, sw).value * numerical_radius(cp.B, sw).value, tol);
      const MatrixPair ip = random_pair({GeneratorKind::isometry_pair, dim, rng.bits(), {}});
      rep.le("w-product-isometry" + idx, numerical_radius(ip.A * ip.B, sw).value, numerical_radius(ip.B, sw).value,
             tol);
      const MatrixPair dp = random_pair({GeneratorKind::block_scalar_pair, dim, rng.bits(), {}});
      rep.le("w-product-doubly" + idx, numerical_radius(dp.A * dp.B, sw).value,
             numerical_radius(dp.B, sw).value * spectral_norm(dp.A), tol);
    }
  } catch (const std::exception& e) {
    rep.fail("exception", e.what());
  }
  rep.elapsed = detail::elapsed_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Infimum curves
// ---------------------------------------------------------------------------

struct SweepRow {
  double t;
  double h;
  double sqrt_h;
};

inline std::vector<SweepRow> sweep_mix(OperatorProfile& P, MixKind kind, int steps) {
  if (steps < 2) throw InvalidParams("sweep needs at least 2 steps");
  const MixPencil h(P, kind);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double t = k == steps - 1 ? 1.0 : static_cast<double>(k) / (steps - 1);
    const double v = std::max(0.0, h(t));
    rows.push_back({t, v, std::sqrt(v)});
  }
  return rows;
}

inline void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "t,h,sqrt_h\n";
  char buf[96];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.t, r.h, r.sqrt_h);
    out << buf;
  }
}

// ---------------------------------------------------------------------------
// Worked examples
// ---------------------------------------------------------------------------

enum class Relation { equal, less, greater };

struct ExampleRow {
  std::string case_name;
  double computed = 0.0;
  double expected = 0.0;
  Relation relation = Relation::equal;
  std::optional<double> printed;   // printed value when it differs from the evaluated formula
  bool erratum = false;
  double tol = 1e-9;
  bool pass = false;
};

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "=";
    case Relation::less: return "<";
    case Relation::greater: return ">";
  }
  return "?";
}

namespace examples {

/// [[0,0,0],[2,0,0],[0,1,0]].
inline Matrix shift_2_1() { return weighted_shift(3, {2.0, 1.0}); }

/// [[0,2,0],[0,0,2],[0,0,0]].
inline Matrix upper_shift_2_2() {
  Matrix T = Matrix::Zero(3, 3);
  T(0, 1) = 2.0;
  T(1, 2) = 2.0;
  return T;
}

/// [[1,1,0],[0,0,0],[0,0,1]].
inline Matrix rank_two_example() {
  Matrix T = Matrix::Zero(3, 3);
  T(0, 0) = 1.0;
  T(0, 1) = 1.0;
  T(2, 2) = 1.0;
  return T;
}

/// diag(1, i).
inline Matrix diag_one_i() {
  Matrix T = Matrix::Zero(2, 2);
  T(0, 0) = 1.0;
  T(1, 1) = cplx(0.0, 1.0);
  return T;
}

/// [[0,1],[0,0]].
inline Matrix jordan2() {
  Matrix T = Matrix::Zero(2, 2);
  T(0, 1) = 1.0;
  return T;
}

/// ‖[[0,1],[0,0]]‖_{α,β}: (α+β)/(2√α) when β ≤ α, else √β.
inline double jordan2_closed_form(const Weights& w) {
  if (w.beta <= w.alpha) return w.sum() / (2.0 * std::sqrt(w.alpha));
  return std::sqrt(w.beta);
}

}  // namespace examples

inline std::vector<ExampleRow> worked_examples() {
  std::vector<ExampleRow> rows;
  auto add = [&rows](std::string name, double computed, double expected, Relation rel,
                     double tol = 1e-9) {
    ExampleRow r{std::move(name), computed, expected, rel};
    r.tol = tol;
    switch (rel) {
      case Relation::equal: r.pass = std::abs(computed - expected) <= tol * (1.0 + std::abs(expected)); break;
      case Relation::less: r.pass = computed < expected; break;
      case Relation::greater: r.pass = computed > expected; break;
    }
    rows.push_back(std::move(r));
    return &rows.back();
  };
  const double r2 = std::sqrt(2.0);

  {
    OperatorProfile P(examples::shift_2_1());
    const Weights w4{12.0 / 5.0, 1.0};
    add("shift21-abs-sum-(12/5,1)", bound_abs_sum(P, w4).value / std::sqrt(w4.sum()), std::sqrt(32.0 / 17.0), Relation::equal);
    add("shift21-inf-abs-sum", infimum_mix(P, MixKind::abs_sum).value, std::sqrt(32.0 / 17.0), Relation::equal);
    const auto base = baseline_bounds(P);
    add("shift21-abs-sum-baseline", find_report(base, "half-abs-sum").value, 1.5, Relation::equal);
    add("shift21-power-baseline", find_report(base, "norm-power-mean").value, (2.0 + r2) / 2.0, Relation::equal);
    const SharpnessCondition l2 = condition_sharper(P, w4, SharpVariant::abs_sum);
    add("shift21-abs-sum-norm-B-L", l2.norm_B_L, 4.0, Relation::equal);
    add("shift21-abs-sum-norm-A", l2.norm_A, 9.0 / 4.0, Relation::equal);

    const Weights w5{6.0, 1.0};
    const GramSumBounds e5 = bounds_gram_sum(P, w5);
    add("shift21-gram-sum-(6,1)-squared", e5.upper.value * e5.upper.value / w5.sum(), 16.0 / 7.0, Relation::equal);
    const double inf5 = infimum_mix(P, MixKind::gram_sum).value;
    add("shift21-inf-gram-sum-squared", inf5 * inf5, 16.0 / 7.0, Relation::equal);
    add("shift21-half-S", find_report(base, "half-gram-sum").value, 2.5, Relation::equal);
    add("shift21-gram-sum-below-half-S", e5.upper.value * e5.upper.value / w5.sum(), 2.5, Relation::less);
    const SharpnessCondition l1 = condition_sharper(P, w5, SharpVariant::gram_sum);
    add("shift21-gram-sum-norm-B-L", l1.norm_B_L, 4.0, Relation::equal);
    add("shift21-gram-sum-norm-A", l1.norm_A, 2.5, Relation::equal);

    const Weights wb{12.0, 1.0};
    add("shift21-w(T^2)", P.radius_of_square(), 1.0, Relation::equal);
    add("shift21-square-radius-(12,1)-pencil-norm",
        spectral_norm((wb.alpha / 4.0) * P.gram_sum() + wb.beta * P.gram()), 16.0, Relation::equal);
    const double bz = bound_square_radius(P, wb).value;
    ExampleRow* row = add("shift21-square-radius-(12,1)", bz * bz / wb.sum(), 22.0 / 13.0, Relation::equal);
    row->printed = 16.5 / 13.0;
    row->erratum = true;
    add("shift21-square-radius-(12,1)-below-baseline", bz * bz / wb.sum(), 7.0 / 4.0, Relation::less);
    add("shift21-square-radius-baseline", find_report(base, "square-radius-gram-sum").value, 7.0 / 4.0, Relation::equal);
    const SharpnessCondition l3 = condition_sharper(P, wb, SharpVariant::square_radius);
    add("shift21-square-radius-norm-B-L", l3.norm_B_L, 4.0, Relation::equal);
    add("shift21-square-radius-norm-A", l3.norm_A, 5.0 / 4.0, Relation::equal);
  }
  {
    OperatorProfile P(examples::upper_shift_2_2());
    add("upper-shift-norm", P.norm(), 2.0, Relation::equal);
    add("upper-shift-w", P.radius(), r2, Relation::equal, 1e-6);
    const EqualityCondition e2 = condition_equality(P, EqualityVariant::abs_sum);
    add("upper-shift-abs-sum-holds", e2.holds ? 1.0 : 0.0, 1.0, Relation::equal);
    add("upper-shift-abs-sum-witness-e2", e2.witness ? std::abs((*e2.witness)(1)) : 0.0, 1.0, Relation::equal);
    const Matrix s = P.abs() + P.abs_adjoint();
    add("upper-shift-abs-sum-chain", 0.25 * std::pow(spectral_norm(s), 2), 4.0, Relation::equal);
    const EqualityCondition e1 = condition_equality(P, EqualityVariant::gram_sum);
    add("upper-shift-gram-sum-witness-e2", e1.witness ? std::abs((*e1.witness)(1)) : 0.0, 1.0, Relation::equal);
    add("upper-shift-gram-sum-chain", 0.5 * lambda_max(P.gram_sum()), 4.0, Relation::equal);
  }
  {
    OperatorProfile P(examples::rank_two_example());
    const RefinedLowerBound rl = refined_lower_bound(P);
    const double printed = std::pow((4.0 + 3.0 * r2) / (4.0 + 2.0 * r2), 2);
    add("rank-two-q^2", rl.q_squared, (3.0 + 2.0 * r2) / 4.0, Relation::equal);
    add("rank-two-q^2-printed-form", rl.q_squared, printed, Relation::equal);
    add("rank-two-quarter-S", rl.quarter_s, (2.0 + r2) / 4.0, Relation::equal);
    add("rank-two-q^2-above-quarter-S", rl.q_squared, rl.quarter_s, Relation::greater);
    add("rank-two-H0-invariant", rl.invariant_under_T ? 1.0 : 0.0, 0.0, Relation::equal);
  }
  {
    OperatorProfile P(examples::diag_one_i());
    const auto base = baseline_bounds(P);
    const double classical = std::sqrt(find_report(base, "re-im-squares").value);
    add("diag(1,i)-re-im-(1,0)", bound_re_im(P, {1.0, 0.0}).value, 1.0, Relation::equal);
    add("diag(1,i)-re-im-squares", classical, r2, Relation::equal);
    add("diag(1,i)-re-im-below-squares", bound_re_im(P, {1.0, 0.0}).value, classical, Relation::less);
  }
  return rows;
}

}  // namespace abnorm

#endif  // ABNORM_HARNESS_HPP
