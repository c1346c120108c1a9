// Command-line front end: norms, bounds, infima, verification campaigns,
// the worked-example table, lemma checks and infimum-curve sweeps.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input or usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abnorm/abnorm.hpp"

namespace {

using namespace abnorm;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json certificate_json(const NormCertificate& c) {
  return {{"value", c.value}, {"method", to_string(c.method)}, {"iterations", c.iterations},
          {"witness", vector_json(c.witness)}};
}

void print_bound_table(const std::vector<BoundReport>& rows) {
  std::printf("%-28s %-12s %20s %20s\n", "bound", "quantity", "value", "baseline");
  for (const auto& r : rows) {
    std::printf("%-28s %-12s %20s %20s%s\n", r.name.c_str(), r.quantity.c_str(), fmt(r.value).c_str(),
                r.compared_to ? fmt(*r.compared_to).c_str() : "-",
                r.strict_improvement && *r.strict_improvement ? "  (strictly better)" : "");
  }
}

void print_campaign_summary(const char* label, const CampaignResult& r) {
  std::printf("%s: %zu matrices, %zu checks, %zu failures\n", label, r.reports.size(), r.checks, r.failures);
  std::size_t shown = 0;
  for (const auto& rep : r.reports) {
    for (const auto& c : rep.checks) {
      if (c.pass || shown >= 20) continue;
      ++shown;
      std::printf("  FAIL %s %s lhs=%s rhs=%s slack=%.3g tol=%.3g\n", rep.matrix_id.c_str(), c.name.c_str(),
                  fmt(c.lhs).c_str(), fmt(c.rhs).c_str(), c.slack, c.tol);
    }
    for (const auto& n : rep.notes) std::printf("  note %s: %s\n", rep.matrix_id.c_str(), n.c_str());
  }
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
         dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const InvalidWeights*>(&e) ||
         dynamic_cast<const InvalidParams*>(&e) || dynamic_cast<const InvalidSpec*>(&e) ||
         dynamic_cast<const UnsupportedDimension*>(&e) || dynamic_cast<const NonHermitianInput*>(&e);
}

std::vector<Eigen::Index> parse_dims(const std::string& list) {
  std::vector<Eigen::Index> dims;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long d = 0;
    try {
      d = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InvalidParams("bad dimension '" + item + "'");
    }
    if (used != item.size() || d < 1) throw InvalidParams("bad dimension '" + item + "'");
    dims.push_back(d);
  }
  if (dims.empty()) throw InvalidParams("empty dimension list");
  return dims;
}

GeneratorKind parse_kind(const std::string& s) {
  for (GeneratorKind k : {GeneratorKind::ginibre, GeneratorKind::normal, GeneratorKind::hermitian,
                          GeneratorKind::unitary, GeneratorKind::nilpotent_shift}) {
    if (s == to_string(k)) return k;
  }
  throw InvalidParams("unknown matrix generator '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(alpha,beta)-norm and numerical radius bounds for complex matrices"};
  app.require_subcommand(1);

  std::string input;
  double alpha = 1.0, beta = 0.0, gamma = 0.5, tol = 1e-7, infimum_tol = 1e-10;
  int restarts = 32, count = 20, steps = 101, threads = 1, trials = 10000;
  std::uint64_t seed = 42;
  bool as_json = false, use_oracle = false, with_pairs = false, timing = false;
  std::string kind = "abs-sum", dims = "2,3,4,6", out_path, matrix_kind;

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", input, "matrix file (.json or .csv)")->required(); };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--alpha,-a", alpha, "weight alpha >= 0")->required();
    sub->add_option("--beta,-b", beta, "weight beta >= 0")->required();
  };

  auto* norms = app.add_subcommand("norms", "operator norm, spectral radius, numerical radius, Crawford number");
  add_input(norms);
  norms->add_option("--tol", tol, "tolerance for the normaloid test");
  norms->add_flag("--json", as_json);

  auto* ab = app.add_subcommand("alphabeta", "the (alpha,beta)-norm by multi-start sphere ascent");
  add_input(ab);
  add_weights(ab);
  ab->add_option("--restarts", restarts, "ascent restarts")->check(CLI::PositiveNumber);
  ab->add_option("--seed", seed, "seed for random restarts");
  ab->add_flag("--oracle", use_oracle, "also run the brute-force oracle (n = 2 or 3)");
  ab->add_flag("--json", as_json);

  auto* bounds = app.add_subcommand("bounds", "every bound at one weight pair");
  add_input(bounds);
  add_weights(bounds);
  bounds->add_option("--gamma", gamma, "exponent of f(t) = t^gamma, g(t) = t^(1-gamma)");
  bounds->add_flag("--json", as_json);

  auto* inf = app.add_subcommand("infimum", "infimum of a weighted bound on w(T) over the weights");
  add_input(inf);
  inf->add_option("--kind", kind, "abs-sum | gram-sum | square-radius | re-im")->required();
  inf->add_option("--tol", infimum_tol, "golden-section tolerance in t");
  inf->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "verification campaign over seeded random matrices");
  verify->add_option("--dims", dims, "comma-separated dimensions");
  verify->add_option("--count", count, "matrices per dimension")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--tol", tol, "relative tolerance of optimizer-backed inequalities");
  verify->add_option("--threads", threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  verify->add_option("--restarts", restarts, "ascent restarts per norm")->check(CLI::PositiveNumber);
  verify->add_flag("--pairs", with_pairs, "also verify product bounds on hypothesis pairs");
  verify->add_flag("--json", as_json, "emit every report");
  verify->add_flag("--timing", timing, "include elapsed times in JSON output");

  auto* worked = app.add_subcommand("examples", "table of the worked examples");
  worked->add_flag("--json", as_json);

  auto* sweep = app.add_subcommand("sweep", "CSV of the infimum curve h(t) on a uniform t grid");
  add_input(sweep);
  sweep->add_option("--kind", kind, "abs-sum | gram-sum | square-radius | re-im")->required();
  sweep->add_option("--steps", steps, "grid points (>= 2)")->required();
  sweep->add_option("--out", out_path, "output CSV file (stdout when omitted)");

  auto* lemmas = app.add_subcommand("lemmas", "random instances of the auxiliary inequalities");
  lemmas->add_option("--seed", seed);
  lemmas->add_option("--count", count)->check(CLI::NonNegativeNumber);
  lemmas->add_flag("--json", as_json);

  auto* sharp = app.add_subcommand("sharpness", "how often the infimum bounds strictly beat their baselines");
  sharp->add_option("--dims", dims);
  sharp->add_option("--count", count)->check(CLI::NonNegativeNumber);
  sharp->add_option("--seed", seed);
  sharp->add_option("--generator", matrix_kind, "ginibre | normal | hermitian | unitary | nilpotent-shift");
  sharp->add_flag("--json", as_json);

  auto* counter = app.add_subcommand("counterexamples", "bounded search for failures of submultiplicativity");
  counter->add_option("--trials", trials)->check(CLI::PositiveNumber);
  counter->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*norms) {
      const Matrix T = load_matrix(input);
      const NormCertificate nc = operator_norm(T);
      const NormCertificate wc = numerical_radius(T);
      const NormCertificate cc = crawford_number(T);
      const double r = spectral_radius(T);
      const bool normaloid = std::abs(wc.value - nc.value) <= tol * (1.0 + nc.value);
      const NormCertificate dw = alpha_beta_norm(T, {1.0, 1.0}, OptimizerOptions{}, nc, wc);
      if (as_json) {
        print_json({{"n", T.rows()},
                    {"operator_norm", certificate_json(nc)},
                    {"spectral_radius", r},
                    {"numerical_radius", certificate_json(wc)},
                    {"crawford_number", certificate_json(cc)},
                    {"modified_davis_wielandt", certificate_json(dw)},
                    {"normaloid", normaloid}});
      } else {
        std::printf("operator norm      %s\n", fmt(nc.value).c_str());
        std::printf("spectral radius    %s\n", fmt(r).c_str());
        std::printf("numerical radius   %s\n", fmt(wc.value).c_str());
        std::printf("Crawford number    %s\n", fmt(cc.value).c_str());
        std::printf("dw*(T)             %s\n", fmt(dw.value).c_str());
        std::printf("normaloid          %s\n", normaloid ? "yes" : "no");
      }
      return kExitOk;
    }

    if (*ab) {
      const Matrix T = load_matrix(input);
      OptimizerOptions o;
      o.restarts = restarts;
      o.seed = seed;
      const NormCertificate c = alpha_beta_norm(T, {alpha, beta}, o);
      std::optional<double> oracle;
      if (use_oracle) oracle = alpha_beta_norm_oracle(T, {alpha, beta});
      if (as_json) {
        json j = {{"alpha", alpha}, {"beta", beta}, {"norm", certificate_json(c)}};
        if (oracle) j["oracle"] = *oracle;
        print_json(j);
      } else {
        std::printf("||T||_(%g,%g) = %s  (%d ascent iterations)\n", alpha, beta, fmt(c.value).c_str(), c.iterations);
        if (oracle) std::printf("oracle          = %s  (difference %.3g)\n", fmt(*oracle).c_str(), *oracle - c.value);
      }
      return kExitOk;
    }

    if (*bounds) {
      OperatorProfile P(load_matrix(input));
      const Weights w{alpha, beta};
      std::vector<BoundReport> rows = equivalence_bounds(P, w);
      rows.push_back(lower_bound_crawford(P, w));
      rows.push_back(bound_abs_sum(P, w, gamma));
      const GramSumBounds e5 = bounds_gram_sum(P, w);
      rows.insert(rows.end(), {e5.lower_half, e5.lower_third, e5.upper});
      rows.push_back(bound_square_radius(P, w));
      rows.push_back(bound_re_im(P, w));
      for (MixKind k : {MixKind::abs_sum, MixKind::gram_sum, MixKind::square_radius, MixKind::re_im}) rows.push_back(infimum_mix(P, k));
      const auto base = baseline_bounds(P);
      rows.insert(rows.end(), base.begin(), base.end());
      const RefinedLowerBound rl = refined_lower_bound(P);
      BoundReport refined{"refined-lower", rl.value, "w^2"};
      refined.compare_lower(rl.quarter_s);
      rows.push_back(refined);
      const double norm_ab = P.alpha_beta_norm(w);
      if (as_json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(bound_to_json(r));
        print_json({{"alpha", alpha}, {"beta", beta}, {"norm_ab", norm_ab}, {"w", P.radius()},
                    {"operator_norm", P.norm()}, {"bounds", arr}});
      } else {
        std::printf("||T||_(%g,%g) = %s   w(T) = %s   ||T|| = %s\n\n", alpha, beta, fmt(norm_ab).c_str(),
                    fmt(P.radius()).c_str(), fmt(P.norm()).c_str());
        print_bound_table(rows);
      }
      return kExitOk;
    }

    if (*inf) {
      OperatorProfile P(load_matrix(input));
      const BoundReport r = infimum_mix(P, parse_mix_kind(kind), infimum_tol);
      if (as_json) {
        print_json(bound_to_json(r));
      } else {
        std::printf("%s: w(T) <= %s at t = alpha/(alpha+beta) = %s\n", r.name.c_str(), fmt(r.value).c_str(),
                    fmt(r.mix->t).c_str());
        std::printf("t = 1 baseline: %s%s\n", fmt(*r.compared_to).c_str(),
                    *r.strict_improvement ? "  (strictly improved)" : "");
      }
      return kExitOk;
    }

    if (*verify) {
      CampaignOptions o;
      o.dims = parse_dims(dims);
      o.count = count;
      o.seed = seed;
      o.threads = threads;
      o.verify.tol.inequality = tol;
      o.verify.profile.optimizer.restarts = restarts;
      const CampaignResult single = campaign(o);
      std::optional<CampaignResult> pairs;
      if (with_pairs) {
        CampaignOptions po = o;
        po.kinds = default_pair_kinds();
        pairs = pair_campaign(po);
      }
      const bool ok = single.passed() && (!pairs || pairs->passed());
      if (as_json) {
        json j = {{"seed", seed}, {"matrices", campaign_to_json(single, timing)}};
        if (pairs) j["pairs"] = campaign_to_json(*pairs, timing);
        j["passed"] = ok;
        print_json(j);
      } else {
        print_campaign_summary("matrices", single);
        if (pairs) print_campaign_summary("pairs", *pairs);
        std::printf("%s\n", ok ? "all checks passed" : "VERIFICATION FAILED");
      }
      return ok ? kExitOk : kExitFailed;
    }

    if (*worked) {
      const auto rows = worked_examples();
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.pass;
      if (as_json) {
        json arr = json::array();
        for (const auto& r : rows) {
          json j = {{"case", r.case_name}, {"computed", r.computed},   {"expected", r.expected},
                    {"relation", to_string(r.relation)}, {"erratum", r.erratum},
                    {"tol", r.tol}, {"pass", r.pass}};
          if (r.printed) j["printed"] = *r.printed;
          arr.push_back(j);
        }
        print_json(arr);
      } else {
        std::printf("%-44s %18s %3s %18s  %-5s %s\n", "case", "computed", "", "expected", "pass", "note");
        for (const auto& r : rows) {
          std::string note;
          if (r.erratum) note = "printed value " + fmt(*r.printed) + " disagrees with the formula";
          std::printf("%-44s %18s %3s %18s  %-5s %s\n", r.case_name.c_str(), fmt(r.computed).c_str(),
                      to_string(r.relation), fmt(r.expected).c_str(), r.pass ? "yes" : "NO", note.c_str());
        }
      }
      return ok ? kExitOk : kExitFailed;
    }

    if (*sweep) {
      OperatorProfile P(load_matrix(input));
      const auto rows = sweep_mix(P, parse_mix_kind(kind), steps);
      if (out_path.empty()) {
        write_sweep_csv(rows, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write " + out_path);
        write_sweep_csv(rows, out);
      }
      return kExitOk;
    }

    if (*lemmas) {
      const VerificationReport rep = lemma_checks(seed, count);
      if (as_json) {
        print_json(report_to_json(rep));
      } else {
        double worst = 0.0;
        for (const auto& c : rep.checks) worst = std::min(worst, c.slack);
        std::printf("%zu checks, %zu failures, smallest slack %.3g\n", rep.checks.size(), rep.failures(), worst);
      }
      return rep.passed() ? kExitOk : kExitFailed;
    }

    if (*sharp) {
      const std::vector<GeneratorKind> kinds =
          matrix_kind.empty() ? default_matrix_kinds() : std::vector<GeneratorKind>{parse_kind(matrix_kind)};
      const auto stats = sharpness_campaign(parse_dims(dims), count, seed, kinds);
      if (as_json) {
        json j = json::object();
        for (const auto& [name, s] : stats) {
          j[name] = {{"evaluated", s.evaluated}, {"improved", s.improved}, {"tied", s.tied}, {"mean_gap", s.mean_gap}};
        }
        print_json(j);
      } else {
        std::printf("%-16s %10s %10s %10s %14s\n", "bound", "evaluated", "improved", "tied", "mean rel. gap");
        for (const auto& [name, s] : stats) {
          std::printf("%-16s %10zu %10zu %10zu %14.6g\n", name.c_str(), s.evaluated, s.improved, s.tied, s.mean_gap);
        }
      }
      return kExitOk;
    }

    if (*counter) {
      const ProductViolation fixed = algebra_norm_counterexample();
      std::printf("fixed pair, (1,0): ||AB|| = %s > ||A||*||B|| = %s\n", fmt(fixed.norm_product).c_str(),
                  fmt(fixed.product_norms).c_str());
      const CounterexampleSearch s = search_counterexamples(trials, seed);
      std::printf("random search, %d trials:\n", s.trials);
      auto show = [](const char* what, bool found) { std::printf("  %-34s %s\n", what, found ? "found" : "not found"); };
      show("||AB|| > ||A|| ||B||", s.product.has_value());
      show("||A^k|| < ||A||^k", s.power_below.has_value());
      show("||A^k|| > ||A||^k", s.power_above.has_value());
      if (s.product) {
        std::printf("  product violation at (%g,%g): %s > %s\n", s.product->weights.alpha, s.product->weights.beta,
                    fmt(s.product->norm_product).c_str(), fmt(s.product->product_norms).c_str());
      }
      if (s.power_below) {
        std::printf("  power violation (k=%d) at (%g,%g): %s < %s\n", s.power_below->power,
                    s.power_below->weights.alpha, s.power_below->weights.beta,
                    fmt(s.power_below->norm_of_power).c_str(), fmt(s.power_below->power_of_norm).c_str());
      }
      if (s.power_above) {
        std::printf("  power violation (k=%d) at (%g,%g): %s > %s\n", s.power_above->power,
                    s.power_above->weights.alpha, s.power_above->weights.beta,
                    fmt(s.power_above->norm_of_power).c_str(), fmt(s.power_above->power_of_norm).c_str());
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << (is_input_error(e) ? "input error: " : "error: ") << e.what() << '\n';
    return is_input_error(e) ? kExitInput : kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}
