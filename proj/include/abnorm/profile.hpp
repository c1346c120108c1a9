#ifndef ABNORM_PROFILE_HPP
#define ABNORM_PROFILE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "abnorm/alphabeta.hpp"
#include "abnorm/linalg.hpp"
#include "abnorm/norms.hpp"

namespace abnorm {

struct ProfileOptions {
  SweepOptions sweep;
  OptimizerOptions optimizer;
  bool post_checks = true;
};

/// Lazily computed derived matrices and scalars of one operator T.
///
/// Every bound evaluates a handful of the same quantities (T*T, |T|, w(T),
/// ‖T‖_{α,β}, ...); the profile computes each at most once. Not thread-safe:
/// use one profile per thread.
class OperatorProfile {
 public:
  explicit OperatorProfile(Matrix T, ProfileOptions opts = {}) : T_(std::move(T)), opts_(std::move(opts)) {
    require_square(T_, "operator");
  }

  const Matrix& op() const { return T_; }
  Eigen::Index dim() const { return T_.rows(); }
  const ProfileOptions& options() const { return opts_; }

  const Matrix& gram() { return lazy(gram_, [&] { return Matrix(T_.adjoint() * T_); }); }
  const Matrix& cogram() { return lazy(cogram_, [&] { return Matrix(T_ * T_.adjoint()); }); }
  /// S = T*T + TT*.
  const Matrix& gram_sum() { return lazy(gram_sum_, [&] { return Matrix(gram() + cogram()); }); }
  const Matrix& abs() { return lazy(abs_, [&] { return psd_function(gram(), SqrtFn{}); }); }
  const Matrix& abs_adjoint() { return lazy(abs_adj_, [&] { return psd_function(cogram(), SqrtFn{}); }); }
  const Matrix& square() { return lazy(square_, [&] { return Matrix(T_ * T_); }); }
  const Matrix& re() { return lazy(re_, [&] { return real_part(T_); }); }
  const Matrix& im() { return lazy(im_, [&] { return imag_part(T_); }); }

  /// Installs known ‖T‖ and w(T) certificates, e.g. transported from a unitarily similar operator.
  void adopt(NormCertificate norm, NormCertificate radius) {
    norm_ = std::move(norm);
    radius_ = std::move(radius);
  }

  const NormCertificate& norm_cert() { return lazy(norm_, [&] { return operator_norm(T_); }); }
  double norm() { return norm_cert().value; }

  const NormCertificate& radius_cert() {
    return lazy(radius_, [&] { return numerical_radius(T_, sweep_options()); });
  }
  double radius() { return radius_cert().value; }

  double crawford() {
    return lazy(crawford_, [&] { return crawford_number(T_, sweep_options()).value; });
  }
  double spectral_radius() {
    return lazy(spectral_radius_, [&] { return abnorm::spectral_radius(T_); });
  }
  /// w(T²).
  double radius_of_square() {
    return lazy(radius_sq_, [&] { return numerical_radius(square(), sweep_options()).value; });
  }
  /// c(T*T) = λ_min(T*T).
  double gram_min() {
    return lazy(gram_min_, [&] { return std::max(0.0, lambda_min(gram())); });
  }

  const NormCertificate& alpha_beta(const Weights& w) {
    w.validate();
    for (const auto& [key, cert] : ab_cache_) {
      if (key.alpha == w.alpha && key.beta == w.beta) return cert;
    }
    OptimizerOptions o = opts_.optimizer;
    o.post_check = o.post_check && opts_.post_checks;
    ab_cache_.emplace_back(w, abnorm::alpha_beta_norm(T_, w, o, norm_cert(), radius_cert()));
    return ab_cache_.back().second;
  }
  double alpha_beta_norm(const Weights& w) { return alpha_beta(w).value; }

 private:
  template <typename V, typename F>
  static const V& lazy(std::optional<V>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  SweepOptions sweep_options() const {
    SweepOptions s = opts_.sweep;
    s.post_check = s.post_check && opts_.post_checks;
    return s;
  }

  Matrix T_;
  ProfileOptions opts_;
  std::optional<Matrix> gram_, cogram_, gram_sum_, abs_, abs_adj_, square_, re_, im_;
  std::optional<NormCertificate> norm_, radius_;
  std::optional<double> crawford_, spectral_radius_, radius_sq_, gram_min_;
  std::vector<std::pair<Weights, NormCertificate>> ab_cache_;
};

}  // namespace abnorm

#endif  // ABNORM_PROFILE_HPP
