// Loads a matrix (default: the 3x3 weighted shift with weights 2, 1) and
// prints its (alpha,beta)-norm next to the main upper bounds and infima.

#include <cstdio>
#include <string>

#include "abnorm/abnorm.hpp"

int main(int argc, char** argv) {
  using namespace abnorm;
  const Matrix T = argc > 1 ? load_matrix(argv[1]) : weighted_shift(3, {2.0, 1.0});
  OperatorProfile P(T);

  std::printf("||T|| = %.10f   w(T) = %.10f   c(T) = %.10f\n\n", P.norm(), P.radius(), P.crawford());

  std::printf("%10s %14s %14s %14s %14s\n", "(a,b)", "norm", "abs-sum", "gram-sum upper", "square-radius");
  for (const Weights& w : default_weights()) {
    std::printf("(%3g,%3g) %14.10f %14.10f %14.10f %14.10f\n", w.alpha, w.beta, P.alpha_beta_norm(w),
                bound_abs_sum(P, w).value, bounds_gram_sum(P, w).upper.value, bound_square_radius(P, w).value);
  }

  std::printf("\nbounds on w(T) minimized over the weights:\n");
  for (MixKind k : {MixKind::abs_sum, MixKind::gram_sum, MixKind::square_radius, MixKind::re_im}) {
    const BoundReport r = infimum_mix(P, k);
    std::printf("  %-12s %.10f at t = %.6f (t = 1 gives %.10f)\n", r.name.c_str(), r.value, r.mix->t, *r.compared_to);
  }
  return 0;
}
