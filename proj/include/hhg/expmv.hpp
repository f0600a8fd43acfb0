#ifndef HHG_EXPMV_HPP
#define HHG_EXPMV_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "hhg/errors.hpp"

namespace hhg {

// Action of exp(A) on a block of vectors by scaled truncated Taylor series,
// following Al-Mohy & Higham (2011). The caller provides apply(B) -> A*B and
// a bound on ||A||_1; (s, m) are chosen from the double-precision theta table
// so that each of the s substeps converges within m terms.
namespace expmv_detail {

struct Choice {
  int m = 30;
  int s = 1;
};

inline Choice choose(double norm1) {
  // theta_m for tol = 2^-53, Al-Mohy & Higham 2011, Table 3.1 (subset)
  static constexpr int ms[] = {5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55};
  static constexpr double thetas[] = {0.24, 1.0, 2.2, 3.6, 4.9, 6.3,
                                      7.7, 9.1, 10.6, 12.0, 13.2};
  Choice best;
  double best_cost = -1.0;
  for (int i = 0; i < 11; ++i) {
    const int s = std::max(1, static_cast<int>(std::ceil(norm1 / thetas[i])));
    const double cost = static_cast<double>(s) * ms[i];
    if (best_cost < 0.0 || cost < best_cost) {
      best_cost = cost;
      best = {ms[i], s};
    }
  }
  return best;
}

} // namespace expmv_detail

// B <- exp(A) B. apply must implement B -> A*B on an Eigen matrix block.
template <class ApplyFn>
void expmv_inplace(ApplyFn&& apply, double norm1, Eigen::MatrixXcd& B) {
  if (!(norm1 >= 0.0)) throw argument_error("expmv: invalid norm bound");
  const auto [m, s] = expmv_detail::choose(norm1);
  const double inv_s = 1.0 / s;
  const double tol = 1.1e-16; // relative, with two-consecutive-terms stopping
  for (int sub = 0; sub < s; ++sub) {
    Eigen::MatrixXcd y = B;
    Eigen::MatrixXcd term = B;
    double prev = -1.0;
    for (int k = 1; k <= 2 * m + 10; ++k) {
      Eigen::MatrixXcd At = apply(term);
      term = (inv_s / k) * At;
      y += term;
      const double tn = term.cwiseAbs().maxCoeff();
      const double yn = y.cwiseAbs().maxCoeff();
      if (prev >= 0.0 && tn + prev <= tol * yn) break;
      if (k == 2 * m + 10)
        throw convergence_error("expmv: Taylor series failed to converge within budget");
      prev = tn;
    }
    B = y;
  }
}

} // namespace hhg

#endif
