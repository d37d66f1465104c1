#pragma once

#include <functional>
#include <span>
#include <vector>

namespace singlap {

// Tensor rule: uniform periodic trapezoid in theta on [0,2pi), Gauss-Legendre
// in r. Spectrally accurate for integrands smooth in theta and analytic in r.
struct QuadratureSpec {
  int n_theta = 512;
  int n_r = 2000;
  double target_rel_tol = 1e-10;

  void validate() const;  // n_theta >= 16 and even, n_r >= 8
};

struct IntegralResult {
  double value = 0.0;
  double err_est = 0.0;
};

// Gauss-Legendre nodes/weights on [-1,1]; cached per n, thread-safe.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

// Deterministic pairwise (tree) reduction; result independent of how the
// terms were produced as long as their order is fixed.
double pairwise_sum(std::span<const double> terms);

// Integrates f(r,theta) over [r_lo,r_hi] x [0,2pi). The integrand is sampled
// theta-major (all r nodes for one theta before the next), so callers may
// memoize per-theta work. value comes from the (2 n_theta, 2 n_r) refinement,
// err_est from its difference with the base rule. Throws NumericalError if a
// sample is non-finite.
IntegralResult integrate_polar(const std::function<double(double, double)>& integrand,
                               double r_lo, double r_hi, const QuadratureSpec& spec);

// Same rule without the nonnegativity requirement on the first coordinate
// (used for substituted variables, e.g. log-radius).
IntegralResult integrate_tensor(const std::function<double(double, double)>& integrand,
                                double x_lo, double x_hi, const QuadratureSpec& spec);

// Periodic trapezoid of f over [0,2pi) with n nodes.
double integrate_periodic(const std::function<double(double)>& f, int n);

}  // namespace singlap
