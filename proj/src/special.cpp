#include "singlap/special.hpp"

#include <cmath>
#include <limits>

#include "singlap/errors.hpp"

namespace singlap {

namespace {

// Series for P(a,x), stable for x < a+1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for Q(a,x), stable for x >= a+1.
double gamma_q_cf(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-17) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw ArgumentError("incomplete gamma: a must be positive");
  if (x < 0.0) throw ArgumentError("incomplete gamma: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_cf(a, x);
}

double lower_incomplete_gamma(double a, double x) {
  return regularized_gamma_p(a, x) * std::tgamma(a);
}

double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) throw ArgumentError("incomplete gamma: a must be positive");
  if (x < 0.0) throw ArgumentError("incomplete gamma: x must be nonnegative");
  if (x == 0.0) return std::tgamma(a);
  if (x < a + 1.0) return (1.0 - gamma_p_series(a, x)) * std::tgamma(a);
  return gamma_q_cf(a, x) * std::tgamma(a);
}

double gaussian_moment_ck(int k) {
  if (k < 0) throw ArgumentError("gaussian_moment_ck: k must be >= 0");
  return 0.5 * std::tgamma(0.5 * (static_cast<double>(k) + 1.0));
}

}  // namespace singlap
