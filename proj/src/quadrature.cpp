#include "singlap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "singlap/errors.hpp"

namespace singlap {

void QuadratureSpec::validate() const {
  if (n_theta < 16 || n_theta % 2 != 0)
    throw ArgumentError("QuadratureSpec: n_theta must be >= 16 and even");
  if (n_r < 8) throw ArgumentError("QuadratureSpec: n_r must be >= 8");
  if (!(target_rel_tol > 0.0)) throw ArgumentError("QuadratureSpec: target_rel_tol must be > 0");
}

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("gauss_legendre: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton on P_n from the Chebyshev initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

double pairwise_sum(std::span<const double> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double v : terms) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

namespace {

double tensor_value(const std::function<double(double, double)>& integrand, double r_lo,
                    double r_hi, int n_theta, int n_r) {
  const auto& gl = gauss_legendre(n_r);
  const double mid = 0.5 * (r_lo + r_hi);
  const double halfwidth = 0.5 * (r_hi - r_lo);
  const double theta_weight = 2.0 * std::numbers::pi / n_theta;

  std::vector<double> theta_sums(n_theta);
  std::vector<double> row(n_r);
  for (int i = 0; i < n_theta; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n_theta;
    for (int j = 0; j < n_r; ++j) {
      const double r = mid + halfwidth * gl.nodes[j];
      const double v = integrand(r, theta);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrate_polar: non-finite integrand at r=" << r << " theta=" << theta;
        throw NumericalError(msg.str());
      }
      row[j] = v * gl.weights[j];
    }
    theta_sums[i] = pairwise_sum(row) * halfwidth;
  }
  return pairwise_sum(theta_sums) * theta_weight;
}

}  // namespace

IntegralResult integrate_polar(const std::function<double(double, double)>& integrand,
                               double r_lo, double r_hi, const QuadratureSpec& spec) {
  if (!(r_lo >= 0.0)) throw ArgumentError("integrate_polar: need 0 <= r_lo < r_hi");
  return integrate_tensor(integrand, r_lo, r_hi, spec);
}

IntegralResult integrate_tensor(const std::function<double(double, double)>& integrand,
                                double x_lo, double x_hi, const QuadratureSpec& spec) {
  spec.validate();
  if (!(x_hi > x_lo)) throw ArgumentError("integrate_tensor: need x_lo < x_hi");
  const double base = tensor_value(integrand, x_lo, x_hi, spec.n_theta, spec.n_r);
  const double refined = tensor_value(integrand, x_lo, x_hi, 2 * spec.n_theta, 2 * spec.n_r);
  return {refined, std::abs(refined - base)};
}

double integrate_periodic(const std::function<double(double)>& f, int n) {
  if (n < 2) throw ArgumentError("integrate_periodic: n must be >= 2");
  std::vector<double> terms(n);
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n;
    const double v = f(theta);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrate_periodic: non-finite integrand at theta=" << theta;
      throw NumericalError(msg.str());
    }
    terms[i] = v;
  }
  return pairwise_sum(terms) * (2.0 * std::numbers::pi / n);
}

}  // namespace singlap
