#include "singlap/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "singlap/errors.hpp"

namespace singlap {

double curvature_function(const ConformalMetric2D& metric, double s, double eps, int theta_grid,
                          int r_grid) {
  if (!(s > 0.0) || !(s < eps)) throw ArgumentError("curvature_function: need 0 < s < eps");
  if (!(eps <= metric.puncture_radius()))
    throw ArgumentError("curvature_function: eps exceeds the metric domain radius");
  if (theta_grid < 64 || r_grid < 64)
    throw ArgumentError("curvature_function: grid sizes must be >= 64");

  const double log_lo = std::log(s);
  const double log_hi = std::log(eps);
  double sup = 0.0;
  for (int j = 0; j < r_grid; ++j) {
    const double r = std::exp(log_lo + (log_hi - log_lo) * j / (r_grid - 1.0));
    for (int i = 0; i < theta_grid; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / theta_grid;
      sup = std::max(sup, std::abs(conformal_gaussian_curvature(metric, r, theta)));
    }
  }
  return sup;
}

CurvatureProfile compute_curvature_profile(const ConformalMetric2D& metric, double s_min,
                                           double s_max, int n_points, double eps,
                                           int theta_grid, int r_grid) {
  if (!(s_min > 0.0 && s_min < s_max && s_max < eps))
    throw ArgumentError("compute_curvature_profile: need 0 < s_min < s_max < eps");
  if (n_points < 2) throw ArgumentError("compute_curvature_profile: need >= 2 points");

  CurvatureProfile profile;
  profile.annulus_outer = eps;
  profile.theta_grid_size = theta_grid;
  profile.r_grid_size = r_grid;
  profile.s_values.resize(n_points);
  profile.kappa_values.resize(n_points);
  const double log_lo = std::log(s_min);
  const double log_hi = std::log(s_max);
  for (int k = 0; k < n_points; ++k) {
    // decreasing grid: k = 0 is s_max
    const double s = std::exp(log_hi + (log_lo - log_hi) * k / (n_points - 1.0));
    profile.s_values[k] = s;
    profile.kappa_values[k] = curvature_function(metric, s, eps, theta_grid, r_grid);
  }
  // sup over a growing annulus: enforce monotonicity against grid noise
  for (int k = 1; k < n_points; ++k)
    profile.kappa_values[k] = std::max(profile.kappa_values[k], profile.kappa_values[k - 1]);
  return profile;
}

namespace {

void validate_profile(const CurvatureProfile& profile, int min_points) {
  const auto n = profile.s_values.size();
  if (n != profile.kappa_values.size())
    throw ArgumentError("CurvatureProfile: size mismatch between s and kappa");
  if (static_cast<int>(n) < min_points)
    throw ArgumentError("CurvatureProfile: too few points");
  for (std::size_t k = 1; k < n; ++k)
    if (!(profile.s_values[k] < profile.s_values[k - 1]))
      throw ArgumentError("CurvatureProfile: s grid must be strictly decreasing");
}

// slope/r^2 of log kappa against log s over [lo, hi) indices, skipping
// nonpositive kappa entries. Returns false if fewer than two usable points.
bool log_log_fit(const CurvatureProfile& p, std::size_t lo, std::size_t hi, double* slope,
                 double* r_squared) {
  std::vector<double> xs, ys;
  for (std::size_t k = lo; k < hi; ++k) {
    if (p.kappa_values[k] > 0.0) {
      xs.push_back(std::log(p.s_values[k]));
      ys.push_back(std::log(p.kappa_values[k]));
    }
  }
  if (xs.size() < 2) return false;
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return false;
  *slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - *slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = *slope * xs[i] + intercept;
    ss_res += (ys[i] - fit) * (ys[i] - fit);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  *r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return true;
}

}  // namespace

MomentClassification curvature_moment_classifier(const CurvatureProfile& profile) {
  validate_profile(profile, 20);
  const auto& s = profile.s_values;
  const auto& kappa = profile.kappa_values;
  if (!(s.front() / s.back() >= 1e3 * (1.0 - 1e-9)))
    throw ArgumentError("curvature_moment_classifier: s grid must span >= 3 decades");

  bool any_nonpositive = false, any_huge = false;
  for (double k : kappa) {
    if (!(k > 0.0)) any_nonpositive = true;
    if (k > 1e15) any_huge = true;
  }
  if (any_nonpositive && any_huge)
    throw ConditioningError("curvature_moment_classifier: mixed zero and huge kappa values");

  const double s_min = s.back();
  const double kappa_max = *std::max_element(kappa.begin(), kappa.end());
  if (kappa_max == 0.0) return {MomentClassification::Kind::kFinite, 0.0, 0.0};

  // power-law fit kappa ~ A s^-alpha on the smallest decade
  std::size_t lo = s.size();
  while (lo > 0 && s[lo - 1] <= 10.0 * s_min * (1.0 + 1e-12)) --lo;
  double slope = 0.0, r2 = 0.0;
  double alpha = 0.0;
  if (log_log_fit(profile, lo, s.size(), &slope, &r2)) alpha = -slope;

  constexpr double kTol = 0.05;
  if (alpha >= 2.0 - kTol)
    return {MomentClassification::Kind::kInfinite, 0.0, alpha};

  // trapezoid of s*kappa(s) ds = s^2 kappa(s) d(log s) on the log grid
  double integral = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double dlog = std::log(s[k - 1]) - std::log(s[k]);
    const double f_hi = s[k - 1] * s[k - 1] * kappa[k - 1];
    const double f_lo = s[k] * s[k] * kappa[k];
    integral += 0.5 * (f_hi + f_lo) * dlog;
  }
  // extrapolated tail below s_min under the fitted power law
  const double a_coeff = kappa.back() * std::pow(s_min, alpha);
  integral += a_coeff * std::pow(s_min, 2.0 - alpha) / (2.0 - alpha);
  return {MomentClassification::Kind::kFinite, integral, alpha};
}

GrowthFit curvature_growth_exponent(const CurvatureProfile& profile) {
  validate_profile(profile, 5);
  const double kappa_max =
      *std::max_element(profile.kappa_values.begin(), profile.kappa_values.end());
  if (kappa_max <= 0.0) return {0.0, 1.0};  // flat curvature: bounded, no growth
  double slope = 0.0, r2 = 0.0;
  if (!log_log_fit(profile, 0, profile.s_values.size(), &slope, &r2))
    return {0.0, 1.0};
  return {-slope, r2};
}

ExtendabilityResult extendability_check(const AngularProfile& psi1, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("extendability_check: tol must be > 0");
  const double osc = psi1.oscillation(4096);
  return {osc <= tol, osc};
}

}  // namespace singlap
