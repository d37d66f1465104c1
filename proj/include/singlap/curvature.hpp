#pragma once

#include <vector>

#include "singlap/angular_profile.hpp"
#include "singlap/conformal_metric.hpp"

namespace singlap {

// sup |K| over the annulus s < r < eps, approximated by maximizing over a
// theta x log-spaced-r tensor grid.
double curvature_function(const ConformalMetric2D& metric, double s, double eps,
                          int theta_grid = 512, int r_grid = 512);

// kappa(s) sampled on a decreasing grid of radii, all against one outer
// annulus radius eps.
struct CurvatureProfile {
  std::vector<double> s_values;      // decreasing
  std::vector<double> kappa_values;  // nondecreasing as s decreases
  double annulus_outer = 0.0;        // eps
  int theta_grid_size = 512;
  int r_grid_size = 512;
};

// Log-spaced s grid from s_max down to s_min, n_points entries.
CurvatureProfile compute_curvature_profile(const ConformalMetric2D& metric, double s_min,
                                           double s_max, int n_points, double eps,
                                           int theta_grid = 512, int r_grid = 512);

struct MomentClassification {
  enum class Kind { kFinite, kInfinite };
  Kind kind = Kind::kFinite;
  double value = 0.0;                // finite case: integral incl. extrapolated tail
  double divergence_exponent = 0.0;  // fitted alpha of kappa ~ A s^-alpha
};

// Decides whether int_0^eps s kappa(s) ds converges: trapezoid on the log
// grid plus a power-law fit on the smallest decade; INFINITE iff the fitted
// exponent alpha >= 2 - 0.05.
MomentClassification curvature_moment_classifier(const CurvatureProfile& profile);

struct GrowthFit {
  double alpha = 0.0;  // kappa ~ A s^-alpha, alpha = -slope of log kappa vs log s
  double r_squared = 1.0;
};

GrowthFit curvature_growth_exponent(const CurvatureProfile& profile);

struct ExtendabilityResult {
  bool extends = false;
  double oscillation = 0.0;  // max - min of Psi_1 over a 4096-point grid
};

// The angular factor extends across the puncture iff it is constant;
// numerically, iff its grid oscillation is within tol.
ExtendabilityResult extendability_check(const AngularProfile& psi1, double tol);

}  // namespace singlap
