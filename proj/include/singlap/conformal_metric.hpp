#pragma once

#include <functional>
#include <optional>

#include "singlap/angular_profile.hpp"

namespace singlap {

// Which exponent convention the metric was written in. Both describe
// g = e^w (dx^2 + dy^2); the flag records whether the registered u means
// w = u (K = -1/2 e^{-u} Delta u) or w = 2u (K = -e^{-2u} Delta u), so that
// curvature formulas cannot silently pick up a factor of two.
enum class ExponentConvention { kSingleU, kDoubleU };

// Metric conformal to the flat plane on the punctured ball of radius R.
class ConformalMetric2D {
public:
  ConformalMetric2D(std::function<double(double, double)> u, ExponentConvention convention,
                    double puncture_radius);

  static ConformalMetric2D flat(double puncture_radius);
  // w(r,theta) = psi1(theta): purely angular conformal factor.
  static ConformalMetric2D angular(AngularProfile psi1, double puncture_radius);

  // w with g = e^w (dx^2+dy^2)
  double exponent(double r, double theta) const;
  // dw/dr, closed form if registered, else 4th-order central difference
  double exponent_radial_derivative(double r, double theta) const;

  double u(double r, double theta) const;
  // Euclidean Laplacian of u; for angular-only metrics this is exactly
  // u_theta_theta / r^2.
  double u_laplacian(double r, double theta) const;

  void set_u_laplacian(std::function<double(double, double)> lap);
  void set_u_radial_derivative(std::function<double(double, double)> ur);

  bool is_angular() const { return angular_only_.has_value(); }
  const AngularProfile* angular_profile() const {
    return angular_only_ ? &*angular_only_ : nullptr;
  }
  ExponentConvention convention() const { return convention_; }
  double puncture_radius() const { return puncture_radius_; }
  // w = factor * u
  double exponent_factor() const {
    return convention_ == ExponentConvention::kDoubleU ? 2.0 : 1.0;
  }

private:
  std::function<double(double, double)> u_;
  std::function<double(double, double)> u_laplacian_;
  std::function<double(double, double)> u_radial_derivative_;
  std::optional<AngularProfile> angular_only_;
  ExponentConvention convention_ = ExponentConvention::kSingleU;
  double puncture_radius_ = 1.0;
};

// Gauss curvature of the conformal metric at (r,theta), per the convention
// flag. Throws ArgumentError for r <= 0 (the puncture) and EvaluationError
// for a non-finite exponent.
double conformal_gaussian_curvature(const ConformalMetric2D& metric, double r, double theta);

}  // namespace singlap
