#include "singlap/angular_profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "singlap/errors.hpp"

namespace singlap {

AngularProfile::AngularProfile(std::function<double(double)> eval, Smoothness s)
    : eval_(std::move(eval)), smoothness_(s) {
  if (!eval_) throw ArgumentError("AngularProfile: evaluator must be set");
}

AngularProfile AngularProfile::constant(double c) {
  AngularProfile p([c](double) { return c; });
  p.constant_ = true;
  p.second_derivative_ = [](double) { return 0.0; };
  return p;
}

void AngularProfile::set_second_derivative(std::function<double(double)> d2) {
  second_derivative_ = std::move(d2);
}

double AngularProfile::second_derivative(double theta) const {
  if (second_derivative_) return second_derivative_(theta);
  const double h = 2.0 * std::numbers::pi / 8192.0;
  const double fm2 = eval_(theta - 2.0 * h);
  const double fm1 = eval_(theta - h);
  const double f0 = eval_(theta);
  const double fp1 = eval_(theta + h);
  const double fp2 = eval_(theta + 2.0 * h);
  return (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
}

double AngularProfile::min_on_grid(int n) const {
  double m = eval_(0.0);
  for (int i = 1; i < n; ++i) m = std::min(m, eval_(2.0 * std::numbers::pi * i / n));
  return m;
}

double AngularProfile::max_on_grid(int n) const {
  double m = eval_(0.0);
  for (int i = 1; i < n; ++i) m = std::max(m, eval_(2.0 * std::numbers::pi * i / n));
  return m;
}

void AngularProfile::validate(int n) const {
  const double at0 = eval_(0.0);
  const double at2pi = eval_(2.0 * std::numbers::pi);
  if (!(std::abs(at0 - at2pi) <= 1e-12 * std::max(1.0, std::abs(at0))))
    throw EvaluationError("AngularProfile: not 2pi-periodic");
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n;
    const double v = eval_(theta);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "AngularProfile: non-finite value at theta=" << theta;
      throw EvaluationError(msg.str());
    }
  }
}

}  // namespace singlap
