#include "singlap/conformal_metric.hpp"

#include <cmath>
#include <numbers>

#include "singlap/errors.hpp"

namespace singlap {

ConformalMetric2D::ConformalMetric2D(std::function<double(double, double)> u,
                                     ExponentConvention convention, double puncture_radius)
    : u_(std::move(u)), convention_(convention), puncture_radius_(puncture_radius) {
  if (!u_) throw ArgumentError("ConformalMetric2D: exponent callable must be set");
  if (!(puncture_radius_ > 0.0))
    throw ArgumentError("ConformalMetric2D: puncture radius must be > 0");
}

ConformalMetric2D ConformalMetric2D::flat(double puncture_radius) {
  ConformalMetric2D m([](double, double) { return 0.0; }, ExponentConvention::kSingleU,
                      puncture_radius);
  m.angular_only_ = AngularProfile::constant(0.0);
  m.u_laplacian_ = [](double, double) { return 0.0; };
  m.u_radial_derivative_ = [](double, double) { return 0.0; };
  return m;
}

ConformalMetric2D ConformalMetric2D::angular(AngularProfile psi1, double puncture_radius) {
  psi1.validate();
  auto eval = psi1;
  ConformalMetric2D m([eval](double, double theta) { return eval(theta); },
                      ExponentConvention::kSingleU, puncture_radius);
  m.angular_only_ = std::move(psi1);
  m.u_radial_derivative_ = [](double, double) { return 0.0; };
  return m;
}

double ConformalMetric2D::u(double r, double theta) const { return u_(r, theta); }

double ConformalMetric2D::exponent(double r, double theta) const {
  return exponent_factor() * u_(r, theta);
}

void ConformalMetric2D::set_u_laplacian(std::function<double(double, double)> lap) {
  u_laplacian_ = std::move(lap);
}

void ConformalMetric2D::set_u_radial_derivative(std::function<double(double, double)> ur) {
  u_radial_derivative_ = std::move(ur);
}

double ConformalMetric2D::u_laplacian(double r, double theta) const {
  if (u_laplacian_) return u_laplacian_(r, theta);
  if (angular_only_) return angular_only_->second_derivative(theta) / (r * r);
  // Polar Laplacian u_rr + u_r/r + u_tt/r^2 by 4th-order central differences,
  // radial step well under r/100.
  const double hr = r / 256.0;
  const double ht = 2.0 * std::numbers::pi / 8192.0;
  auto ur = [&](double rr) { return u_(rr, theta); };
  auto ut = [&](double tt) { return u_(r, tt); };
  const double u0 = u_(r, theta);
  const double urr = (-ur(r - 2 * hr) + 16 * ur(r - hr) - 30 * u0 + 16 * ur(r + hr) -
                      ur(r + 2 * hr)) /
                     (12 * hr * hr);
  const double ur1 =
      (ur(r - 2 * hr) - 8 * ur(r - hr) + 8 * ur(r + hr) - ur(r + 2 * hr)) / (12 * hr);
  const double utt = (-ut(theta - 2 * ht) + 16 * ut(theta - ht) - 30 * u0 +
                      16 * ut(theta + ht) - ut(theta + 2 * ht)) /
                     (12 * ht * ht);
  return urr + ur1 / r + utt / (r * r);
}

double ConformalMetric2D::exponent_radial_derivative(double r, double theta) const {
  if (u_radial_derivative_) return exponent_factor() * u_radial_derivative_(r, theta);
  const double hr = r / 256.0;
  auto ur = [&](double rr) { return u_(rr, theta); };
  const double d =
      (ur(r - 2 * hr) - 8 * ur(r - hr) + 8 * ur(r + hr) - ur(r + 2 * hr)) / (12 * hr);
  return exponent_factor() * d;
}

double conformal_gaussian_curvature(const ConformalMetric2D& metric, double r, double theta) {
  if (!(r > 0.0)) throw ArgumentError("conformal_gaussian_curvature: r must be > 0 (puncture)");
  const double uval = metric.u(r, theta);
  if (!std::isfinite(uval))
    throw EvaluationError("conformal_gaussian_curvature: non-finite exponent");
  const double lap = metric.u_laplacian(r, theta);
  if (!std::isfinite(lap))
    throw EvaluationError("conformal_gaussian_curvature: non-finite exponent Laplacian");
  if (metric.convention() == ExponentConvention::kDoubleU)
    return -std::exp(-2.0 * uval) * lap;
  return -0.5 * std::exp(-uval) * lap;
}

}  // namespace singlap
