#pragma once

#include "singlap/conformal_metric.hpp"
#include "singlap/quadrature.hpp"

namespace singlap {

struct GaussBonnetReport {
  double residual = 0.0;  // |area + boundary - 2pi|
  double area_term = 0.0;
  double boundary_term = 0.0;
  double err_est = 0.0;
};

// Checks int_D K dA_g + int_{dD} k_g ds_g = 2pi on the disk of radius r0.
// The area integrand is taken in log-radius on (r_cut, r0) with r_cut small
// enough that the omitted curvature mass is below the quadrature tolerance
// (requires the curvature measure to be absolutely integrable at the origin).
GaussBonnetReport gauss_bonnet_report(const ConformalMetric2D& metric, double r0,
                                      const QuadratureSpec& quad);

double gauss_bonnet_residual(const ConformalMetric2D& metric, double r0,
                             const QuadratureSpec& quad);

}  // namespace singlap
