#pragma once

#include <string>
#include <vector>

#include "singlap/angular_profile.hpp"
#include "singlap/operators.hpp"
#include "singlap/quadrature.hpp"
#include "singlap/scalar_field.hpp"

namespace singlap {

// Predicted small-bandwidth behaviour: value ~ leading_coeff * t^{-1/2} +
// constant_term + O(sqrt t).
struct AsymptoticPrediction {
  double leading_coeff = 0.0;
  double constant_term = 0.0;
  double rate_exponent = 0.0;  // -1/2 when the leading coefficient is nonzero
  bool non_degenerate = false;
  std::string provenance;
};

// Classical interior limit -(pi^{d/2}/2)(p Delta f / 2 + <grad p, grad f>)
// evaluated at the origin.
double interior_limit(const ScalarField& f, const ScalarField& p, int d);

// Blow-up prediction for the intrinsic kernel:
// leading = -c_d p(x) <grad f, b>,  b = int Theta e^{(d/2)Psi_1} L^{-(d+1)} dsigma,
// constant = -c_{d+1} B0,  B0 = int Phi e^{(d/2)Psi_1} L^{-(d+2)} dsigma,
// Phi = (1/2) p Hess f(Theta,Theta) + <grad p,Theta><grad f,Theta>.
AsymptoticPrediction intrinsic_prediction(const ScalarField& f, const ScalarField& p,
                                          const AngularProfile& psi1, const AngularProfile& L,
                                          int d, const QuadratureSpec& quad);

// Blow-up prediction for the extrinsic kernel:
// leading = -c_d p(x) B_M f,  constant = -c_{d+1}(p A_M f + r(p,f)_M).
AsymptoticPrediction extrinsic_prediction(const ScalarField& f, const ScalarField& p,
                                          const AngularProfile& psi1, int d,
                                          const QuadratureSpec& quad);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  double t_min = 0.0;
  double t_max = 0.0;
};

// Least squares of log|value| against log t. Values dominated by their
// quadrature error (|value| <= 10 quad_err) or exactly zero are dropped; at
// least 5 usable points spanning two decades are required.
RateFit rate_fit(const std::vector<LaplacianValue>& values);

}  // namespace singlap
