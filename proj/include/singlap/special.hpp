#pragma once

namespace singlap {

// Lower incomplete gamma gamma(a,x) = int_0^x u^{a-1} e^{-u} du, a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x);

// Upper complement Gamma(a,x) = Gamma(a) - gamma(a,x), computed without cancellation.
double upper_incomplete_gamma(double a, double x);

// Regularized P(a,x) = gamma(a,x)/Gamma(a).
double regularized_gamma_p(double a, double x);

// c_k = (1/2) Gamma((k+1)/2) = int_0^inf e^{-r^2} r^k dr, k >= 0.
double gaussian_moment_ck(int k);

}  // namespace singlap
