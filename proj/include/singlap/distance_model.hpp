#pragma once

#include <functional>

#include "singlap/angular_profile.hpp"

namespace singlap {

// Anisotropic distance model from the singularity:
// d_g(x, exp(r,Theta))^2 = L(Theta)^2 r^2 + E(r,Theta), |E| <= C r^{2+delta}.
struct IntrinsicDistanceModel {
  AngularProfile L;  // limiting distortion factor, must stay positive
  double E_coeff = 0.0;   // C
  double E_delta = 2.0;   // delta
  std::function<double(double, double)> E_eval;  // exact remainder; default 0

  double squared_distance(double r, double theta) const {
    const double l = L(theta);
    double e = E_eval ? E_eval(r, theta) : 0.0;
    return l * l * r * r + e;
  }

  double l_min(int grid = 4096) const { return L.min_on_grid(grid); }

  // L > 0 on the grid; if E_eval is given, |E| <= C r^{2+delta} on samples.
  void validate(double r_max) const;
};

}  // namespace singlap
