#include "singlap/distance_model.hpp"

#include <cmath>
#include <numbers>

#include "singlap/errors.hpp"

namespace singlap {

void IntrinsicDistanceModel::validate(double r_max) const {
  if (!(l_min() > 0.0))
    throw EvaluationError("IntrinsicDistanceModel: L must be positive on the grid");
  if (E_eval) {
    if (!(E_coeff >= 0.0) || !(E_delta > 0.0))
      throw ArgumentError("IntrinsicDistanceModel: need C >= 0 and delta > 0 with E_eval");
    for (int i = 1; i <= 32; ++i) {
      const double r = r_max * i / 32.0;
      for (int j = 0; j < 64; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / 64.0;
        const double bound = E_coeff * std::pow(r, 2.0 + E_delta);
        if (std::abs(E_eval(r, theta)) > bound * (1.0 + 1e-9))
          throw EvaluationError("IntrinsicDistanceModel: |E(r,theta)| exceeds C r^{2+delta}");
      }
    }
  }
}

}  // namespace singlap
