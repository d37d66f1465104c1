#pragma once

#include <functional>

namespace singlap {

enum class Smoothness { kC0, kC2 };

// A 2pi-periodic function of the polar angle: an angular conformal factor or
// a directional distance-distortion factor.
class AngularProfile {
public:
  AngularProfile() = default;
  explicit AngularProfile(std::function<double(double)> eval, Smoothness s = Smoothness::kC2);

  static AngularProfile constant(double c);

  double operator()(double theta) const { return eval_(theta); }
  Smoothness smoothness() const { return smoothness_; }
  bool is_constant() const { return constant_; }

  // Closed-form second derivative; registered for built-ins, otherwise a
  // 4th-order central difference with step 2pi/8192.
  double second_derivative(double theta) const;
  void set_second_derivative(std::function<double(double)> d2);

  double min_on_grid(int n = 4096) const;
  double max_on_grid(int n = 4096) const;
  double oscillation(int n = 4096) const { return max_on_grid(n) - min_on_grid(n); }

  // Checks eval(0) == eval(2pi) to 1e-12 and finiteness on a 4096-point grid.
  void validate(int n = 4096) const;

private:
  std::function<double(double)> eval_;
  std::function<double(double)> second_derivative_;
  Smoothness smoothness_ = Smoothness::kC2;
  bool constant_ = false;
};

}  // namespace singlap
