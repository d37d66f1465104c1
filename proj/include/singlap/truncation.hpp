#pragma once

#include <string>

namespace singlap {

// How far the radial integration/kernel support reaches for a bandwidth t.
struct TruncationPolicy {
  enum class Mode { kFixedRadius, kBandwidthPower, kBandwidthMultiple };

  Mode mode = Mode::kBandwidthMultiple;
  double param = 10.0;  // R, eta, or c depending on mode

  static TruncationPolicy fixed(double radius);
  static TruncationPolicy power(double eta);  // radius t^eta, eta in (0, 1/2)
  static TruncationPolicy multiple(double c);  // radius c*sqrt(t)

  // "fixed:1", "power:0.49", "mult:10"
  static TruncationPolicy parse(const std::string& text);
  std::string str() const;
};

double truncation_radius(double t, const TruncationPolicy& policy);

// Bound on the mass dropped beyond radius t^eta:
// (|f(x)| ||p||_1 + ||f p||_1) * t^{-d/2-1} * exp(-t^{2 eta - 1}).
double truncation_tail_bound(double f_at_x, double p_l1, double fp_l1, double t, double eta,
                             int d);

}  // namespace singlap
