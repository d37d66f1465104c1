#include "singlap/truncation.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "singlap/errors.hpp"

namespace singlap {

TruncationPolicy TruncationPolicy::fixed(double radius) {
  if (!(radius > 0.0)) throw ArgumentError("TruncationPolicy: fixed radius must be > 0");
  return {Mode::kFixedRadius, radius};
}

TruncationPolicy TruncationPolicy::power(double eta) {
  if (!(eta > 0.0 && eta < 0.5))
    throw ArgumentError("TruncationPolicy: power exponent must lie in (0, 1/2)");
  return {Mode::kBandwidthPower, eta};
}

TruncationPolicy TruncationPolicy::multiple(double c) {
  if (!(c > 0.0)) throw ArgumentError("TruncationPolicy: bandwidth multiple must be > 0");
  return {Mode::kBandwidthMultiple, c};
}

TruncationPolicy TruncationPolicy::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ArgumentError("truncation: expected fixed:R, power:eta or mult:c, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw ArgumentError("truncation: cannot parse numeric part of '" + text + "'");
  }
  if (kind == "fixed") return fixed(value);
  if (kind == "power") return power(value);
  if (kind == "mult") return multiple(value);
  throw ArgumentError("truncation: unknown mode '" + kind + "'");
}

std::string TruncationPolicy::str() const {
  std::ostringstream out;
  switch (mode) {
    case Mode::kFixedRadius: out << "fixed:" << param; break;
    case Mode::kBandwidthPower: out << "power:" << param; break;
    case Mode::kBandwidthMultiple: out << "mult:" << param; break;
  }
  return out.str();
}

double truncation_radius(double t, const TruncationPolicy& policy) {
  if (!(t > 0.0)) throw ArgumentError("truncation_radius: t must be > 0");
  switch (policy.mode) {
    case TruncationPolicy::Mode::kFixedRadius:
      return policy.param;
    case TruncationPolicy::Mode::kBandwidthPower: {
      // eta outside (1/4,1/2) invalidates the small-t error analysis; warn once.
      if (policy.param <= 0.25) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
          std::fprintf(stderr,
                       "warning: truncation exponent %g outside (1/4,1/2); "
                       "asymptotic tail control does not apply\n",
                       policy.param);
      }
      return std::pow(t, policy.param);
    }
    case TruncationPolicy::Mode::kBandwidthMultiple:
      return policy.param * std::sqrt(t);
  }
  throw ArgumentError("truncation_radius: invalid mode");
}

double truncation_tail_bound(double f_at_x, double p_l1, double fp_l1, double t, double eta,
                             int d) {
  if (!(t > 0.0 && t < 1.0)) throw ArgumentError("truncation_tail_bound: t must be in (0,1)");
  if (!(eta > 0.0 && eta < 0.5))
    throw ArgumentError("truncation_tail_bound: eta must be in (0, 1/2)");
  if (d < 1) throw ArgumentError("truncation_tail_bound: d must be >= 1");
  const double mass = std::abs(f_at_x) * p_l1 + fp_l1;
  return mass * std::pow(t, -0.5 * d - 1.0) * std::exp(-std::pow(t, 2.0 * eta - 1.0));
}

}  // namespace singlap
