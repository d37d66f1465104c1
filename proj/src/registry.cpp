#include "singlap/registry.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "singlap/errors.hpp"

namespace singlap {

namespace {

MetricEntry make_flat() {
  MetricEntry entry{"flat", ConformalMetric2D::flat(std::numeric_limits<double>::infinity()),
                    AngularProfile::constant(0.0),
                    IntrinsicDistanceModel{AngularProfile::constant(1.0)},
                    "flat plane"};
  return entry;
}

MetricEntry make_sy_log() {
  // g = e^{2u} delta with u = 2 r^2 log r; Delta u = 8 log r + 8,
  // u_r = 4 r log r + 2 r.
  ConformalMetric2D metric([](double r, double) { return 2.0 * r * r * std::log(r); },
                           ExponentConvention::kDoubleU, 0.75);
  metric.set_u_laplacian([](double r, double) { return 8.0 * std::log(r) + 8.0; });
  metric.set_u_radial_derivative(
      [](double r, double) { return 4.0 * r * std::log(r) + 2.0 * r; });
  return {"sy-log", std::move(metric), std::nullopt, std::nullopt,
          "conformal factor 2 r^2 log r (logarithmic curvature blow-up)"};
}

MetricEntry make_angular_cos() {
  AngularProfile psi1([](double theta) { return 2.0 * std::cos(theta); });
  psi1.set_second_derivative([](double theta) { return -2.0 * std::cos(theta); });
  ConformalMetric2D metric = ConformalMetric2D::angular(psi1, 1.0);
  // Radial-geodesic distance: L = e^{Psi_1/2} = e^{cos theta}, E = 0.
  AngularProfile distortion([](double theta) { return std::exp(std::cos(theta)); });
  return {"angular-cos", std::move(metric), psi1, IntrinsicDistanceModel{distortion},
          "purely angular factor 2 cos(theta) (non-extendable)"};
}

MetricEntry make_disk_a04() {
  auto a = [](double theta) { return 1.0 + 0.4 * std::cos(theta); };
  AngularProfile psi1([a](double theta) { return 2.0 * std::log(a(theta)); });
  psi1.set_second_derivative([a](double theta) {
    const double av = a(theta);
    const double da = -0.4 * std::sin(theta);
    const double dda = -0.4 * std::cos(theta);
    return 2.0 * (dda * av - da * da) / (av * av);
  });
  ConformalMetric2D metric = ConformalMetric2D::angular(psi1, 1.0);
  AngularProfile distortion(a);
  return {"disk-a04", std::move(metric), psi1, IntrinsicDistanceModel{distortion},
          "punctured disk with a(theta) = 1 + 0.4 cos(theta)"};
}

const std::map<std::string, MetricEntry>& registry() {
  static const std::map<std::string, MetricEntry> entries = [] {
    std::map<std::string, MetricEntry> m;
    for (auto&& e : {make_flat(), make_sy_log(), make_angular_cos(), make_disk_a04()})
      m.emplace(e.name, e);
    return m;
  }();
  return entries;
}

}  // namespace

const MetricEntry& metric_registry(const std::string& name) {
  const auto& entries = registry();
  auto it = entries.find(name);
  if (it == entries.end()) {
    std::ostringstream msg;
    msg << "unknown metric '" << name << "'; registered:";
    for (const auto& [key, _] : entries) msg << ' ' << key;
    throw ArgumentError(msg.str());
  }
  return it->second;
}

std::vector<std::string> registered_metric_names() {
  std::vector<std::string> names;
  for (const auto& [key, _] : registry()) names.push_back(key);
  return names;
}

}  // namespace singlap
