#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singlap/conformal_metric.hpp"
#include "singlap/distance_model.hpp"

namespace singlap {

// Built-in geometries, keyed by name:
//   flat        plane, w = 0, infinite domain
//   sy-log      w = 2u, u = 2 r^2 log r: curvature blows up only logarithmically
//   angular-cos w = u = 2 cos(theta): non-constant angular factor, kappa ~ 1/s^2
//   disk-a04    g = a(theta)^2 (dr^2 + r^2 dtheta^2), a = 1 + 0.4 cos(theta)
struct MetricEntry {
  std::string name;
  ConformalMetric2D metric;
  std::optional<AngularProfile> psi1;            // angular conformal factor, if any
  std::optional<IntrinsicDistanceModel> model;   // radial-geodesic distance model
  std::string description;
};

const MetricEntry& metric_registry(const std::string& name);
std::vector<std::string> registered_metric_names();

}  // namespace singlap
