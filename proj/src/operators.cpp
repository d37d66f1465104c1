#include "singlap/operators.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "singlap/errors.hpp"
#include "singlap/rng.hpp"

namespace singlap {

namespace {

constexpr double kSubstitutionThreshold = 1e-6;  // below this t, integrate in zeta = r/sqrt(t)

double effective_radius(double t, const TruncationPolicy& truncation,
                        const ConformalMetric2D* metric) {
  double radius = truncation_radius(t, truncation);
  if (metric && std::isfinite(metric->puncture_radius()))
    radius = std::min(radius, metric->puncture_radius());
  if (!(radius > 0.0)) throw ArgumentError("operator: empty integration domain");
  return radius;
}

// Integrates weight(r,theta) over (0, R) x [0, 2pi), switching to the
// substituted variable r = sqrt(t) zeta for very small t so the kernel never
// underflows across the whole radial interval. kernel_scale_min is a lower
// bound on d(x,y)/r, used to cap the substituted domain where the kernel is
// already below 1e-700.
IntegralResult integrate_kernel(const std::function<double(double, double)>& weight, double t,
                                double radius, double kernel_scale_min,
                                const QuadratureSpec& spec) {
  if (t >= kSubstitutionThreshold) return integrate_polar(weight, 0.0, radius, spec);
  const double sqrt_t = std::sqrt(t);
  double zeta_max = radius / sqrt_t;
  const double cap = 40.0 / std::max(kernel_scale_min, 1e-8);
  zeta_max = std::min(zeta_max, cap);
  auto substituted = [&weight, sqrt_t](double zeta, double theta) {
    return weight(sqrt_t * zeta, theta) * sqrt_t;
  };
  return integrate_polar(substituted, 0.0, zeta_max, spec);
}

LaplacianValue make_value(double t, double integral, double err, double prefactor) {
  LaplacianValue out;
  out.t = t;
  out.value = prefactor * integral;
  out.scaled = std::sqrt(t) * out.value;
  out.quad_err = std::abs(prefactor) * err;
  return out;
}

}  // namespace

KernelSpec KernelSpec::intrinsic(ConformalMetric2D metric, IntrinsicDistanceModel model,
                                 TruncationPolicy trunc) {
  KernelSpec spec;
  spec.flavor = KernelFlavor::kIntrinsic;
  spec.metric = std::move(metric);
  spec.model = std::move(model);
  spec.truncation = trunc;
  return spec;
}

KernelSpec KernelSpec::extrinsic_plane(ConformalMetric2D metric, TruncationPolicy trunc) {
  KernelSpec spec;
  spec.flavor = KernelFlavor::kExtrinsicPlane;
  spec.metric = std::move(metric);
  spec.truncation = trunc;
  return spec;
}

KernelSpec KernelSpec::extrinsic_cone(TruncationPolicy trunc) {
  KernelSpec spec;
  spec.flavor = KernelFlavor::kExtrinsicCone;
  spec.truncation = trunc;
  return spec;
}

void KernelSpec::validate() const {
  if (dimension < 1) throw ArgumentError("KernelSpec: dimension must be >= 1");
  if (dimension != 2)
    throw ArgumentError("KernelSpec: only the 2-D geometry backends are registered");
  if (flavor == KernelFlavor::kIntrinsic && !model)
    throw ArgumentError("KernelSpec: intrinsic flavor requires a distance model");
  if (flavor != KernelFlavor::kExtrinsicCone && !metric)
    throw ArgumentError("KernelSpec: plane flavors require a metric for the volume form");
}

LaplacianValue continuous_intrinsic_laplacian(const ScalarField& f, const ScalarField& p,
                                              const ConformalMetric2D& metric,
                                              const IntrinsicDistanceModel& model, double t,
                                              const QuadratureSpec& spec,
                                              const TruncationPolicy& truncation) {
  if (!(t > 0.0)) throw ArgumentError("continuous_intrinsic_laplacian: t must be > 0");
  const double radius = effective_radius(t, truncation, &metric);
  model.validate(radius);

  const double f_at_x = f.value({0.0, 0.0});
  const bool angular = metric.is_angular();
  const bool has_remainder = static_cast<bool>(model.E_eval);

  // theta-major sampling lets us reuse per-direction values across the
  // whole radial pass.
  struct ThetaCache {
    double theta = std::numeric_limits<double>::quiet_NaN();
    double l2 = 1.0;
    double cos_t = 1.0, sin_t = 0.0;
    double volw = 1.0;  // e^{(d/2) Psi_1(theta)} for angular metrics
  };
  ThetaCache cache;

  auto weight = [&](double r, double theta) {
    if (theta != cache.theta) {
      cache.theta = theta;
      const double l = model.L(theta);
      cache.l2 = l * l;
      cache.cos_t = std::cos(theta);
      cache.sin_t = std::sin(theta);
      if (angular) cache.volw = std::exp(metric.exponent(1.0, theta));
    }
    double q = cache.l2 * r * r;
    if (has_remainder) q += model.E_eval(r, theta);
    const Vec2 y{r * cache.cos_t, r * cache.sin_t};
    const double vol = angular ? cache.volw : std::exp(metric.exponent(r, theta));
    return std::exp(-q / t) * (f_at_x - f.value(y)) * p.value(y) * vol * r;
  };

  const IntegralResult integral = integrate_kernel(weight, t, radius, model.l_min(), spec);
  return make_value(t, integral.value, integral.err_est, 1.0 / (t * t));
}

LaplacianValue continuous_extrinsic_laplacian(const ScalarField& f, const ScalarField& p,
                                              const KernelSpec& geometry, double t,
                                              const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw ArgumentError("continuous_extrinsic_laplacian: t must be > 0");
  geometry.validate();
  if (geometry.flavor == KernelFlavor::kIntrinsic)
    throw ArgumentError("continuous_extrinsic_laplacian: use the intrinsic entry point");

  const double f_at_x = f.value({0.0, 0.0});

  if (geometry.flavor == KernelFlavor::kExtrinsicCone) {
    const double radius = effective_radius(t, geometry.truncation, nullptr);
    auto weight = [&](double u, double theta) {
      const Vec2 y{u * std::cos(theta), u * std::sin(theta)};
      return std::exp(-2.0 * u * u / t) * (f_at_x - f.value(y)) * p.value(y) *
             std::numbers::sqrt2 * u;
    };
    const IntegralResult integral =
        integrate_kernel(weight, t, radius, std::numbers::sqrt2, spec);
    return make_value(t, integral.value, integral.err_est, 1.0 / (t * t));
  }

  const ConformalMetric2D& metric = *geometry.metric;
  const double radius = effective_radius(t, geometry.truncation, &metric);
  const bool angular = metric.is_angular();

  struct ThetaCache {
    double theta = std::numeric_limits<double>::quiet_NaN();
    double cos_t = 1.0, sin_t = 0.0;
    double volw = 1.0;
  };
  ThetaCache cache;

  auto weight = [&](double r, double theta) {
    if (theta != cache.theta) {
      cache.theta = theta;
      cache.cos_t = std::cos(theta);
      cache.sin_t = std::sin(theta);
      if (angular) cache.volw = std::exp(metric.exponent(1.0, theta));
    }
    const Vec2 y{r * cache.cos_t, r * cache.sin_t};
    const double vol = angular ? cache.volw : std::exp(metric.exponent(r, theta));
    return std::exp(-r * r / t) * (f_at_x - f.value(y)) * p.value(y) * vol * r;
  };

  const IntegralResult integral = integrate_kernel(weight, t, radius, 1.0, spec);
  return make_value(t, integral.value, integral.err_est, 1.0 / (t * t));
}

LaplacianValue continuous_laplacian(const ScalarField& f, const ScalarField& p,
                                    const KernelSpec& geometry, double t,
                                    const QuadratureSpec& spec) {
  if (geometry.flavor == KernelFlavor::kIntrinsic) {
    geometry.validate();
    return continuous_intrinsic_laplacian(f, p, *geometry.metric, *geometry.model, t, spec,
                                          geometry.truncation);
  }
  return continuous_extrinsic_laplacian(f, p, geometry, t, spec);
}

SampleSet sample_density(const ConformalMetric2D& metric, const ScalarField& p, std::size_t n,
                         std::uint64_t seed) {
  if (n == 0) throw ArgumentError("sample_density: n must be >= 1");
  const double radius = metric.puncture_radius();
  if (!std::isfinite(radius))
    throw ArgumentError("sample_density: metric domain must have finite radius");

  auto target = [&](double r, double theta) {
    const double v =
        p.value(polar_point(r, theta)) * std::exp(metric.exponent(r, theta)) * r;
    if (v < 0.0) throw ArgumentError("sample_density: density must be nonnegative");
    return v;
  };

  // Upper bound for the uniform box proposal from a grid scan plus margin.
  double grid_max = 0.0;
  for (int i = 0; i < 512; ++i) {
    const double r = radius * (i + 1) / 512.0;
    for (int j = 0; j < 512; ++j)
      grid_max = std::max(grid_max, target(r, 2.0 * std::numbers::pi * j / 512.0));
  }
  if (!(grid_max > 0.0)) throw ArgumentError("sample_density: density vanishes on the domain");
  const double bound = 1.1 * grid_max;

  SampleSet set;
  set.seed = seed;
  set.points.reserve(n);
  const CounterRng rng(seed);
  const std::uint64_t max_candidates =
      std::max<std::uint64_t>(2'000'000, static_cast<std::uint64_t>(n) * 20'000);
  std::uint64_t k = 0;
  for (; set.points.size() < n && k < max_candidates; ++k) {
    const double r = radius * rng.uniform(3 * k);
    if (r <= 0.0) continue;
    const double theta = 2.0 * std::numbers::pi * rng.uniform(3 * k + 1);
    const double v = rng.uniform(3 * k + 2);
    if (v * bound <= target(r, theta)) set.points.push_back({r, theta});
    if (k == 200'000 && set.points.size() < 20)
      throw ProposalMismatchError("sample_density: acceptance rate below 1e-4");
  }
  if (set.points.size() < n)
    throw ProposalMismatchError("sample_density: acceptance rate below 1e-4");
  set.acceptance_rate = static_cast<double>(n) / static_cast<double>(k);
  return set;
}

LaplacianValue discrete_graph_laplacian(const ScalarField& f, const SampleSet& samples, double t,
                                        int d, DiscreteDistance distance,
                                        const IntrinsicDistanceModel* model) {
  if (!(t > 0.0)) throw ArgumentError("discrete_graph_laplacian: t must be > 0");
  if (samples.n() == 0) throw ArgumentError("discrete_graph_laplacian: empty sample set");
  if (d < 1) throw ArgumentError("discrete_graph_laplacian: d must be >= 1");
  if (distance == DiscreteDistance::kModel && model == nullptr)
    throw ArgumentError("discrete_graph_laplacian: model distance requires a model");

  const double f_at_x = f.value({0.0, 0.0});
  const double prefactor = std::pow(t, -0.5 * d - 1.0);
  const std::size_t n = samples.n();
  std::vector<double> summands(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& s = samples.points[j];
    const double q = distance == DiscreteDistance::kAmbient
                         ? s.r * s.r
                         : model->squared_distance(s.r, s.theta);
    summands[j] =
        prefactor * std::exp(-q / t) * (f_at_x - f.value(polar_point(s.r, s.theta)));
  }
  const double mean = pairwise_sum(summands) / static_cast<double>(n);

  double std_err = 0.0;
  if (n >= 2) {
    std::vector<double> sq(n);
    for (std::size_t j = 0; j < n; ++j) sq[j] = (summands[j] - mean) * (summands[j] - mean);
    std_err = std::sqrt(pairwise_sum(sq) / (static_cast<double>(n) * (static_cast<double>(n) - 1.0)));
  }

  LaplacianValue out;
  out.t = t;
  out.value = mean;
  out.scaled = std::sqrt(t) * mean;
  out.quad_err = std_err;  // statistical, not quadrature
  return out;
}

}  // namespace singlap
