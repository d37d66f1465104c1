#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "singlap/conformal_metric.hpp"
#include "singlap/distance_model.hpp"
#include "singlap/quadrature.hpp"
#include "singlap/scalar_field.hpp"
#include "singlap/truncation.hpp"

namespace singlap {

// One operator evaluation at a bandwidth t.
struct LaplacianValue {
  double t = 0.0;
  double value = 0.0;
  double scaled = 0.0;  // sqrt(t) * value
  double quad_err = 0.0;
};

enum class KernelFlavor { kIntrinsic, kExtrinsicPlane, kExtrinsicCone };

// Geometry + kernel selection for the continuous operators. The plane
// flavors weight by the singular metric's volume form e^w r dr dtheta; the
// cone is the 45-degree cone with induced metric 2du^2 + u^2 dtheta^2,
// ambient squared distance 2u^2 and volume sqrt(2) u du dtheta.
struct KernelSpec {
  KernelFlavor flavor = KernelFlavor::kExtrinsicPlane;
  int dimension = 2;
  TruncationPolicy truncation = TruncationPolicy::multiple(10.0);
  std::optional<IntrinsicDistanceModel> model;  // intrinsic kernel
  std::optional<ConformalMetric2D> metric;      // volume form on the plane

  static KernelSpec intrinsic(ConformalMetric2D metric, IntrinsicDistanceModel model,
                              TruncationPolicy trunc);
  static KernelSpec extrinsic_plane(ConformalMetric2D metric, TruncationPolicy trunc);
  static KernelSpec extrinsic_cone(TruncationPolicy trunc);
  void validate() const;
};

// Intrinsic continuous graph Laplacian at the puncture:
// (1/t^{d/2+1}) iint exp(-(L^2 r^2 + E)/t) (f(0)-f(y)) p(y) e^{(d/2)Psi} r^{d-1} dr dtheta.
LaplacianValue continuous_intrinsic_laplacian(const ScalarField& f, const ScalarField& p,
                                              const ConformalMetric2D& metric,
                                              const IntrinsicDistanceModel& model, double t,
                                              const QuadratureSpec& spec,
                                              const TruncationPolicy& truncation);

// Extrinsic-kernel continuous graph Laplacian at the singularity; the kernel
// uses the ambient squared distance, the measure the singular volume form.
LaplacianValue continuous_extrinsic_laplacian(const ScalarField& f, const ScalarField& p,
                                              const KernelSpec& geometry, double t,
                                              const QuadratureSpec& spec);

// Routes on the flavor.
LaplacianValue continuous_laplacian(const ScalarField& f, const ScalarField& p,
                                    const KernelSpec& geometry, double t,
                                    const QuadratureSpec& spec);

struct PolarSample {
  double r = 0.0;
  double theta = 0.0;
};

struct SampleSet {
  std::vector<PolarSample> points;
  std::uint64_t seed = 0;
  double acceptance_rate = 1.0;

  std::size_t n() const { return points.size(); }
};

// Rejection sampling of the density p e^{(d/2)Psi} r^{d-1} over
// (0,R) x [0,2pi) with a uniform box proposal; reproducible given the seed
// and independent of worker count (counter-based RNG).
SampleSet sample_density(const ConformalMetric2D& metric, const ScalarField& p, std::size_t n,
                         std::uint64_t seed);

enum class DiscreteDistance { kAmbient, kModel };

// Empirical (Monte Carlo) graph Laplacian at the puncture:
// (1/(n t^{d/2+1})) sum_j exp(-d(x,X_j)^2/t)(f(x)-f(X_j)).
// quad_err carries the plug-in standard error of the mean.
LaplacianValue discrete_graph_laplacian(const ScalarField& f, const SampleSet& samples, double t,
                                        int d, DiscreteDistance distance,
                                        const IntrinsicDistanceModel* model = nullptr);

}  // namespace singlap
