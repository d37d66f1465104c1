#include "singlap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "singlap/errors.hpp"
#include "singlap/special.hpp"

namespace singlap {

namespace {

void require_sphere_backend(int d) {
  if (d < 1) throw ArgumentError("prediction: d must be >= 1");
  if (d != 2)
    throw ArgumentError("prediction: only the d=2 sphere integral backend is registered");
}

}  // namespace

double interior_limit(const ScalarField& f, const ScalarField& p, int d) {
  if (d < 1) throw ArgumentError("interior_limit: d must be >= 1");
  const Vec2 origin{0.0, 0.0};
  const double laplacian_f = f.hessian(origin).trace();
  const double advection = dot(p.gradient(origin), f.gradient(origin));
  return -0.5 * std::pow(std::numbers::pi, 0.5 * d) *
         (0.5 * p.value(origin) * laplacian_f + advection);
}

AsymptoticPrediction intrinsic_prediction(const ScalarField& f, const ScalarField& p,
                                          const AngularProfile& psi1, const AngularProfile& L,
                                          int d, const QuadratureSpec& quad) {
  require_sphere_backend(d);
  if (!(L.min_on_grid() > 0.0)) throw EvaluationError("intrinsic_prediction: L must be positive");

  const Vec2 origin{0.0, 0.0};
  const double p_at_x = p.value(origin);
  const Vec2 grad_f = f.gradient(origin);
  const Vec2 grad_p = p.gradient(origin);
  const Sym2 hess_f = f.hessian(origin);
  const double half_d = 0.5 * d;

  auto sphere_weight = [&](double theta, int l_power) {
    return std::exp(half_d * psi1(theta)) * std::pow(L(theta), -static_cast<double>(l_power));
  };

  const double bx = integrate_periodic(
      [&](double th) { return std::cos(th) * sphere_weight(th, d + 1); }, quad.n_theta);
  const double by = integrate_periodic(
      [&](double th) { return std::sin(th) * sphere_weight(th, d + 1); }, quad.n_theta);
  const double b0 = integrate_periodic(
      [&](double th) {
        const Vec2 dir{std::cos(th), std::sin(th)};
        const double phi =
            0.5 * p_at_x * hess_f.quad(dir) + dot(grad_p, dir) * dot(grad_f, dir);
        return phi * sphere_weight(th, d + 2);
      },
      quad.n_theta);

  AsymptoticPrediction out;
  out.provenance = "intrinsic-blowup";
  out.leading_coeff = -gaussian_moment_ck(d) * p_at_x * (grad_f.x * bx + grad_f.y * by);
  out.constant_term = -gaussian_moment_ck(d + 1) * b0;

  // Distinguish structural zeros (symmetry) from tiny nonzero moments by
  // comparing against the scale of the moment integral itself.
  const double weight_scale = integrate_periodic(
      [&](double th) { return sphere_weight(th, d + 1); }, quad.n_theta);
  const double scale =
      gaussian_moment_ck(d) * std::abs(p_at_x) * norm(grad_f) * std::abs(weight_scale);
  out.non_degenerate = std::abs(out.leading_coeff) > 1e-12 * scale;
  out.rate_exponent = out.non_degenerate ? -0.5 : 0.0;
  return out;
}

AsymptoticPrediction extrinsic_prediction(const ScalarField& f, const ScalarField& p,
                                          const AngularProfile& psi1, int d,
                                          const QuadratureSpec& quad) {
  require_sphere_backend(d);
  const Vec2 origin{0.0, 0.0};
  const double p_at_x = p.value(origin);
  const Vec2 grad_f = f.gradient(origin);
  const Vec2 grad_p = p.gradient(origin);
  const Sym2 hess_f = f.hessian(origin);
  const double half_d = 0.5 * d;

  auto weight = [&](double theta) { return std::exp(half_d * psi1(theta)); };

  const double b_m = integrate_periodic(
      [&](double th) { return weight(th) * dot(grad_f, Vec2{std::cos(th), std::sin(th)}); },
      quad.n_theta);
  const double a_m = 0.5 * integrate_periodic(
                               [&](double th) {
                                 return weight(th) * hess_f.quad(Vec2{std::cos(th), std::sin(th)});
                               },
                               quad.n_theta);
  const double r_m = integrate_periodic(
      [&](double th) {
        const Vec2 dir{std::cos(th), std::sin(th)};
        return weight(th) * dot(grad_f, dir) * dot(grad_p, dir);
      },
      quad.n_theta);

  AsymptoticPrediction out;
  out.provenance = "extrinsic-kernel";
  out.leading_coeff = -gaussian_moment_ck(d) * p_at_x * b_m;
  out.constant_term = -gaussian_moment_ck(d + 1) * (p_at_x * a_m + r_m);

  const double weight_scale =
      integrate_periodic([&](double th) { return weight(th); }, quad.n_theta);
  const double scale =
      gaussian_moment_ck(d) * std::abs(p_at_x) * norm(grad_f) * std::abs(weight_scale);
  out.non_degenerate = std::abs(out.leading_coeff) > 1e-12 * scale;
  out.rate_exponent = out.non_degenerate ? -0.5 : 0.0;
  return out;
}

RateFit rate_fit(const std::vector<LaplacianValue>& values) {
  std::vector<double> xs, ys;
  int excluded = 0;
  for (const auto& v : values) {
    if (v.value == 0.0 || std::abs(v.value) <= 10.0 * v.quad_err) {
      ++excluded;
      continue;
    }
    xs.push_back(std::log(v.t));
    ys.push_back(std::log(std::abs(v.value)));
  }
  if (excluded > 0)
    std::fprintf(stderr, "rate_fit: excluded %d noise-dominated or zero value(s)\n", excluded);
  if (xs.size() < 5) throw ArgumentError("rate_fit: need >= 5 usable values");

  const auto [x_min_it, x_max_it] = std::minmax_element(xs.begin(), xs.end());
  const double span = *x_max_it - *x_min_it;
  if (span < std::log(100.0) * (1.0 - 1e-9))
    throw ArgumentError("rate_fit: t values must span at least two decades");

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  RateFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double pred = fit.slope * xs[i] + fit.intercept;
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0) : 1.0;
  fit.t_min = std::exp(*x_min_it);
  fit.t_max = std::exp(*x_max_it);
  return fit;
}

}  // namespace singlap
