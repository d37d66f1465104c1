#include "singlap/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "singlap/errors.hpp"
#include "singlap/registry.hpp"

namespace singlap {

namespace {

constexpr double kConeValue = -std::numbers::pi * std::numbers::sqrt2 / 4.0;

// Runs body(i) for i in [0,n) on a few threads; each index writes its own
// output slot, so results do not depend on the thread count.
template <typename Body>
void parallel_for_index(std::size_t n, Body&& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(n, hw));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

ResultRow make_row(double t, double computed, double scaled, double predicted,
                   double compared) {
  ResultRow row;
  row.t = t;
  row.computed = computed;
  row.scaled = scaled;
  row.predicted = predicted;
  row.abs_error = std::abs(compared - predicted);
  row.rel_error = predicted != 0.0 ? row.abs_error / std::abs(predicted)
                                   : std::numeric_limits<double>::quiet_NaN();
  return row;
}

void warn_if_unconverged(const char* what, double t, const LaplacianValue& v,
                         const QuadratureSpec& quad) {
  if (v.quad_err > 10.0 * quad.target_rel_tol * std::max(1.0, std::abs(v.value)))
    std::fprintf(stderr, "%s: quadrature error estimate %.3e at t=%g; row flagged\n", what,
                 v.quad_err, t);
}

}  // namespace

Experiment parse_experiment(const std::string& name) {
  if (name == "table1") return Experiment::kTable1;
  if (name == "table2") return Experiment::kTable2;
  if (name == "counterexample") return Experiment::kCounterexample;
  if (name == "interior") return Experiment::kInteriorBaseline;
  if (name == "curvature") return Experiment::kCurvatureProfile;
  if (name == "mc") return Experiment::kMcConvergence;
  throw ArgumentError("unknown experiment '" + name +
                      "'; expected table1|table2|counterexample|interior|curvature|mc");
}

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::kTable1: return "table1";
    case Experiment::kTable2: return "table2";
    case Experiment::kCounterexample: return "counterexample";
    case Experiment::kInteriorBaseline: return "interior";
    case Experiment::kCurvatureProfile: return "curvature";
    case Experiment::kMcConvergence: return "mc";
  }
  return "?";
}

ExperimentConfig ExperimentConfig::defaults(Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  switch (e) {
    case Experiment::kTable1:
      cfg.t_values = {1e-1, 5e-2, 2e-2, 1e-2, 5e-3, 2e-3, 1e-3, 5e-4};
      cfg.truncation = TruncationPolicy::fixed(1.0);
      break;
    case Experiment::kTable2:
      cfg.t_values = {1e-1, 5e-2, 2e-2, 1e-2, 5e-3, 2e-3, 1e-3, 5e-4, 2e-4, 1e-4};
      cfg.truncation = TruncationPolicy::multiple(10.0);
      break;
    case Experiment::kCounterexample:
      cfg.t_values = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
      cfg.truncation = TruncationPolicy::multiple(10.0);
      break;
    case Experiment::kInteriorBaseline:
      cfg.t_values = {1e-1, 5e-2, 2e-2, 1e-2, 5e-3, 2e-3, 1e-3};
      cfg.truncation = TruncationPolicy::multiple(10.0);
      break;
    case Experiment::kCurvatureProfile:
      cfg.t_values = {1e-1};  // unused
      cfg.metric_name = "angular-cos";
      break;
    case Experiment::kMcConvergence:
      cfg.t_values = {5e-2};
      cfg.truncation = TruncationPolicy::fixed(1.0);
      cfg.seed = 42;
      break;
  }
  return cfg;
}

void ExperimentConfig::validate() const {
  quad.validate();
  if (t_values.empty()) throw ArgumentError("config: t_values must be nonempty");
  for (double t : t_values)
    if (!(t > 0.0 && t < 1.0)) throw ArgumentError("config: t values must lie in (0,1)");
  for (std::size_t i = 1; i < t_values.size(); ++i)
    if (!(t_values[i] < t_values[i - 1]))
      throw ArgumentError("config: t values must be strictly decreasing");
}

ScalarField table1_test_function() {
  return ScalarField::closed_form(
      [](Vec2 p) { return 1.2 * p.x + 0.7 * p.y + 0.05 * (p.x * p.x - 0.5 * p.y * p.y); },
      [](Vec2 p) -> Vec2 { return {1.2 + 0.1 * p.x, 0.7 - 0.05 * p.y}; },
      [](Vec2) -> Sym2 { return {0.1, 0.0, -0.05}; });
}

ScalarField squared_norm_field() {
  return ScalarField::closed_form([](Vec2 p) { return p.x * p.x + p.y * p.y; },
                                  [](Vec2 p) -> Vec2 { return {2.0 * p.x, 2.0 * p.y}; },
                                  [](Vec2) -> Sym2 { return {2.0, 0.0, 2.0}; });
}

ScalarField coordinate_field_x() {
  return ScalarField::closed_form([](Vec2 p) { return p.x; },
                                  [](Vec2) -> Vec2 { return {1.0, 0.0}; },
                                  [](Vec2) -> Sym2 { return {}; });
}

std::vector<ResultRow> run_table1(const ExperimentConfig& cfg) {
  cfg.validate();
  const MetricEntry& entry = metric_registry("disk-a04");
  const ScalarField f = table1_test_function();
  const ScalarField p = ScalarField::constant(1.0);
  const AsymptoticPrediction prediction =
      intrinsic_prediction(f, p, *entry.psi1, entry.model->L, 2, cfg.quad);

  std::vector<ResultRow> rows(cfg.t_values.size());
  parallel_for_index(cfg.t_values.size(), [&](std::size_t i) {
    const double t = cfg.t_values[i];
    const LaplacianValue v = continuous_intrinsic_laplacian(f, p, entry.metric, *entry.model, t,
                                                            cfg.quad, cfg.truncation);
    warn_if_unconverged("table1", t, v, cfg.quad);
    rows[i] = make_row(t, v.value, v.scaled, prediction.leading_coeff, v.scaled);
  });
  return rows;
}

std::vector<ResultRow> run_table2(const ExperimentConfig& cfg) {
  cfg.validate();
  const ScalarField f = squared_norm_field();
  const ScalarField p = ScalarField::constant(1.0);
  const KernelSpec cone = KernelSpec::extrinsic_cone(cfg.truncation);

  std::vector<ResultRow> rows(cfg.t_values.size());
  parallel_for_index(cfg.t_values.size(), [&](std::size_t i) {
    const double t = cfg.t_values[i];
    const LaplacianValue v = continuous_extrinsic_laplacian(f, p, cone, t, cfg.quad);
    warn_if_unconverged("table2", t, v, cfg.quad);
    rows[i] = make_row(t, v.value, v.scaled, kConeValue, v.value);
  });
  return rows;
}

CounterexampleResult run_counterexample(const ExperimentConfig& cfg) {
  cfg.validate();
  const MetricEntry& entry = metric_registry("angular-cos");
  const ConformalMetric2D& metric = entry.metric;

  // vol_g(M) by quadrature of the volume form over the punctured unit disk.
  const IntegralResult vol = integrate_polar(
      [&metric](double r, double theta) { return std::exp(metric.exponent(r, theta)) * r; },
      0.0, metric.puncture_radius(), cfg.quad);

  const ScalarField f = coordinate_field_x();
  const ScalarField p = ScalarField::constant(1.0 / vol.value);
  const AsymptoticPrediction prediction = extrinsic_prediction(f, p, *entry.psi1, 2, cfg.quad);
  const KernelSpec plane = KernelSpec::extrinsic_plane(metric, cfg.truncation);

  CounterexampleResult result;
  result.volume = vol.value;
  result.predicted_constant = prediction.leading_coeff;
  result.rows.resize(cfg.t_values.size());
  std::vector<LaplacianValue> values(cfg.t_values.size());
  parallel_for_index(cfg.t_values.size(), [&](std::size_t i) {
    const double t = cfg.t_values[i];
    const LaplacianValue v = continuous_extrinsic_laplacian(f, p, plane, t, cfg.quad);
    warn_if_unconverged("counterexample", t, v, cfg.quad);
    values[i] = v;
    result.rows[i] = make_row(t, v.value, v.scaled, prediction.leading_coeff, v.scaled);
  });
  result.fit = rate_fit(values);
  return result;
}

std::vector<ResultRow> run_interior_baseline(const ExperimentConfig& cfg) {
  cfg.validate();
  const MetricEntry& entry = metric_registry("flat");
  const ScalarField f = squared_norm_field();
  const ScalarField p = ScalarField::constant(1.0);
  const double limit = interior_limit(f, p, 2);
  const KernelSpec plane = KernelSpec::extrinsic_plane(entry.metric, cfg.truncation);

  std::vector<ResultRow> rows(cfg.t_values.size());
  parallel_for_index(cfg.t_values.size(), [&](std::size_t i) {
    const double t = cfg.t_values[i];
    const LaplacianValue v = continuous_extrinsic_laplacian(f, p, plane, t, cfg.quad);
    warn_if_unconverged("interior", t, v, cfg.quad);
    rows[i] = make_row(t, v.value, v.scaled, limit, v.value);
  });
  return rows;
}

McConvergenceResult run_mc_convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  const double t = cfg.t_values.front();
  const ScalarField f = squared_norm_field();
  // Uniform sampling on the unit disk: density 1/pi w.r.t. Lebesgue.
  const ConformalMetric2D disk = ConformalMetric2D::flat(1.0);
  const ScalarField p = ScalarField::constant(1.0 / std::numbers::pi);

  const KernelSpec plane = KernelSpec::extrinsic_plane(disk, TruncationPolicy::fixed(1.0));
  const LaplacianValue continuous = continuous_extrinsic_laplacian(f, p, plane, t, cfg.quad);

  McConvergenceResult result;
  result.continuous_value = continuous.value;
  result.sample_sizes = {1000, 10000, 100000};
  result.seeds = 20;

  struct Cell {
    double gap_sum = 0.0;
    int outside_4se = 0;
    LaplacianValue first;
  };
  std::vector<Cell> cells(result.sample_sizes.size());
  parallel_for_index(result.sample_sizes.size(), [&](std::size_t i) {
    const std::size_t n = result.sample_sizes[i];
    for (int s = 0; s < result.seeds; ++s) {
      const SampleSet samples = sample_density(disk, p, n, cfg.seed + static_cast<std::uint64_t>(s));
      const LaplacianValue v =
          discrete_graph_laplacian(f, samples, t, 2, DiscreteDistance::kAmbient);
      const double gap = std::abs(v.value - continuous.value);
      cells[i].gap_sum += gap;
      if (gap > 4.0 * v.quad_err) ++cells[i].outside_4se;
      if (s == 0) cells[i].first = v;
    }
  });

  result.rows.resize(result.sample_sizes.size());
  result.mean_abs_gap.resize(result.sample_sizes.size());
  for (std::size_t i = 0; i < result.sample_sizes.size(); ++i) {
    result.runs_outside_4se += cells[i].outside_4se;
    result.mean_abs_gap[i] = cells[i].gap_sum / result.seeds;
    ResultRow row = make_row(t, cells[i].first.value, cells[i].first.scaled, continuous.value,
                             cells[i].first.value);
    row.abs_error = result.mean_abs_gap[i];
    row.rel_error = row.abs_error / std::abs(continuous.value);
    result.rows[i] = row;
  }

  // log-log regression of the mean gap against n
  const std::size_t m = result.sample_sizes.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(static_cast<double>(result.sample_sizes[i]));
    const double y = std::log(result.mean_abs_gap[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  result.regression_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return result;
}

CurvatureExperimentResult run_curvature_profile(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::string name = cfg.metric_name.empty() ? "angular-cos" : cfg.metric_name;
  const MetricEntry& entry = metric_registry(name);
  const double radius = entry.metric.puncture_radius();
  const double eps = std::isfinite(radius) ? std::min(0.5, 0.75 * radius) : 0.5;

  const CurvatureProfile profile =
      compute_curvature_profile(entry.metric, 1e-6, 0.5 * eps, 40, eps);
  CurvatureExperimentResult result;
  result.metric_name = name;
  result.growth = curvature_growth_exponent(profile);
  result.classification = curvature_moment_classifier(profile);

  const double s_min = profile.s_values.back();
  const double kappa_min_s = profile.kappa_values.back();
  const double a_coeff =
      kappa_min_s > 0.0 ? kappa_min_s * std::pow(s_min, result.growth.alpha) : 0.0;
  for (std::size_t k = 0; k < profile.s_values.size(); ++k) {
    const double s = profile.s_values[k];
    const double kappa = profile.kappa_values[k];
    const double fitted = a_coeff * std::pow(s, -result.growth.alpha);
    result.rows.push_back(make_row(s, kappa, s * kappa, fitted, kappa));
  }
  return result;
}

namespace {

void append_number(std::string& out, double v) {
  char buf[64];
  if (std::isfinite(v))
    std::snprintf(buf, sizeof buf, "%.6f", v);
  else
    std::snprintf(buf, sizeof buf, "nan");
  out += buf;
}

}  // namespace

std::string format_csv(const std::vector<ResultRow>& rows) {
  std::string out = "t,computed,scaled,predicted,abs_error,rel_error\n";
  for (const auto& row : rows) {
    append_number(out, row.t);
    for (double v : {row.computed, row.scaled, row.predicted, row.abs_error, row.rel_error}) {
      out += ',';
      append_number(out, v);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("emit_csv: cannot open '" + path + "' for writing");
  const std::string text = format_csv(rows);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoError("emit_csv: write failed for '" + path + "'");
}

const std::vector<std::pair<double, double>>& table1_reference() {
  static const std::vector<std::pair<double, double>> reference = {
      {1e-1, 0.682163}, {5e-2, 0.743641}, {2e-2, 0.750940}, {1e-2, 0.753835},
      {5e-3, 0.755882}, {2e-3, 0.757982}, {1e-3, 0.758995}, {5e-4, 0.759886},
  };
  return reference;
}

std::vector<std::string> check_rows(Experiment e, const std::vector<ResultRow>& rows) {
  std::vector<std::string> violations;
  auto complain = [&](const std::string& msg) { violations.push_back(msg); };
  std::ostringstream msg;

  switch (e) {
    case Experiment::kTable1: {
      for (const auto& row : rows) {
        for (const auto& [t_ref, scaled_ref] : table1_reference()) {
          if (std::abs(row.t - t_ref) <= 1e-12 * t_ref &&
              std::abs(row.scaled - scaled_ref) > 2e-4) {
            msg.str("");
            msg << "table1 t=" << row.t << ": scaled " << row.scaled
                << " deviates from reference " << scaled_ref << " by more than 2e-4";
            complain(msg.str());
          }
        }
        if (std::abs(row.predicted - 0.760824) > 1e-5) {
          msg.str("");
          msg << "table1: predicted limit " << row.predicted << " not within 1e-5 of 0.760824";
          complain(msg.str());
        }
      }
      break;
    }
    case Experiment::kTable2: {
      for (const auto& row : rows) {
        if (std::abs(row.computed - kConeValue) > 1e-6) {
          msg.str("");
          msg << "table2 t=" << row.t << ": computed " << row.computed
              << " not within 1e-6 of " << kConeValue;
          complain(msg.str());
        }
        if (std::abs(row.scaled - std::sqrt(row.t) * kConeValue) > 1e-6) {
          msg.str("");
          msg << "table2 t=" << row.t << ": scaled column off by more than 1e-6";
          complain(msg.str());
        }
      }
      break;
    }
    case Experiment::kInteriorBaseline: {
      for (const auto& row : rows) {
        if (std::abs(row.computed - row.predicted) > 1e-10 * std::abs(row.predicted)) {
          msg.str("");
          msg << "interior t=" << row.t << ": computed " << row.computed
              << " deviates from the interior limit beyond rel 1e-10";
          complain(msg.str());
        }
      }
      break;
    }
    default:
      break;
  }
  return violations;
}

std::vector<std::string> check_counterexample(const CounterexampleResult& result) {
  std::vector<std::string> violations;
  std::ostringstream msg;
  if (std::abs(result.fit.slope + 0.5) > 0.02) {
    msg << "counterexample: rate slope " << result.fit.slope << " not within 0.02 of -0.5";
    violations.push_back(msg.str());
    msg.str("");
  }
  if (result.fit.r_squared < 0.999) {
    msg << "counterexample: fit r^2 " << result.fit.r_squared << " below 0.999";
    violations.push_back(msg.str());
    msg.str("");
  }
  for (const auto& row : result.rows) {
    if (std::abs(row.scaled - result.predicted_constant) >
        0.02 * std::abs(result.predicted_constant) + 0.05 * std::sqrt(row.t)) {
      msg << "counterexample t=" << row.t << ": scaled value " << row.scaled
          << " far from predicted constant " << result.predicted_constant;
      violations.push_back(msg.str());
      msg.str("");
    }
  }
  return violations;
}

std::vector<std::string> check_mc(const McConvergenceResult& result) {
  std::vector<std::string> violations;
  std::ostringstream msg;
  if (std::abs(result.regression_slope + 0.5) > 0.15) {
    msg << "mc: gap regression slope " << result.regression_slope
        << " not within 0.15 of -0.5";
    violations.push_back(msg.str());
    msg.str("");
  }
  if (result.runs_outside_4se > 0) {
    msg << "mc: " << result.runs_outside_4se
        << " run(s) fell outside 4 standard errors of the continuous value";
    violations.push_back(msg.str());
  }
  return violations;
}

std::vector<std::string> check_curvature(const CurvatureExperimentResult& result) {
  std::vector<std::string> violations;
  std::ostringstream msg;
  const bool infinite = result.classification.kind == MomentClassification::Kind::kInfinite;
  if (result.metric_name == "angular-cos" || result.metric_name == "disk-a04") {
    if (!infinite) violations.push_back(result.metric_name + ": expected non-integrable moment");
    if (result.growth.alpha < 1.9 || result.growth.alpha > 2.1) {
      msg << result.metric_name << ": growth exponent " << result.growth.alpha
          << " outside [1.9, 2.1]";
      violations.push_back(msg.str());
    }
  } else {
    if (infinite) violations.push_back(result.metric_name + ": expected integrable moment");
  }
  return violations;
}

}  // namespace singlap
