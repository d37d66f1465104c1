// Command-line runner for the singular graph Laplacian experiments.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singlap/errors.hpp"
#include "singlap/experiments.hpp"

namespace {

std::vector<double> parse_t_values(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw singlap::ArgumentError("cannot parse t value '" + token + "'");
    }
    pos = comma + 1;
  }
  return values;
}

void print_rows(const std::vector<singlap::ResultRow>& rows) {
  std::printf("%12s %14s %14s %14s %12s %12s\n", "t", "computed", "scaled", "predicted",
              "abs_error", "rel_error");
  for (const auto& row : rows)
    std::printf("%12.6f %14.6f %14.6f %14.6f %12.6f %12.6f\n", row.t, row.computed, row.scaled,
                row.predicted, row.abs_error, row.rel_error);
}

int run(const singlap::ExperimentConfig& cfg, bool check) {
  using namespace singlap;
  std::vector<ResultRow> rows;
  std::vector<std::string> violations;

  switch (cfg.experiment) {
    case Experiment::kTable1:
      rows = run_table1(cfg);
      violations = check_rows(cfg.experiment, rows);
      break;
    case Experiment::kTable2:
      rows = run_table2(cfg);
      violations = check_rows(cfg.experiment, rows);
      break;
    case Experiment::kCounterexample: {
      const CounterexampleResult result = run_counterexample(cfg);
      rows = result.rows;
      violations = check_counterexample(result);
      std::printf("vol_g = %.6f, predicted sqrt(t)*L_t limit = %.6f\n", result.volume,
                  result.predicted_constant);
      std::printf("rate fit: slope = %.6f, intercept = %.6f, r^2 = %.9f on t in [%g, %g]\n",
                  result.fit.slope, result.fit.intercept, result.fit.r_squared,
                  result.fit.t_min, result.fit.t_max);
      break;
    }
    case Experiment::kInteriorBaseline:
      rows = run_interior_baseline(cfg);
      violations = check_rows(cfg.experiment, rows);
      break;
    case Experiment::kCurvatureProfile: {
      const CurvatureExperimentResult result = run_curvature_profile(cfg);
      rows = result.rows;
      violations = check_curvature(result);
      std::printf("metric %s: growth exponent alpha = %.4f (r^2 = %.6f), moment %s\n",
                  result.metric_name.c_str(), result.growth.alpha, result.growth.r_squared,
                  result.classification.kind == MomentClassification::Kind::kInfinite
                      ? "INFINITE"
                      : "FINITE");
      if (result.classification.kind == MomentClassification::Kind::kFinite)
        std::printf("moment integral approx %.6g\n", result.classification.value);
      break;
    }
    case Experiment::kMcConvergence: {
      const McConvergenceResult result = run_mc_convergence(cfg);
      rows = result.rows;
      violations = check_mc(result);
      std::printf("continuous value at t=%.4f: %.8f\n", cfg.t_values.front(),
                  result.continuous_value);
      for (std::size_t i = 0; i < result.sample_sizes.size(); ++i)
        std::printf("n=%8zu  mean |gap| over %d seeds = %.6e\n", result.sample_sizes[i],
                    result.seeds, result.mean_abs_gap[i]);
      std::printf("gap regression slope in log n: %.4f\n", result.regression_slope);
      break;
    }
  }

  print_rows(rows);
  if (!cfg.output_path.empty()) {
    singlap::emit_csv(rows, cfg.output_path);
    std::printf("wrote %s\n", cfg.output_path.c_str());
  }

  if (check && !violations.empty()) {
    for (const auto& v : violations) std::fprintf(stderr, "check: %s\n", v.c_str());
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph Laplace operators at isolated metric singularities"};
  app.set_config("--config", "", "config file with key = value lines mirroring the flags");

  std::string experiment;
  app.add_option("experiment", experiment,
                 "one of table1|table2|counterexample|interior|curvature|mc")
      ->required();
  std::string t_values_text, trunc_text, out_path, metric_name;
  int n_theta = -1, n_r = -1;
  std::uint64_t seed = 0;
  bool have_seed = false, check = false;
  app.add_option("--t-values", t_values_text, "comma-separated decreasing bandwidths");
  app.add_option("--n-theta", n_theta, "angular quadrature nodes (default 512)");
  app.add_option("--n-r", n_r, "radial quadrature nodes (default 2000)");
  app.add_option("--trunc", trunc_text, "truncation policy fixed:R | power:eta | mult:c");
  app.add_option("--seed", seed, "RNG seed for sampling experiments")
      ->each([&](const std::string&) { have_seed = true; });
  app.add_option("--out", out_path, "CSV output path");
  app.add_option("--metric", metric_name, "registry metric for the curvature experiment");
  app.add_flag("--check", check, "exit 4 if acceptance thresholds are violated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    singlap::ExperimentConfig cfg =
        singlap::ExperimentConfig::defaults(singlap::parse_experiment(experiment));
    if (!t_values_text.empty()) cfg.t_values = parse_t_values(t_values_text);
    if (n_theta > 0) cfg.quad.n_theta = n_theta;
    if (n_r > 0) cfg.quad.n_r = n_r;
    if (!trunc_text.empty()) cfg.truncation = singlap::TruncationPolicy::parse(trunc_text);
    if (have_seed) cfg.seed = seed;
    if (!out_path.empty()) cfg.output_path = out_path;
    if (!metric_name.empty()) cfg.metric_name = metric_name;
    cfg.validate();
    return run(cfg, check);
  } catch (const singlap::ArgumentError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const singlap::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
}
