#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singlap/asymptotics.hpp"
#include "singlap/curvature.hpp"
#include "singlap/operators.hpp"
#include "singlap/quadrature.hpp"
#include "singlap/truncation.hpp"

namespace singlap {

enum class Experiment {
  kTable1,
  kTable2,
  kCounterexample,
  kInteriorBaseline,
  kCurvatureProfile,
  kMcConvergence,
};

Experiment parse_experiment(const std::string& name);
std::string experiment_name(Experiment e);

struct ExperimentConfig {
  Experiment experiment = Experiment::kTable1;
  std::vector<double> t_values;  // strictly decreasing, all in (0,1)
  QuadratureSpec quad;
  TruncationPolicy truncation = TruncationPolicy::multiple(10.0);
  std::uint64_t seed = 1;
  std::string output_path;
  std::string metric_name;  // curvature experiment only

  static ExperimentConfig defaults(Experiment e);
  void validate() const;
};

struct ResultRow {
  double t = 0.0;
  double computed = 0.0;
  double scaled = 0.0;
  double predicted = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
};

// Test data used by the experiments.
ScalarField table1_test_function();  // 1.2x + 0.7y + 0.05(x^2 - 0.5 y^2)
ScalarField squared_norm_field();    // x^2 + y^2
ScalarField coordinate_field_x();    // x

// Punctured-disk intrinsic sweep; the scaled column is compared against the
// predicted blow-up coefficient.
std::vector<ResultRow> run_table1(const ExperimentConfig& cfg);

// Cone-apex extrinsic sweep; computed is t-independent, predicted is the
// closed form -pi sqrt(2)/4.
std::vector<ResultRow> run_table2(const ExperimentConfig& cfg);

struct CounterexampleResult {
  std::vector<ResultRow> rows;
  RateFit fit;
  double volume = 0.0;             // vol_g of the punctured unit disk
  double predicted_constant = 0.0; // limit of sqrt(t) L_t
};

// Extrinsic sweep for the non-extendable angular metric with normalized
// density; fits the blow-up rate.
CounterexampleResult run_counterexample(const ExperimentConfig& cfg);

// Flat-plane sweep: L_t equals the interior limit for the quadratic test
// function at every bandwidth.
std::vector<ResultRow> run_interior_baseline(const ExperimentConfig& cfg);

struct McConvergenceResult {
  std::vector<ResultRow> rows;  // one per sample size, t constant
  std::vector<std::size_t> sample_sizes;
  std::vector<double> mean_abs_gap;  // averaged over seeds
  double regression_slope = 0.0;     // of log mean gap vs log n
  double continuous_value = 0.0;
  int seeds = 0;
  int runs_outside_4se = 0;  // runs with |L_{n,t} - L_t| > 4 standard errors
};

McConvergenceResult run_mc_convergence(const ExperimentConfig& cfg);

struct CurvatureExperimentResult {
  std::vector<ResultRow> rows;  // t column holds s
  GrowthFit growth;
  MomentClassification classification;
  std::string metric_name;
};

CurvatureExperimentResult run_curvature_profile(const ExperimentConfig& cfg);

// CSV with header t,computed,scaled,predicted,abs_error,rel_error, fixed six
// decimals, '\n' line endings; byte-identical for identical inputs.
std::string format_csv(const std::vector<ResultRow>& rows);
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

// Acceptance-threshold checks used by the CLI --check flag. Returns
// human-readable violations; empty means the run passed.
std::vector<std::string> check_rows(Experiment e, const std::vector<ResultRow>& rows);
std::vector<std::string> check_counterexample(const CounterexampleResult& result);
std::vector<std::string> check_mc(const McConvergenceResult& result);
std::vector<std::string> check_curvature(const CurvatureExperimentResult& result);

// Reference scaled column of the punctured-disk table (published values).
const std::vector<std::pair<double, double>>& table1_reference();

}  // namespace singlap
