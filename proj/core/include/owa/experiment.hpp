#ifndef OWA_EXPERIMENT_HPP
#define OWA_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "owa/generators.hpp"
#include "owa/instance.hpp"
#include "owa/solvers.hpp"
#include "owa/weights.hpp"

namespace owa {

/// Configuration of one experiment run.
///   1: sampling vs greedy across the K_values sweep
///   2: greedy vs the Yager and midpoint baselines at fixed K = max(K_values)
///   3: all methods across the alpha sweep at fixed K = max(K_values)
/// Weight densities are power weights alpha * (1 - t)^(alpha - 1); the Yager
/// baseline gets the matching cumulative quantifier W(y) = 1 - (1 - y)^alpha.
struct ExperimentConfig {
    int experiment = 1;
    int n = 12;
    int p = 6;
    InstanceType instance_type = InstanceType::TypeI;
    int instances = 20;
    std::vector<double> alphas = {1.5, 5.0};
    std::vector<int> K_values = {10, 25, 50, 100};
    int K_eval = 100000;
    std::uint64_t seed = 1;
    std::string output = "experiment";
    InnerSolver inner = InnerSolver::Exact;

    void validate() const;
};

/// Parses a JSON config mirroring the ExperimentConfig fields.
ExperimentConfig parse_experiment_config(std::string_view text);

/// One CSV row: a single solver run on a single instance, with the final
/// objective re-evaluated on the common high-K evaluation stream.
struct ExperimentRow {
    int experiment = 0;
    InstanceType instance_type = InstanceType::TypeI;
    int n = 0;
    int p = 0;
    double alpha = 0.0;
    int K = 0;
    int instance_id = 0; // 1-based
    std::string method;
    double objective = 0.0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRow& row);

/// Mean objective per (alpha, K, method) cell of the sweep, for plotting.
struct AggregateRow {
    InstanceType instance_type = InstanceType::TypeI;
    int n = 0;
    int p = 0;
    double alpha = 0.0;
    int K = 0;
    std::string method;
    int runs = 0;
    double mean_objective = 0.0;
    double stderr_objective = 0.0; // sample std dev across instances / sqrt(runs)
    double mean_wall_time_s = 0.0;
};

std::vector<AggregateRow> aggregate_experiment(const std::vector<ExperimentRow>& rows);

/// High-K estimate of the interval OWA value of x, on the dedicated
/// evaluation seed stream (disjoint from the solver streams).
double evaluate_final(const IntervalInstance& instance, const WeightDensity& w, const Solution& x,
                      int K_eval, std::uint64_t eval_seed);

/// Runs the configured experiment. Independent (instance, K, alpha) cells run
/// on a worker pool capped by the INTERVAL_OWA_THREADS environment variable;
/// on_row is invoked in deterministic cell order as results become available.
/// All columns except wall_time_s are reproducible byte for byte.
std::vector<ExperimentRow> run_experiment(
    const ExperimentConfig& config,
    const std::function<void(const ExperimentRow&)>& on_row = {});

/// Runs the experiment and writes `<output>.csv` (flushed row by row) plus
/// the `<output>_summary.csv` aggregation.
std::vector<ExperimentRow> run_experiment_to_files(const ExperimentConfig& config);

} // namespace owa

#endif // OWA_EXPERIMENT_HPP
