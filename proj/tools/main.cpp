// interval-owa: command line front end for the interval OWA library.
//
// Subcommands: generate, evaluate, solve, export-milp, experiment.
// Instance and solution files are JSON; see the README for the schemas.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "owa/discrete_owa.hpp"
#include "owa/errors.hpp"
#include "owa/evaluate.hpp"
#include "owa/experiment.hpp"
#include "owa/generators.hpp"
#include "owa/instance.hpp"
#include "owa/solvers.hpp"
#include "owa/weights.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw owa::Error("cannot open file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw owa::Error("cannot open file " + path + " for writing");
    }
    out << content;
}

owa::IntervalInstance load_instance(const std::string& path) {
    return owa::parse_instance(read_file(path));
}

nlohmann::json report_to_json(const owa::SolveReport& report) {
    nlohmann::json doc;
    doc["solver"] = report.solver;
    doc["objective"] = report.reported_objective;
    doc["solution"] = nlohmann::json::parse(owa::serialize_solution(report.solution));
    if (report.K) {
        doc["K"] = *report.K;
    }
    if (report.seed) {
        doc["seed"] = *report.seed;
    }
    doc["wall_time_s"] = report.wall_time_s;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) {
        params[key] = value;
    }
    doc["params"] = std::move(params);
    return doc;
}

void print_report(const owa::SolveReport& report, const std::string& out_path) {
    const nlohmann::json doc = report_to_json(report);
    if (!out_path.empty()) {
        write_file(out_path, doc.dump(2) + "\n");
    }
    std::printf("solver=%s objective=%.12g selected=%s\n", report.solver.c_str(),
                report.reported_objective, doc["solution"]["selected"].dump().c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval OWA: solvers and evaluation for combinatorial minimization "
                 "with interval cost uncertainty"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a random instance file");
    std::string gen_type = "I";
    int gen_n = 10;
    std::optional<int> gen_p;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    generate->add_option("--type", gen_type, "Instance type: I (random pair) or II (midpoint deviation)");
    generate->add_option("-n,--n", gen_n, "Number of items")->required();
    generate->add_option("-p,--p", gen_p, "Selection size (default: max(1, n/2))");
    generate->add_option("--seed", gen_seed, "Generator seed");
    generate->add_option("-o,--out", gen_out, "Output instance file")->required();

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "Evaluate the interval OWA objective of a solution");
    std::string eval_instance;
    std::string eval_solution;
    std::string eval_weight = "uniform";
    std::string eval_method = "exact";
    int eval_K = 1000;
    std::uint64_t eval_seed = 1;
    double eval_tol = 1e-6;
    evaluate->add_option("--instance", eval_instance, "Instance file")->required();
    evaluate->add_option("--solution", eval_solution, "Solution file")->required();
    evaluate->add_option("--weight", eval_weight, "Weight spec: uniform | power:<a> | cvar:<a> | hurwicz:<mix>:<eps>");
    evaluate->add_option("--method", eval_method, "exact | sample")
        ->check(CLI::IsMember({"exact", "sample"}));
    evaluate->add_option("--K", eval_K, "Sample size for --method sample");
    evaluate->add_option("--seed", eval_seed, "Sampling seed");
    evaluate->add_option("--tol", eval_tol, "Relative quadrature tolerance for --method exact");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    std::string solve_instance;
    std::string solve_solver;
    std::string solve_weight = "uniform";
    std::string solve_inner = "exact";
    int solve_K = 1000;
    std::uint64_t solve_seed = 1;
    int solve_max_iters = 10000;
    std::string solve_out;
    solve->add_option("--instance", solve_instance, "Instance file")->required();
    solve->add_option("--solver", solve_solver, "sampling | greedy | yager | midpoint")
        ->required()
        ->check(CLI::IsMember({"sampling", "greedy", "yager", "midpoint"}));
    solve->add_option("--weight", solve_weight, "Weight spec (yager uses its cumulative form)");
    solve->add_option("--inner", solve_inner, "Inner solver for sampling: exact | local")
        ->check(CLI::IsMember({"exact", "local"}));
    solve->add_option("--K", solve_K, "Scenario count for sampling/greedy");
    solve->add_option("--seed", solve_seed, "Scenario sampling seed");
    solve->add_option("--max-iters", solve_max_iters, "Local search iteration cap");
    solve->add_option("--out", solve_out, "Write the solve report as JSON to this file");

    // export-milp
    auto* milp = app.add_subcommand("export-milp", "Export the duality-based MILP of the sampled problem");
    std::string milp_instance;
    std::string milp_weight = "uniform";
    int milp_K = 100;
    std::uint64_t milp_seed = 1;
    std::string milp_out;
    milp->add_option("--instance", milp_instance, "Instance file")->required();
    milp->add_option("--weight", milp_weight, "Weight spec (must be nonincreasing)");
    milp->add_option("--K", milp_K, "Scenario count");
    milp->add_option("--seed", milp_seed, "Scenario sampling seed");
    milp->add_option("-o,--out", milp_out, "Output LP file")->required();

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a configured experiment sweep");
    std::string exp_config;
    std::string exp_output_override;
    experiment->add_option("--config", exp_config, "Experiment config JSON file")->required();
    experiment->add_option("--output", exp_output_override, "Override the config's output prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            const owa::IntervalInstance instance =
                owa::generate_instance(owa::parse_instance_type(gen_type), gen_n, gen_seed, gen_p);
            write_file(gen_out, owa::serialize_instance(instance) + "\n");
            std::printf("wrote %s (n=%d)\n", gen_out.c_str(), instance.n());
        } else if (*evaluate) {
            const owa::IntervalInstance instance = load_instance(eval_instance);
            const owa::Solution x = owa::parse_solution(read_file(eval_solution), instance.n());
            const owa::WeightDensity w = owa::parse_weight_spec(eval_weight);
            const double value = eval_method == "exact"
                                     ? owa::interval_owa_exact(instance, w, x, eval_tol)
                                     : owa::interval_owa_sampled(instance, w, x, eval_K, eval_seed);
            std::printf("%.12g\n", value);
        } else if (*solve) {
            const owa::IntervalInstance instance = load_instance(solve_instance);
            owa::SolveReport report;
            if (solve_solver == "sampling") {
                const owa::InnerSolver inner = solve_inner == "exact"
                                                   ? owa::InnerSolver::Exact
                                                   : owa::InnerSolver::LocalSearch;
                report = owa::solve_sampling(instance, owa::parse_weight_spec(solve_weight),
                                             solve_K, solve_seed, inner, solve_max_iters);
            } else if (solve_solver == "greedy") {
                report = owa::solve_greedy_matroid(instance, owa::parse_weight_spec(solve_weight),
                                                   solve_K, solve_seed);
            } else if (solve_solver == "yager") {
                report = owa::solve_yager(
                    instance, owa::cumulative_from_density(owa::parse_weight_spec(solve_weight)));
            } else {
                report = owa::solve_midpoint(instance);
            }
            print_report(report, solve_out);
        } else if (*milp) {
            const owa::IntervalInstance instance = load_instance(milp_instance);
            const owa::ScenarioSample sample = owa::sample_scenarios(
                instance, owa::parse_weight_spec(milp_weight), milp_K, milp_seed);
            write_file(milp_out, owa::export_milp(sample, instance.feasibility));
            std::printf("wrote %s (K=%d)\n", milp_out.c_str(), milp_K);
        } else if (*experiment) {
            owa::ExperimentConfig config = owa::parse_experiment_config(read_file(exp_config));
            if (!exp_output_override.empty()) {
                config.output = exp_output_override;
            }
            const auto rows = owa::run_experiment_to_files(config);
            std::printf("wrote %s.csv (%zu rows)\n", config.output.c_str(), rows.size());
            std::printf("wrote %s_summary.csv\n", config.output.c_str());
        }
    } catch (const owa::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 0;
}
