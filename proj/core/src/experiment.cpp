#include "owa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "owa/discrete_owa.hpp"
#include "owa/errors.hpp"
#include "owa/evaluate.hpp"
#include "owa/rng.hpp"
#include "format.hpp"

namespace owa {

namespace {

using nlohmann::json;

struct Cell {
    double alpha = 0.0;
    int K = 0;
    int instance_id = 0; // 1-based
};

std::vector<Cell> build_cells(const ExperimentConfig& config) {
    std::vector<Cell> cells;
    const std::vector<int> k_sweep =
        config.experiment == 1
            ? config.K_values
            : std::vector<int>{*std::max_element(config.K_values.begin(), config.K_values.end())};
    for (double alpha : config.alphas) {
        for (int K : k_sweep) {
            for (int id = 1; id <= config.instances; ++id) {
                cells.push_back({alpha, K, id});
            }
        }
    }
    return cells;
}

bool runs_sampling(const ExperimentConfig& config) {
    return config.experiment == 1 || config.experiment == 3;
}

int worker_count(std::size_t cells) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    long limit = static_cast<long>(hw);
    if (const char* env = std::getenv("INTERVAL_OWA_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            limit = parsed;
        }
    }
    return static_cast<int>(std::min<long>(limit, static_cast<long>(std::max<std::size_t>(cells, 1))));
}

std::vector<ExperimentRow> run_cell(const ExperimentConfig& config, const Cell& cell) {
    const std::uint64_t gen_seed =
        derive_seed(config.seed, seed_stream::kGenerate, static_cast<std::uint64_t>(cell.instance_id));
    const std::uint64_t solve_seed =
        derive_seed(config.seed, seed_stream::kSolve, static_cast<std::uint64_t>(cell.instance_id),
                    static_cast<std::uint64_t>(cell.K));
    const std::uint64_t eval_seed =
        derive_seed(config.seed, seed_stream::kEvaluate, static_cast<std::uint64_t>(cell.instance_id));

    const IntervalInstance instance =
        generate_instance(config.instance_type, config.n, gen_seed, config.p);
    const WeightDensity w = make_power_weight(cell.alpha);

    std::vector<SolveReport> reports;
    if (runs_sampling(config)) {
        reports.push_back(solve_sampling(instance, w, cell.K, solve_seed, config.inner));
    }
    reports.push_back(solve_greedy_matroid(instance, w, cell.K, solve_seed));
    if (config.experiment != 1) {
        reports.push_back(solve_yager(instance, cumulative_from_density(w)));
        reports.push_back(solve_midpoint(instance));
    }

    std::vector<ExperimentRow> rows;
    rows.reserve(reports.size());
    for (const SolveReport& report : reports) {
        ExperimentRow row;
        row.experiment = config.experiment;
        row.instance_type = config.instance_type;
        row.n = config.n;
        row.p = config.p;
        row.alpha = cell.alpha;
        row.K = cell.K;
        row.instance_id = cell.instance_id;
        row.method = report.solver;
        row.objective = evaluate_final(instance, w, report.solution, config.K_eval, eval_seed);
        row.wall_time_s = report.wall_time_s;
        row.seed = solve_seed;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

void ExperimentConfig::validate() const {
    if (experiment < 1 || experiment > 3) {
        throw ValidationError("experiment must be 1, 2 or 3");
    }
    if (n < 1) {
        throw ValidationError("n must be at least 1");
    }
    if (p < 0 || p > n) {
        throw ValidationError("p must lie in [0, n]");
    }
    if (instances < 1) {
        throw ValidationError("instances must be at least 1");
    }
    if (alphas.empty()) {
        throw ValidationError("alphas must be nonempty");
    }
    for (double alpha : alphas) {
        if (!(alpha >= 1.0)) {
            throw ValidationError("every alpha must be >= 1 (power weight family)");
        }
    }
    if (K_values.empty()) {
        throw ValidationError("K_values must be nonempty");
    }
    for (int K : K_values) {
        if (K < 1) {
            throw ValidationError("every K must be at least 1");
        }
    }
    if (K_eval < 1) {
        throw ValidationError("K_eval must be at least 1");
    }
    if (output.empty()) {
        throw ValidationError("output prefix must be nonempty");
    }
    if (runs_sampling(*this) && inner == InnerSolver::Exact &&
        count_combinations(n, p) > kEnumerationCap) {
        throw ValidationError(
            "this experiment solves the sampled problem exactly, but C(n, p) exceeds the "
            "enumeration cap; reduce n/p or set \"inner\": \"local\"");
    }
}

ExperimentConfig parse_experiment_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed experiment config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("experiment config must be a JSON object");
    }

    static const std::vector<std::string> known = {
        "experiment", "n",      "p",      "instance_type", "instances", "alphas",
        "K_values",   "K_eval", "seed",   "output",        "inner"};
    for (const auto& [key, value] : doc.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ParseError("unknown experiment config field '" + key + "'");
        }
    }

    ExperimentConfig config;
    try {
        if (doc.contains("experiment")) config.experiment = doc["experiment"].get<int>();
        if (doc.contains("n")) config.n = doc["n"].get<int>();
        if (doc.contains("p")) config.p = doc["p"].get<int>();
        if (doc.contains("instance_type"))
            config.instance_type = parse_instance_type(doc["instance_type"].get<std::string>());
        if (doc.contains("instances")) config.instances = doc["instances"].get<int>();
        if (doc.contains("alphas")) config.alphas = doc["alphas"].get<std::vector<double>>();
        if (doc.contains("K_values")) config.K_values = doc["K_values"].get<std::vector<int>>();
        if (doc.contains("K_eval")) config.K_eval = doc["K_eval"].get<int>();
        if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("output")) config.output = doc["output"].get<std::string>();
        if (doc.contains("inner")) {
            const std::string inner = doc["inner"].get<std::string>();
            if (inner == "exact") {
                config.inner = InnerSolver::Exact;
            } else if (inner == "local") {
                config.inner = InnerSolver::LocalSearch;
            } else {
                throw ParseError("inner must be \"exact\" or \"local\"");
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid experiment config field: ") + e.what());
    }

    config.validate();
    return config;
}

std::string experiment_csv_header() {
    return "experiment,instance_type,n,p,alpha,K,instance_id,method,objective,wall_time_s,seed";
}

std::string experiment_csv_row(const ExperimentRow& row) {
    std::ostringstream out;
    out << row.experiment << ',' << instance_type_name(row.instance_type) << ',' << row.n << ','
        << row.p << ',' << format_double(row.alpha) << ',' << row.K << ',' << row.instance_id
        << ',' << row.method << ',' << format_double(row.objective) << ','
        << format_double(row.wall_time_s) << ',' << row.seed;
    return out.str();
}

std::vector<AggregateRow> aggregate_experiment(const std::vector<ExperimentRow>& rows) {
    std::vector<AggregateRow> groups;
    const auto find_group = [&groups](const ExperimentRow& row) -> AggregateRow& {
        for (auto& g : groups) {
            if (g.alpha == row.alpha && g.K == row.K && g.method == row.method) {
                return g;
            }
        }
        AggregateRow g;
        g.instance_type = row.instance_type;
        g.n = row.n;
        g.p = row.p;
        g.alpha = row.alpha;
        g.K = row.K;
        g.method = row.method;
        groups.push_back(std::move(g));
        return groups.back();
    };

    // First pass: means.
    for (const ExperimentRow& row : rows) {
        AggregateRow& g = find_group(row);
        ++g.runs;
        g.mean_objective += row.objective;
        g.mean_wall_time_s += row.wall_time_s;
    }
    for (auto& g : groups) {
        g.mean_objective /= g.runs;
        g.mean_wall_time_s /= g.runs;
    }
    // Second pass: standard error of the mean across instances.
    for (const ExperimentRow& row : rows) {
        AggregateRow& g = find_group(row);
        const double d = row.objective - g.mean_objective;
        g.stderr_objective += d * d;
    }
    for (auto& g : groups) {
        g.stderr_objective =
            g.runs > 1 ? std::sqrt(g.stderr_objective / (g.runs - 1)) / std::sqrt(g.runs) : 0.0;
    }
    return groups;
}

double evaluate_final(const IntervalInstance& instance, const WeightDensity& w, const Solution& x,
                      int K_eval, std::uint64_t eval_seed) {
    return interval_owa_sampled(instance, w, x, K_eval, eval_seed);
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          const std::function<void(const ExperimentRow&)>& on_row) {
    config.validate();
    const std::vector<Cell> cells = build_cells(config);
    std::vector<ExperimentRow> all_rows;

    const auto emit = [&](std::vector<ExperimentRow>& rows) {
        for (ExperimentRow& row : rows) {
            if (on_row) {
                on_row(row);
            }
            all_rows.push_back(std::move(row));
        }
    };

    const int workers = worker_count(cells.size());
    if (workers <= 1) {
        for (const Cell& cell : cells) {
            std::vector<ExperimentRow> rows = run_cell(config, cell);
            emit(rows);
        }
        return all_rows;
    }

    // Workers claim cells from a shared counter; the caller's thread emits
    // finished cells strictly in cell order so output bytes do not depend on
    // scheduling.
    std::vector<std::vector<ExperimentRow>> results(cells.size());
    std::vector<std::exception_ptr> failures(cells.size());
    std::vector<char> done(cells.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex mutex;
    std::condition_variable ready;

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (!abort.load(std::memory_order_relaxed)) {
                const std::size_t index = next.fetch_add(1);
                if (index >= cells.size()) {
                    return;
                }
                try {
                    results[index] = run_cell(config, cells[index]);
                } catch (...) {
                    failures[index] = std::current_exception();
                    abort.store(true, std::memory_order_relaxed);
                }
                {
                    std::lock_guard<std::mutex> lock(mutex);
                    done[index] = 1;
                }
                ready.notify_all();
            }
        });
    }

    std::exception_ptr first_failure;
    for (std::size_t index = 0; index < cells.size(); ++index) {
        {
            std::unique_lock<std::mutex> lock(mutex);
            ready.wait(lock, [&] { return done[index] != 0 || abort.load(); });
            if (done[index] == 0) {
                break; // aborted before this cell ran
            }
        }
        if (failures[index]) {
            first_failure = failures[index];
            break;
        }
        emit(results[index]);
    }

    abort.store(true);
    ready.notify_all();
    for (auto& thread : pool) {
        thread.join();
    }
    if (first_failure) {
        std::rethrow_exception(first_failure);
    }
    // An abort without a recorded failure cannot happen on this path.
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return all_rows;
}

std::vector<ExperimentRow> run_experiment_to_files(const ExperimentConfig& config) {
    config.validate();
    const std::filesystem::path csv_path = config.output + ".csv";
    if (csv_path.has_parent_path()) {
        std::filesystem::create_directories(csv_path.parent_path());
    }
    std::ofstream csv(csv_path);
    if (!csv) {
        throw Error("cannot open output file " + csv_path.string());
    }
    csv << experiment_csv_header() << '\n';
    csv.flush();

    const std::vector<ExperimentRow> rows = run_experiment(config, [&csv](const ExperimentRow& row) {
        csv << experiment_csv_row(row) << '\n';
        csv.flush(); // interrupted runs keep every completed row
    });

    std::ofstream summary(config.output + "_summary.csv");
    if (!summary) {
        throw Error("cannot open output file " + config.output + "_summary.csv");
    }
    summary << "experiment,instance_type,n,p,alpha,K,method,runs,mean_objective,"
               "stderr_objective,mean_wall_time_s\n";
    for (const AggregateRow& g : aggregate_experiment(rows)) {
        summary << config.experiment << ',' << instance_type_name(g.instance_type) << ',' << g.n
                << ',' << g.p << ',' << format_double(g.alpha) << ',' << g.K << ',' << g.method
                << ',' << g.runs << ',' << format_double(g.mean_objective) << ','
                << format_double(g.stderr_objective) << ',' << format_double(g.mean_wall_time_s)
                << '\n';
    }
    return rows;
}

} // namespace owa
