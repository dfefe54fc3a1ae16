#include "owa/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <variant>

#include "owa/errors.hpp"
#include "format.hpp"

namespace owa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> indices_by_cost(std::span<const double> costs) {
    std::vector<int> order(costs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return costs[static_cast<std::size_t>(a)] <
                                                costs[static_cast<std::size_t>(b)]; });
    return order;
}

} // namespace

Solution nominal_solve(std::span<const double> costs, const FeasibleSet& fs) {
    const int n = feasible_set_size(fs);
    if (static_cast<int>(costs.size()) != n) {
        throw DimensionError("cost vector length does not match the feasible set's ground set");
    }
    const std::vector<int> order = indices_by_cost(costs);

    if (const auto* sel = std::get_if<Selection>(&fs)) {
        Solution x(static_cast<std::size_t>(n));
        for (int r = 0; r < sel->p; ++r) {
            x.set(static_cast<std::size_t>(order[static_cast<std::size_t>(r)]), true);
        }
        return x;
    }

    const auto& oracle = std::get<MatroidOracle>(fs);
    Solution x(static_cast<std::size_t>(n));
    std::vector<int> selected;
    for (int e : order) {
        std::vector<int> trial = selected;
        trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
        if (oracle.is_independent(trial)) {
            selected = std::move(trial);
            x.set(static_cast<std::size_t>(e), true);
        }
    }
    return x;
}

SolveReport solve_sampling(const IntervalInstance& instance, const WeightDensity& w, int K,
                           std::uint64_t seed, InnerSolver inner, int max_local_iters) {
    const auto start = Clock::now();
    const ScenarioSample sample = sample_scenarios(instance, w, K, seed);

    SolveReport report;
    if (inner == InnerSolver::Exact) {
        report = solve_discrete_owa_exact(sample, instance.feasibility);
        report.solver = "sampling_exact";
    } else {
        // Start from the nominal solution of the mean sampled scenario.
        std::vector<double> mean(static_cast<std::size_t>(sample.n), 0.0);
        for (int k = 0; k < sample.K(); ++k) {
            for (int i = 0; i < sample.n; ++i) {
                mean[static_cast<std::size_t>(i)] += sample.cost(k, i);
            }
        }
        for (double& c : mean) {
            c /= sample.K();
        }
        const Solution start_solution = nominal_solve(mean, instance.feasibility);
        report = local_search_discrete_owa(sample, instance.feasibility, start_solution,
                                           max_local_iters);
        report.solver = "sampling_local";
    }
    report.K = K;
    report.seed = seed;
    report.params.emplace_back("weight", w.spec_string());
    report.wall_time_s = seconds_since(start);
    return report;
}

SolveReport solve_sampling(const IntervalInstance& instance, const WeightDensity& w, int K,
                           std::uint64_t seed, std::span<const Solution> candidates) {
    const auto start = Clock::now();
    const ScenarioSample sample = sample_scenarios(instance, w, K, seed);
    SolveReport report = solve_discrete_owa_exact(sample, candidates);
    report.solver = "sampling_exact";
    report.K = K;
    report.seed = seed;
    report.params.emplace_back("weight", w.spec_string());
    report.params.emplace_back("candidates", std::to_string(candidates.size()));
    report.wall_time_s = seconds_since(start);
    return report;
}

SolveReport solve_greedy_matroid(const IntervalInstance& instance, const WeightDensity& w, int K,
                                 std::uint64_t seed, const GreedyOptions& options) {
    const auto start = Clock::now();
    const ScenarioSample sample = sample_scenarios(instance, w, K, seed);
    const FeasibleSet& fs = instance.feasibility;
    const int n = instance.n();
    const auto* oracle = std::get_if<MatroidOracle>(&fs);
    const std::optional<int> rank = basis_rank(fs);

    Solution solution(static_cast<std::size_t>(n));
    std::vector<int> added;                                    // in addition order
    std::vector<double> base(static_cast<std::size_t>(K), 0.0); // partial sums per scenario
    std::vector<double> scratch(static_cast<std::size_t>(K));
    std::vector<int> trial;

    // Scores S + {e} by the discrete OWA value; partial sums accumulate in
    // addition order whether or not the cache is on, so both paths round
    // identically.
    const auto extension_value = [&](int e) {
        for (int k = 0; k < K; ++k) {
            double partial;
            if (options.use_partial_sum_cache) {
                partial = base[static_cast<std::size_t>(k)];
            } else {
                partial = 0.0;
                for (int s : added) {
                    partial += sample.cost(k, s);
                }
            }
            scratch[static_cast<std::size_t>(k)] = partial + sample.cost(k, e);
        }
        std::sort(scratch.begin(), scratch.end(), std::greater<>());
        return owa_rank_dot(scratch, sample.weights.values);
    };

    while (true) {
        if (rank && static_cast<int>(added.size()) == *rank) {
            break;
        }
        int best_element = -1;
        double best_value = 0.0;
        for (int e = 0; e < n; ++e) {
            if (solution.selected(static_cast<std::size_t>(e))) {
                continue;
            }
            if (oracle) {
                trial = solution.selected_indices();
                trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
                if (!oracle->is_independent(trial)) {
                    continue;
                }
            }
            const double value = extension_value(e);
            if (best_element < 0 || value < best_value) {
                best_value = value;
                best_element = e;
            }
        }
        if (best_element < 0) {
            if (rank) {
                throw ValidationError(
                    "matroid oracle rejected every extension before a basis was reached");
            }
            break; // maximal independent set: a basis
        }
        solution.set(static_cast<std::size_t>(best_element), true);
        added.push_back(best_element);
        for (int k = 0; k < K; ++k) {
            base[static_cast<std::size_t>(k)] += sample.cost(k, best_element);
        }
    }

    SolveReport report;
    report.solver = "greedy";
    report.K = K;
    report.seed = seed;
    report.solution = solution;
    report.reported_objective = discrete_owa_value(sample, solution);
    report.params.emplace_back("weight", w.spec_string());
    report.wall_time_s = seconds_since(start);
    return report;
}

namespace {

SolveReport yager_report(const IntervalInstance& instance, double lambda, Solution solution,
                         Clock::time_point start) {
    const auto [a, b] = cost_bounds(instance, solution);
    SolveReport report;
    report.solver = "yager";
    report.solution = std::move(solution);
    report.reported_objective = hurwicz_value(a, b, lambda);
    report.params.emplace_back("lambda", format_double(lambda));
    report.wall_time_s = seconds_since(start);
    return report;
}

} // namespace

SolveReport solve_yager(const IntervalInstance& instance, const CumulativeWeight& W,
                        double quad_tol) {
    const auto start = Clock::now();
    const double lambda = yager_lambda(W, quad_tol);
    std::vector<double> costs;
    costs.reserve(instance.items.size());
    for (const auto& item : instance.items) {
        costs.push_back(hurwicz_value(item.lo, item.hi, lambda));
    }
    return yager_report(instance, lambda, nominal_solve(costs, instance.feasibility), start);
}

SolveReport solve_yager(const IntervalInstance& instance, const CumulativeWeight& W,
                        double quad_tol, std::span<const Solution> candidates) {
    const auto start = Clock::now();
    if (candidates.empty()) {
        throw ValidationError("candidate list is empty");
    }
    const double lambda = yager_lambda(W, quad_tol);
    const Solution* best = nullptr;
    double best_value = 0.0;
    for (const Solution& x : candidates) {
        const auto [a, b] = cost_bounds(instance, x);
        const double value = hurwicz_value(a, b, lambda);
        if (!best || value < best_value) {
            best = &x;
            best_value = value;
        }
    }
    return yager_report(instance, lambda, *best, start);
}

SolveReport solve_midpoint(const IntervalInstance& instance) {
    const auto start = Clock::now();
    const std::vector<double> mids = midpoint_costs(instance);
    SolveReport report;
    report.solver = "midpoint";
    report.solution = nominal_solve(mids, instance.feasibility);
    report.reported_objective = deterministic_cost(mids, report.solution);
    report.wall_time_s = seconds_since(start);
    return report;
}

} // namespace owa
