#include "owa/discrete_owa.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <variant>

#include "owa/errors.hpp"
#include "format.hpp"

namespace owa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_sample_dimensions(const ScenarioSample& sample, std::size_t n) {
    if (static_cast<std::size_t>(sample.n) != n) {
        throw DimensionError("scenario sample dimension does not match solution length");
    }
    if (sample.weights.K() != sample.K()) {
        throw DimensionError("rank weight count does not match scenario count");
    }
}

// Scenario costs of the selected index set, sorted nonincreasingly into
// `scratch`, then dotted with the rank weights.
double value_of_selection(const ScenarioSample& sample, std::span<const int> selected,
                          std::vector<double>& scratch) {
    const int K = sample.K();
    scratch.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        double total = 0.0;
        for (int i : selected) {
            total += sample.cost(k, i);
        }
        scratch[static_cast<std::size_t>(k)] = total;
    }
    std::sort(scratch.begin(), scratch.end(), std::greater<>());
    return owa_rank_dot(scratch, sample.weights.values);
}

bool enumerable_rank(const FeasibleSet& fs, int& n, int& p) {
    n = feasible_set_size(fs);
    if (const auto* sel = std::get_if<Selection>(&fs)) {
        p = sel->p;
        return true;
    }
    const auto& oracle = std::get<MatroidOracle>(fs);
    if (oracle.uniform_rank) {
        p = *oracle.uniform_rank;
        return true;
    }
    return false;
}

} // namespace

double discrete_owa_value(const ScenarioSample& sample, const Solution& x) {
    check_sample_dimensions(sample, x.size());
    const std::vector<int> selected = x.selected_indices();
    std::vector<double> scratch;
    return value_of_selection(sample, selected, scratch);
}

long long count_combinations(int n, int p, long long cap) {
    if (p < 0 || p > n) {
        return 0;
    }
    p = std::min(p, n - p);
    long long count = 1;
    for (int i = 1; i <= p; ++i) {
        count = count * (n - p + i) / i; // exact: product of i consecutive ints is divisible by i!
        if (count > cap) {
            return cap + 1;
        }
    }
    return count;
}

void for_each_basis(const FeasibleSet& fs, const std::function<bool(const Solution&)>& visit) {
    int n = 0;
    int p = 0;
    if (!enumerable_rank(fs, n, p)) {
        throw CapabilityError(
            "basis enumeration requires selection or uniform-matroid feasibility; "
            "use local search or the greedy solver for general matroid oracles");
    }
    if (p < 0 || p > n) {
        throw ValidationError("basis rank out of range");
    }

    std::vector<int> combo(static_cast<std::size_t>(p));
    std::iota(combo.begin(), combo.end(), 0);
    Solution x(static_cast<std::size_t>(n));
    for (int i : combo) {
        x.set(static_cast<std::size_t>(i), true);
    }

    while (true) {
        if (!visit(x)) {
            return;
        }
        // Advance to the next p-subset in lexicographic index order.
        int pos = p - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - p + pos) {
            --pos;
        }
        if (pos < 0) {
            return;
        }
        for (int j = pos; j < p; ++j) {
            x.set(static_cast<std::size_t>(combo[static_cast<std::size_t>(j)]), false);
        }
        ++combo[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < p; ++j) {
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j) - 1] + 1;
        }
        for (int j = pos; j < p; ++j) {
            x.set(static_cast<std::size_t>(combo[static_cast<std::size_t>(j)]), true);
        }
    }
}

SolveReport solve_discrete_owa_exact(const ScenarioSample& sample, const FeasibleSet& feasibility) {
    const auto start = Clock::now();
    int n = 0;
    int p = 0;
    if (!enumerable_rank(feasibility, n, p)) {
        throw CapabilityError(
            "exact discrete OWA solving requires selection or uniform-matroid feasibility");
    }
    check_sample_dimensions(sample, static_cast<std::size_t>(n));

    const long long bases = count_combinations(n, p);
    if (bases > kEnumerationCap) {
        std::ostringstream msg;
        msg << "basis count exceeds the enumeration cap of " << kEnumerationCap
            << "; use local search or export the MILP formulation";
        throw CapabilityError(msg.str());
    }

    SolveReport report;
    report.solver = "discrete_exact";
    report.K = sample.K();
    report.seed = sample.seed;

    std::vector<double> scratch;
    std::vector<int> selected;
    bool first = true;
    for_each_basis(feasibility, [&](const Solution& x) {
        selected = x.selected_indices();
        const double value = value_of_selection(sample, selected, scratch);
        if (first || value < report.reported_objective) {
            // Strict improvement keeps the lexicographically first argmin.
            report.reported_objective = value;
            report.solution = x;
            first = false;
        }
        return true;
    });

    report.wall_time_s = seconds_since(start);
    return report;
}

SolveReport solve_discrete_owa_exact(const ScenarioSample& sample,
                                     std::span<const Solution> candidates) {
    const auto start = Clock::now();
    if (candidates.empty()) {
        throw ValidationError("candidate list is empty");
    }

    SolveReport report;
    report.solver = "discrete_exact";
    report.K = sample.K();
    report.seed = sample.seed;

    bool first = true;
    for (const Solution& x : candidates) {
        const double value = discrete_owa_value(sample, x);
        if (first || value < report.reported_objective) {
            report.reported_objective = value;
            report.solution = x;
            first = false;
        }
    }
    report.wall_time_s = seconds_since(start);
    return report;
}

SolveReport local_search_discrete_owa(const ScenarioSample& sample, const FeasibleSet& feasibility,
                                      const Solution& start, int max_iters) {
    const auto t0 = Clock::now();
    if (!is_basis(feasibility, start)) {
        throw ValidationError("local search requires a feasible starting solution");
    }
    check_sample_dimensions(sample, start.size());

    const int n = feasible_set_size(feasibility);
    const auto* oracle = std::get_if<MatroidOracle>(&feasibility);

    Solution current = start;
    double current_value = discrete_owa_value(sample, current);

    int iters = 0;
    bool improved = true;
    while (improved && iters < max_iters) {
        improved = false;
        const std::vector<int> selected = current.selected_indices();
        for (int out : selected) {
            for (int in = 0; in < n && !improved; ++in) {
                if (current.selected(static_cast<std::size_t>(in))) {
                    continue;
                }
                Solution neighbor = current;
                neighbor.set(static_cast<std::size_t>(out), false);
                neighbor.set(static_cast<std::size_t>(in), true);
                if (oracle && !oracle->is_independent(neighbor.selected_indices())) {
                    continue;
                }
                const double value = discrete_owa_value(sample, neighbor);
                if (value < current_value) {
                    current = std::move(neighbor);
                    current_value = value;
                    ++iters;
                    improved = true;
                }
            }
            if (improved) {
                break; // first improvement: restart the scan from the new solution
            }
        }
    }

    SolveReport report;
    report.solver = "local_search";
    report.K = sample.K();
    report.seed = sample.seed;
    report.solution = std::move(current);
    report.reported_objective = current_value;
    report.params.emplace_back("iterations", std::to_string(iters));
    report.wall_time_s = seconds_since(t0);
    return report;
}

std::string export_milp(const ScenarioSample& sample, const FeasibleSet& feasibility) {
    int n = 0;
    int p = 0;
    if (!enumerable_rank(feasibility, n, p)) {
        throw ValidationError("MILP export requires selection or uniform-matroid feasibility");
    }
    check_sample_dimensions(sample, static_cast<std::size_t>(n));

    const auto& w = sample.weights.values;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k + 1] > w[k] + 1e-12) {
            std::ostringstream msg;
            msg << "the duality-based formulation requires nonincreasing rank weights, but "
                << "weight " << (k + 2) << " (" << w[k + 1] << ") exceeds weight " << (k + 1)
                << " (" << w[k] << ")";
            throw ValidationError(msg.str());
        }
    }

    const int K = sample.K();
    std::ostringstream lp;
    lp << "Minimize\n obj:";
    for (int k = 1; k <= K; ++k) {
        lp << (k == 1 ? " " : " + ") << "alpha_" << k << " + beta_" << k;
    }
    lp << "\nSubject To\n";

    // alpha_k + beta_j - w_k * c^j . x >= 0 for all rank/scenario pairs.
    for (int k = 0; k < K; ++k) {
        for (int j = 0; j < K; ++j) {
            lp << " dual_" << (k + 1) << "_" << (j + 1) << ": alpha_" << (k + 1) << " + beta_"
               << (j + 1);
            for (int i = 0; i < n; ++i) {
                const double coeff = w[static_cast<std::size_t>(k)] * sample.cost(j, i);
                if (coeff == 0.0) {
                    continue;
                }
                lp << (coeff < 0.0 ? " + " : " - ") << format_double(std::abs(coeff)) << " x_"
                   << (i + 1);
            }
            lp << " >= 0\n";
        }
    }

    lp << " cardinality:";
    for (int i = 1; i <= n; ++i) {
        lp << (i == 1 ? " " : " + ") << "x_" << i;
    }
    lp << " = " << p << "\n";

    lp << "Bounds\n";
    for (int k = 1; k <= K; ++k) {
        lp << " alpha_" << k << " free\n";
    }
    for (int k = 1; k <= K; ++k) {
        lp << " beta_" << k << " free\n";
    }

    lp << "Binaries\n";
    for (int i = 1; i <= n; ++i) {
        lp << (i == 1 ? " " : " ") << "x_" << i;
    }
    lp << "\nEnd\n";
    return lp.str();
}

} // namespace owa
