#ifndef OWA_SOLVERS_HPP
#define OWA_SOLVERS_HPP

#include <cstdint>
#include <span>

#include "owa/discrete_owa.hpp"
#include "owa/instance.hpp"
#include "owa/solve_report.hpp"
#include "owa/weights.hpp"

namespace owa {

enum class InnerSolver { Exact, LocalSearch };

/// Minimizes a known cost vector over the feasible set: the p cheapest items
/// for a selection (ties to the smaller index), greedy-by-cost with the
/// independence oracle for matroids (optimal for linear costs).
Solution nominal_solve(std::span<const double> costs, const FeasibleSet& fs);

/// Sampling solver: draws K scenarios with bin-integral rank weights, then
/// minimizes the discrete OWA value with the chosen inner solver. The exact
/// inner solver enumerates bases; local search starts from the nominal
/// solution of the mean sampled scenario.
SolveReport solve_sampling(const IntervalInstance& instance, const WeightDensity& w, int K,
                           std::uint64_t seed, InnerSolver inner = InnerSolver::Exact,
                           int max_local_iters = 10000);

/// Sampling solver over an explicit candidate list.
SolveReport solve_sampling(const IntervalInstance& instance, const WeightDensity& w, int K,
                           std::uint64_t seed, std::span<const Solution> candidates);

struct GreedyOptions {
    /// Reuse per-scenario partial sums of the current set when scoring
    /// extensions. Off, the sums are rebuilt from scratch per candidate in
    /// the same accumulation order, so results are bit-identical either way.
    bool use_partial_sum_cache = true;
};

/// Greedy basis construction: one scenario sample up front, then repeatedly
/// add the independence-preserving element whose addition minimizes the
/// discrete OWA value of the partial selection (ties to the smallest index).
SolveReport solve_greedy_matroid(const IntervalInstance& instance, const WeightDensity& w, int K,
                                 std::uint64_t seed, const GreedyOptions& options = {});

/// Bound-aggregation baseline: reduces the cumulative quantifier to
/// lambda = integral of W, then minimizes lambda * hi + (1 - lambda) * lo as
/// a nominal problem. Reports lambda * b + (1 - lambda) * a.
SolveReport solve_yager(const IntervalInstance& instance, const CumulativeWeight& W,
                        double quad_tol = 1e-10);
SolveReport solve_yager(const IntervalInstance& instance, const CumulativeWeight& W,
                        double quad_tol, std::span<const Solution> candidates);

/// Midpoint baseline: minimizes the interval-center costs (a 2-approximation
/// of the interval OWA problem for nonincreasing densities).
SolveReport solve_midpoint(const IntervalInstance& instance);

} // namespace owa

#endif // OWA_SOLVERS_HPP
