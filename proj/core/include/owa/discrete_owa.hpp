#ifndef OWA_DISCRETE_OWA_HPP
#define OWA_DISCRETE_OWA_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "owa/evaluate.hpp"
#include "owa/instance.hpp"
#include "owa/solve_report.hpp"

namespace owa {

/// Largest number of bases the exact enumerative solver will visit.
inline constexpr long long kEnumerationCap = 2'000'000;

/// Discrete OWA operator: scenario costs of x sorted nonincreasingly and
/// dotted with the rank weights. Ties sort by scenario index, which cannot
/// change the value.
double discrete_owa_value(const ScenarioSample& sample, const Solution& x);

/// Number of p-subsets of n, saturating at cap + 1.
long long count_combinations(int n, int p, long long cap = kEnumerationCap);

/// Visits every basis of the feasible set in lexicographic order of the
/// selected index lists; stops early if the visitor returns false. Only
/// Selection / uniform-matroid feasibility is enumerable.
void for_each_basis(const FeasibleSet& fs, const std::function<bool(const Solution&)>& visit);

/// Exact minimizer of the discrete OWA value by basis enumeration. Ties
/// break to the lexicographically smallest selected-index list. Throws
/// CapabilityError when the basis count exceeds kEnumerationCap.
SolveReport solve_discrete_owa_exact(const ScenarioSample& sample, const FeasibleSet& feasibility);

/// Exact minimizer over an explicit candidate list (for feasible sets that
/// are neither selections nor matroids); ties keep the earliest candidate.
SolveReport solve_discrete_owa_exact(const ScenarioSample& sample,
                                     std::span<const Solution> candidates);

/// First-improvement local search over the swap neighborhood (drop one
/// selected item, add one unselected, keep feasibility). Scans removals and
/// additions in ascending index order; each accepted move counts one
/// iteration. Stops at a local optimum or after max_iters moves.
SolveReport local_search_discrete_owa(const ScenarioSample& sample, const FeasibleSet& feasibility,
                                      const Solution& start, int max_iters);

/// CPLEX-LP text of the duality-based formulation of the discrete OWA
/// problem for nonincreasing weights:
///   min sum_k alpha_k + beta_k
///   s.t. alpha_k + beta_j >= w_k * (c^j)^T x  for all j, k
///        sum_i x_i = p, x binary, alpha/beta free.
/// Throws ValidationError when the weights are not nonincreasing.
std::string export_milp(const ScenarioSample& sample, const FeasibleSet& feasibility);

} // namespace owa

#endif // OWA_DISCRETE_OWA_HPP
