#ifndef OWA_EVALUATE_HPP
#define OWA_EVALUATE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "owa/distribution.hpp"
#include "owa/instance.hpp"
#include "owa/weights.hpp"

namespace owa {

/// K sampled cost vectors (scenario-major) with the bin-integral weights of
/// the discrete operator. Scenario k / item i is a pure function of
/// (seed, k, i), so a sample of size K is a prefix of any larger sample with
/// the same seed.
struct ScenarioSample {
    int n = 0;
    std::vector<double> costs; // K * n, scenario-major
    BinWeights weights;        // length K
    std::uint64_t seed = 0;

    int K() const { return n == 0 ? 0 : static_cast<int>(costs.size()) / n; }

    double cost(int k, int i) const {
        return costs[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(i)];
    }

    std::span<const double> scenario(int k) const {
        return {costs.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(n),
                static_cast<std::size_t>(n)};
    }
};

/// Draws K cost vectors, each coordinate independently uniform on its
/// interval; weights default to the uniform 1/K bins.
ScenarioSample sample_scenarios(const IntervalInstance& instance, int K, std::uint64_t seed);

/// Same, with weights = bin_integrals(w, K).
ScenarioSample sample_scenarios(const IntervalInstance& instance, const WeightDensity& w,
                                int K, std::uint64_t seed);

/// Sorted sample of c^T x over K scenarios (the empirical quantile function).
struct EmpiricalQuantiles {
    std::vector<double> sorted_values; // nondecreasing
    std::uint64_t seed = 0;

    int K() const { return static_cast<int>(sorted_values.size()); }
};

/// Streams the K scenario costs of x without materializing full scenarios;
/// bit-identical to evaluating c^T x on sample_scenarios(instance, K, seed).
EmpiricalQuantiles empirical_quantiles(const IntervalInstance& instance, const Solution& x,
                                       int K, std::uint64_t seed);

/// The interval OWA objective: integral over t of w(t) * VaR_{1-t}(c^T x).
/// Evaluated in the quantile-inverse variable as
///   lower + integral over the support of W(1 - F(y)) dy,
/// which is algebraically identical, needs one CDF evaluation per quadrature
/// node instead of a quantile inversion, and keeps the integrand continuous
/// even for discontinuous densities. Panels split where 1 - F crosses a
/// density breakpoint. tol is the relative quadrature tolerance.
double interval_owa_exact(const CostDistribution& dist, const WeightDensity& w,
                          double tol = 1e-6);
double interval_owa_exact(const IntervalInstance& instance, const WeightDensity& w,
                          const Solution& x, double tol = 1e-6);

/// Rank-weighted sum over values sorted nonincreasingly:
/// sum_k weights[k] * values_desc[k]. Shared by the discrete operator and
/// the sampled evaluator.
double owa_rank_dot(std::span<const double> values_desc, std::span<const double> weights);

/// Discrete-OWA estimate of the interval OWA objective: K sampled costs of
/// x, sorted nonincreasingly, dotted with bin_integrals(w, K). Converges to
/// interval_owa_exact as K grows.
double interval_owa_sampled(const IntervalInstance& instance, const WeightDensity& w,
                            const Solution& x, int K, std::uint64_t seed);

} // namespace owa

#endif // OWA_EVALUATE_HPP
