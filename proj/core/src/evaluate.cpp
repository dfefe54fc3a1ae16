#include "owa/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "owa/errors.hpp"
#include "owa/quadrature.hpp"
#include "owa/rng.hpp"

namespace owa {

ScenarioSample sample_scenarios(const IntervalInstance& instance, int K, std::uint64_t seed) {
    if (K < 1) {
        throw ParameterError("sample size K must be at least 1");
    }
    ScenarioSample sample;
    sample.n = instance.n();
    sample.seed = seed;
    sample.costs.resize(static_cast<std::size_t>(K) * static_cast<std::size_t>(sample.n));
    for (int k = 0; k < K; ++k) {
        for (int i = 0; i < sample.n; ++i) {
            const Interval& item = instance.items[static_cast<std::size_t>(i)];
            sample.costs[static_cast<std::size_t>(k) * static_cast<std::size_t>(sample.n) +
                         static_cast<std::size_t>(i)] =
                keyed_uniform(seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(i),
                              item.lo, item.hi);
        }
    }
    sample.weights.values.assign(static_cast<std::size_t>(K), 1.0 / K);
    return sample;
}

ScenarioSample sample_scenarios(const IntervalInstance& instance, const WeightDensity& w,
                                int K, std::uint64_t seed) {
    ScenarioSample sample = sample_scenarios(instance, K, seed);
    sample.weights = bin_integrals(w, K);
    return sample;
}

EmpiricalQuantiles empirical_quantiles(const IntervalInstance& instance, const Solution& x,
                                       int K, std::uint64_t seed) {
    if (K < 1) {
        throw ParameterError("sample size K must be at least 1");
    }
    if (static_cast<int>(x.size()) != instance.n()) {
        throw DimensionError("solution length does not match instance size");
    }
    const std::vector<int> selected = x.selected_indices();

    EmpiricalQuantiles eq;
    eq.seed = seed;
    eq.sorted_values.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        double total = 0.0;
        for (int i : selected) {
            const Interval& item = instance.items[static_cast<std::size_t>(i)];
            total += keyed_uniform(seed, static_cast<std::uint64_t>(k),
                                   static_cast<std::uint64_t>(i), item.lo, item.hi);
        }
        eq.sorted_values[static_cast<std::size_t>(k)] = total;
    }
    std::sort(eq.sorted_values.begin(), eq.sorted_values.end());
    return eq;
}

double interval_owa_exact(const CostDistribution& dist, const WeightDensity& w, double tol) {
    if (dist.point_mass()) {
        return dist.lower(); // weighted average of a constant
    }

    // Split the support where 1 - F(y) crosses a density breakpoint, so each
    // panel sees a smooth integrand.
    std::vector<double> cuts;
    for (double tb : w.breakpoints()) {
        if (tb > 0.0 && tb < 1.0) {
            cuts.push_back(exact_var(dist, 1.0 - tb));
        }
    }

    const auto integrand = [&dist, &w](double y) { return w.cumulative(1.0 - exact_cdf(dist, y)); };
    const double tail_mass =
        integrate_piecewise(integrand, dist.lower(), dist.upper(), cuts, tol);
    return dist.lower() + tail_mass;
}

double interval_owa_exact(const IntervalInstance& instance, const WeightDensity& w,
                          const Solution& x, double tol) {
    return interval_owa_exact(build_distribution(instance, x), w, tol);
}

double owa_rank_dot(std::span<const double> values_desc, std::span<const double> weights) {
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t k = 0; k < values_desc.size(); ++k) {
        const double v = weights[k] * values_desc[k];
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double interval_owa_sampled(const IntervalInstance& instance, const WeightDensity& w,
                            const Solution& x, int K, std::uint64_t seed) {
    const EmpiricalQuantiles eq = empirical_quantiles(instance, x, K, seed);
    const BinWeights bins = bin_integrals(w, K);
    std::vector<double> desc(eq.sorted_values.rbegin(), eq.sorted_values.rend());
    return owa_rank_dot(desc, bins.values);
}

} // namespace owa
