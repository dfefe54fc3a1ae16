#include <doctest.h>

#include <cmath>
#include <random>

#include "owa/distribution.hpp"
#include "owa/errors.hpp"
#include "test_util.hpp"

using namespace owa;

namespace {

// Closed-form CDF/quantile of the worked example, solution {1, 2}.
double cdf_pair(double y) {
    if (y <= 2) return 0.0;
    if (y <= 6) return (y - 2) * (y - 2) / 32.0;
    if (y <= 10) return 1.0 - (10 - y) * (10 - y) / 32.0;
    return 1.0;
}

double var_pair(double t) {
    return t <= 0.5 ? std::sqrt(32.0 * t) + 2.0 : 10.0 - 4.0 * std::sqrt(2.0 - 2.0 * t);
}

// Solution {3}: the single [2, 10] interval.
double cdf_single(double y) {
    if (y < 2) return 0.0;
    if (y > 10) return 1.0;
    return (y - 2) / 8.0;
}

} // namespace

TEST_CASE("build_distribution splits deterministic and uniform parts") {
    const auto instance = test::example_instance(2);

    const auto pair_dist = build_distribution(instance, Solution{1, 1, 0});
    CHECK(pair_dist.lower() == 2.0);
    CHECK(pair_dist.upper() == 10.0);
    REQUIRE(pair_dist.widths().size() == 2);
    CHECK(pair_dist.widths()[0] == 4.0);
    CHECK(pair_dist.widths()[1] == 4.0);

    const auto empty = build_distribution(instance, Solution{0, 0, 0});
    CHECK(empty.point_mass());
    CHECK(empty.lower() == 0.0);
    CHECK(empty.upper() == 0.0);

    const auto mixed = make_instance({Interval{3, 3}, Interval{1, 5}}, make_selection(2, 2));
    const auto mixed_dist = build_distribution(mixed, Solution{1, 1});
    CHECK(mixed_dist.const_total() == 3.0);
    REQUIRE(mixed_dist.widths().size() == 1);
    CHECK(mixed_dist.widths()[0] == 4.0);
    CHECK(mixed_dist.lower() == 4.0);
    CHECK(mixed_dist.upper() == 8.0);

    CHECK_THROWS_AS(build_distribution(instance, Solution{1, 0}), DimensionError);
}

TEST_CASE("exact_cdf matches the printed closed forms") {
    const auto instance = test::example_instance(2);
    const auto pair_dist = build_distribution(instance, Solution{1, 1, 0});
    CHECK(exact_cdf(pair_dist, 6.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(exact_cdf(pair_dist, 8.0) == doctest::Approx(0.875).epsilon(1e-12));
    for (int i = 0; i <= 50; ++i) {
        const double y = 1.0 + 10.0 * i / 50.0;
        CHECK(exact_cdf(pair_dist, y) == doctest::Approx(cdf_pair(y)).epsilon(1e-9));
    }

    const auto single_dist = build_distribution(instance, Solution{0, 0, 1});
    CHECK(exact_cdf(single_dist, 4.0) == doctest::Approx(0.25).epsilon(1e-12));
    for (int i = 0; i <= 50; ++i) {
        const double y = 1.0 + 10.0 * i / 50.0;
        CHECK(exact_cdf(single_dist, y) == doctest::Approx(cdf_single(y)).epsilon(1e-9));
    }
}

TEST_CASE("exact_var inverts the closed forms") {
    const auto instance = test::example_instance(2);
    const auto pair_dist = build_distribution(instance, Solution{1, 1, 0});
    CHECK(exact_var(pair_dist, 0.5) == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(exact_var(pair_dist, 0.875) == doctest::Approx(8.0).epsilon(1e-9));
    for (int i = 1; i < 50; ++i) {
        const double t = static_cast<double>(i) / 50.0;
        CHECK(exact_var(pair_dist, t) == doctest::Approx(var_pair(t)).epsilon(1e-9));
    }
    CHECK(exact_var(pair_dist, 0.0) == 2.0);
    CHECK(exact_var(pair_dist, 1.0) == 10.0);

    const auto single_dist = build_distribution(instance, Solution{0, 0, 1});
    CHECK(exact_var(single_dist, 0.25) == doctest::Approx(4.0).epsilon(1e-9));
    for (int i = 0; i <= 50; ++i) {
        const double t = static_cast<double>(i) / 50.0;
        CHECK(exact_var(single_dist, t) == doctest::Approx(2.0 + 8.0 * t).epsilon(1e-9));
    }

    CHECK_THROWS_AS(exact_var(pair_dist, 1.5), ParameterError);
}

TEST_CASE("point masses have step CDFs and constant quantiles") {
    const auto instance = make_instance({Interval{4, 4}}, make_selection(1, 1));
    const auto dist = build_distribution(instance, Solution{1});
    CHECK(exact_cdf(dist, 3.999) == 0.0);
    CHECK(exact_cdf(dist, 4.0) == 1.0);
    CHECK(exact_var(dist, 0.0) == 4.0);
    CHECK(exact_var(dist, 0.7) == 4.0);
    CHECK(exact_var(dist, 1.0) == 4.0);
}

TEST_CASE("exact paths refuse more than kExactLimit uniform items") {
    std::vector<Interval> items(static_cast<std::size_t>(kExactLimit) + 1, Interval{0, 1});
    const int n = static_cast<int>(items.size());
    const auto instance = make_instance(std::move(items), make_selection(n, n));
    Solution all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        all.set(static_cast<std::size_t>(i), true);
    }
    const auto dist = build_distribution(instance, all); // building is fine
    CHECK_THROWS_WITH_AS(exact_cdf(dist, 5.0), doctest::Contains("Monte Carlo"), CapabilityError);
    CHECK_THROWS_AS(exact_var(dist, 0.5), CapabilityError);
}

TEST_CASE("CDF is monotone with correct support endpoints") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const auto instance = test::random_selection_instance(rng, 10, 5, 0.2);
        const auto x = test::random_feasible(rng, instance);
        const auto dist = build_distribution(instance, x);
        if (!dist.point_mass()) {
            CHECK(exact_cdf(dist, dist.lower()) <= 1e-9);
            CHECK(exact_cdf(dist, dist.upper()) >= 1.0 - 1e-9);
        }
        double prev = -1.0;
        for (int i = 0; i <= 64; ++i) {
            const double y = dist.lower() + (dist.upper() - dist.lower()) * i / 64.0;
            const double F = exact_cdf(dist, y);
            CHECK(F >= prev - 1e-12);
            CHECK(F >= 0.0);
            CHECK(F <= 1.0);
            prev = F;
        }
    }
}

TEST_CASE("exact_cdf and exact_var are mutually consistent") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 25; ++trial) {
        const auto instance = test::random_selection_instance(rng, 10, 5, 0.0);
        const auto x = test::random_feasible(rng, instance);
        const auto dist = build_distribution(instance, x);
        for (int i = 1; i <= 99; i += 7) {
            const double t = i / 100.0;
            CHECK(exact_cdf(dist, exact_var(dist, t)) == doctest::Approx(t).epsilon(1e-8));
        }
    }
}

TEST_CASE("exact_cdf agrees with an independent Monte Carlo oracle") {
    std::mt19937_64 rng(23);
    const int samples = 1000000;
    for (int trial = 0; trial < 3; ++trial) {
        const auto instance = test::random_selection_instance(rng, 8, 5, 0.1);
        const auto x = test::random_feasible(rng, instance);
        const auto dist = build_distribution(instance, x);
        if (dist.point_mass()) {
            continue;
        }
        for (int i = 1; i < 20; ++i) {
            const double y = dist.lower() + (dist.upper() - dist.lower()) * i / 20.0;
            const double exact = exact_cdf(dist, y);
            const double estimate = test::mc_cdf(instance, x, y, samples, rng);
            const double band = 4.0 * std::sqrt(std::max(exact * (1 - exact), 1e-12) / samples);
            CHECK(std::abs(estimate - exact) <= band + 1e-9);
        }
    }
}

TEST_CASE("grouped equal widths match ungrouped arithmetic") {
    // Same distribution through two item layouts: 6 equal widths grouped vs
    // slightly perturbed widths that cannot group.
    const auto equal = make_instance(std::vector<Interval>(6, Interval{1, 3}), make_selection(6, 6));
    Solution all6{1, 1, 1, 1, 1, 1};
    const auto grouped = build_distribution(equal, all6);

    std::vector<Interval> jittered;
    for (int i = 0; i < 6; ++i) {
        jittered.push_back(Interval{1.0, 3.0 + 1e-13 * i});
    }
    const auto uneven = make_instance(std::move(jittered), make_selection(6, 6));
    const auto ungrouped = build_distribution(uneven, all6);

    for (int i = 0; i <= 32; ++i) {
        const double y = 6.0 + 12.0 * i / 32.0;
        CHECK(exact_cdf(grouped, y) == doctest::Approx(exact_cdf(ungrouped, y)).epsilon(1e-9));
    }
}
