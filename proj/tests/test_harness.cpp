#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "owa/errors.hpp"
#include "owa/evaluate.hpp"
#include "owa/experiment.hpp"
#include "owa/generators.hpp"
#include "owa/rng.hpp"
#include "test_util.hpp"

using namespace owa;

TEST_CASE("type I instances stay in the [1, 11] range") {
    const auto instance = gen_type1(500, 9);
    for (const auto& item : instance.items) {
        CHECK(item.lo >= 1.0);
        CHECK(item.hi <= 11.0);
        CHECK(item.lo <= item.hi);
        CHECK(item.lo == std::floor(item.lo));
        CHECK(item.hi == std::floor(item.hi));
    }
}

TEST_CASE("type I generation is deterministic in (n, seed)") {
    const auto a = gen_type1(64, 1234);
    const auto b = gen_type1(64, 1234);
    CHECK(a.items == b.items);
    const auto c = gen_type1(64, 1235);
    CHECK(a.items != c.items);
}

TEST_CASE("type I degenerate fraction is about 1/11") {
    const auto instance = gen_type1(10000, 2024);
    int degenerate = 0;
    for (const auto& item : instance.items) {
        degenerate += item.degenerate() ? 1 : 0;
    }
    CHECK(std::abs(degenerate / 10000.0 - 1.0 / 11.0) <= 0.01);
}

TEST_CASE("type II intervals have even widths inside [3, 28]") {
    const auto instance = gen_type2(500, 31);
    for (const auto& item : instance.items) {
        CHECK(item.lo >= 3.0);
        CHECK(item.hi <= 28.0);
        const double width = item.width();
        CHECK(width >= 2.0);
        CHECK(width <= 22.0);
        CHECK(std::fmod(width, 2.0) == 0.0);
        const double mid = item.midpoint();
        CHECK(mid >= 14.0);
        CHECK(mid <= 17.0);
    }
    const auto again = gen_type2(500, 31);
    CHECK(again.items == instance.items);
}

TEST_CASE("instance type names parse both ways") {
    CHECK(parse_instance_type("I") == InstanceType::TypeI);
    CHECK(parse_instance_type("2") == InstanceType::TypeII);
    CHECK(instance_type_name(InstanceType::TypeII) == "II");
    CHECK_THROWS_AS(parse_instance_type("III"), ParseError);
}

TEST_CASE("evaluate_final is exact on degenerate instances") {
    const auto instance =
        make_instance({Interval{2, 2}, Interval{7, 7}}, make_selection(2, 1));
    CHECK(evaluate_final(instance, make_power_weight(5.0), Solution{0, 1}, 100, 9) == 7.0);
}

TEST_CASE("evaluate_final approximates the worked example at high K") {
    const auto instance = test::example_instance(2);
    const double value =
        evaluate_final(instance, make_power_weight(3.0), Solution{1, 1, 0}, 1000000, 17);
    CHECK(value == doctest::Approx(7.4).epsilon(0.02 / 7.4));
}

TEST_CASE("evaluate_final tracks the exact engine within sampling noise") {
    const auto instance = gen_type1(10, 77, 5);
    const Solution x = solve_midpoint(instance).solution;
    const auto w = make_power_weight(5.0);
    const double exact = interval_owa_exact(instance, w, x, 1e-9);

    std::vector<double> estimates;
    for (std::uint64_t seed = 1; seed <= 11; ++seed) {
        estimates.push_back(evaluate_final(instance, w, x, 20000, seed));
    }
    double mean = 0.0;
    for (double e : estimates) {
        mean += e;
    }
    mean /= static_cast<double>(estimates.size());
    double var = 0.0;
    for (double e : estimates) {
        var += (e - mean) * (e - mean);
    }
    const double sd = std::sqrt(var / (estimates.size() - 1));
    for (double e : estimates) {
        CHECK(std::abs(e - exact) <= 4.0 * sd + 1e-6);
    }
}

TEST_CASE("experiment config parsing validates fields") {
    const auto config = parse_experiment_config(
        R"({"experiment":3,"n":8,"p":4,"instance_type":"II","instances":3,
            "alphas":[1,5],"K_values":[20],"K_eval":2000,"seed":99,"output":"t"})");
    CHECK(config.experiment == 3);
    CHECK(config.instance_type == InstanceType::TypeII);
    CHECK(config.K_eval == 2000);

    CHECK_THROWS_AS(parse_experiment_config(R"({"experiment":4})"), ValidationError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"experiment":1,"K_values":[]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"experiment":1,"n":4,"p":9})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"experiment":1,"typo":3})"), ParseError);
    CHECK_THROWS_AS(parse_experiment_config(R"({"experiment":1,"n":40,"p":20})"),
                    ValidationError); // C(40,20) over the enumeration cap with exact inner
    CHECK_THROWS_AS(parse_experiment_config("not json"), ParseError);
}

TEST_CASE("experiment rows are reproducible apart from wall time") {
    ExperimentConfig config;
    config.experiment = 1;
    config.n = 6;
    config.p = 3;
    config.instance_type = InstanceType::TypeI;
    config.instances = 2;
    config.alphas = {1.5, 5.0};
    config.K_values = {5, 10};
    config.K_eval = 500;
    config.seed = 4242;

    const auto first = run_experiment(config);
    const auto second = run_experiment(config);
    REQUIRE(first.size() == second.size());
    REQUIRE(first.size() == 2u * 2u * 2u * 2u); // alphas x K x instances x methods
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].method == second[i].method);
        CHECK(first[i].objective == second[i].objective);
        CHECK(first[i].seed == second[i].seed);
        CHECK(first[i].K == second[i].K);
        CHECK(first[i].instance_id == second[i].instance_id);
    }
}

TEST_CASE("experiment seed streams are disjoint by construction") {
    ExperimentConfig config;
    config.experiment = 2;
    config.n = 6;
    config.p = 3;
    config.instances = 2;
    config.alphas = {5.0};
    config.K_values = {10};
    config.K_eval = 200;
    config.seed = 7;

    const auto rows = run_experiment(config);
    // Solver sampling seeds never collide with generation or evaluation seeds.
    std::set<std::uint64_t> solver_seeds;
    for (const auto& row : rows) {
        solver_seeds.insert(row.seed);
    }
    for (int id = 1; id <= config.instances; ++id) {
        const auto gen = derive_seed(config.seed, seed_stream::kGenerate,
                                     static_cast<std::uint64_t>(id));
        const auto eval = derive_seed(config.seed, seed_stream::kEvaluate,
                                      static_cast<std::uint64_t>(id));
        CHECK_FALSE(solver_seeds.count(gen));
        CHECK_FALSE(solver_seeds.count(eval));
    }
}

TEST_CASE("emitted objectives come from the common final evaluation") {
    ExperimentConfig config;
    config.experiment = 2;
    config.n = 6;
    config.p = 3;
    config.instance_type = InstanceType::TypeII;
    config.instances = 2;
    config.alphas = {5.0};
    config.K_values = {10};
    config.K_eval = 300;
    config.seed = 31;

    const auto rows = run_experiment(config);
    for (const auto& row : rows) {
        const auto gen_seed = derive_seed(config.seed, seed_stream::kGenerate,
                                          static_cast<std::uint64_t>(row.instance_id));
        const auto eval_seed = derive_seed(config.seed, seed_stream::kEvaluate,
                                           static_cast<std::uint64_t>(row.instance_id));
        const auto instance = generate_instance(config.instance_type, config.n, gen_seed, config.p);

        // Reconstruct the solver's solution and re-evaluate it on the shared
        // evaluation stream; the CSV objective must be that number, not the
        // solver's internal one.
        SolveReport report;
        const auto w = make_power_weight(row.alpha);
        if (row.method == "greedy") {
            report = solve_greedy_matroid(instance, w, row.K, row.seed);
        } else if (row.method == "yager") {
            report = solve_yager(instance, cumulative_from_density(w));
        } else {
            REQUIRE(row.method == "midpoint");
            report = solve_midpoint(instance);
        }
        const double expected =
            evaluate_final(instance, w, report.solution, config.K_eval, eval_seed);
        CHECK(row.objective == expected);
        if (row.method == "yager" || row.method == "midpoint") {
            CHECK(row.objective != report.reported_objective);
        }
    }
}

TEST_CASE("experiment csv rows carry the full schema") {
    ExperimentRow row;
    row.experiment = 3;
    row.instance_type = InstanceType::TypeII;
    row.n = 12;
    row.p = 6;
    row.alpha = 1.5;
    row.K = 100;
    row.instance_id = 4;
    row.method = "greedy";
    row.objective = 87.25;
    row.wall_time_s = 0.5;
    row.seed = 11;
    CHECK(experiment_csv_header() ==
          "experiment,instance_type,n,p,alpha,K,instance_id,method,objective,wall_time_s,seed");
    CHECK(experiment_csv_row(row) == "3,II,12,6,1.5,100,4,greedy,87.25,0.5,11");
}

TEST_CASE("aggregation averages per (alpha, K, method)") {
    ExperimentConfig config;
    config.experiment = 1;
    config.n = 6;
    config.p = 3;
    config.instances = 4;
    config.alphas = {5.0};
    config.K_values = {10};
    config.K_eval = 200;
    config.seed = 13;

    const auto rows = run_experiment(config);
    const auto aggregates = aggregate_experiment(rows);
    REQUIRE(aggregates.size() == 2u); // sampling_exact and greedy
    for (const auto& g : aggregates) {
        CHECK(g.runs == 4);
        double mean = 0.0;
        int count = 0;
        for (const auto& row : rows) {
            if (row.method == g.method) {
                mean += row.objective;
                ++count;
            }
        }
        mean /= count;
        CHECK(g.mean_objective == doctest::Approx(mean).epsilon(1e-12));
        CHECK(g.stderr_objective >= 0.0);
    }
}

TEST_CASE("sampling tracks or beats greedy across the K sweep at alpha 5") {
    ExperimentConfig config;
    config.experiment = 1;
    config.n = 12;
    config.p = 6;
    config.instance_type = InstanceType::TypeI;
    config.instances = 20;
    config.alphas = {5.0};
    config.K_values = {10, 25, 50};
    config.K_eval = 20000;
    config.seed = 90210;

    const auto aggregates = aggregate_experiment(run_experiment(config));
    for (int K : config.K_values) {
        double sampling_mean = 0.0;
        double greedy_mean = 0.0;
        double noise = 0.0;
        for (const auto& g : aggregates) {
            if (g.K != K) {
                continue;
            }
            (g.method == "sampling_exact" ? sampling_mean : greedy_mean) = g.mean_objective;
            noise = std::max(noise, g.stderr_objective);
        }
        CHECK(sampling_mean <= greedy_mean + 2.0 * noise);
    }
}

TEST_CASE("worker pools do not change experiment output") {
    ExperimentConfig config;
    config.experiment = 3;
    config.n = 6;
    config.p = 3;
    config.instances = 3;
    config.alphas = {1.0, 5.0};
    config.K_values = {8};
    config.K_eval = 400;
    config.seed = 99;

    setenv("INTERVAL_OWA_THREADS", "1", 1);
    const auto serial = run_experiment(config);
    setenv("INTERVAL_OWA_THREADS", "4", 1);
    const auto parallel = run_experiment(config);
    unsetenv("INTERVAL_OWA_THREADS");

    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].method == parallel[i].method);
        CHECK(serial[i].objective == parallel[i].objective);
        CHECK(serial[i].instance_id == parallel[i].instance_id);
        CHECK(serial[i].alpha == parallel[i].alpha);
    }
}
