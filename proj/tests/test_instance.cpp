#include <doctest.h>

#include <random>

#include "owa/errors.hpp"
#include "owa/instance.hpp"
#include "test_util.hpp"

using namespace owa;

TEST_CASE("parse_instance reads the worked example") {
    const auto instance = parse_instance(
        R"({"n":3,"intervals":[[1,5],[1,5],[2,10]],"feasibility":{"type":"selection","p":1}})");
    CHECK(instance.n() == 3);
    CHECK(instance.items[0] == Interval{1, 5});
    CHECK(instance.items[2] == Interval{2, 10});
    CHECK(std::get<Selection>(instance.feasibility).p == 1);
}

TEST_CASE("parse_instance accepts degenerate intervals") {
    const auto instance =
        parse_instance(R"({"n":1,"intervals":[[4,4]],"feasibility":{"type":"selection","p":1}})");
    CHECK(instance.items[0].degenerate());
}

TEST_CASE("parse_instance rejects lo > hi, naming the 1-based item") {
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"n":2,"intervals":[[1,2],[5,3]],"feasibility":{"type":"selection","p":1}})"),
        doctest::Contains("item 2"), ValidationError);
}

TEST_CASE("parse_instance rejects p > n") {
    CHECK_THROWS_AS(
        parse_instance(R"({"n":2,"intervals":[[1,2],[1,2]],"feasibility":{"type":"selection","p":3}})"),
        ValidationError);
}

TEST_CASE("parse_instance reports malformed syntax with line context") {
    CHECK_THROWS_WITH_AS(parse_instance("{\n  \"n\": 2,\n  oops\n}"), doctest::Contains("line 3"),
                         ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":1,"intervals":[[1,2]]})"), ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"n":1,"intervals":[[1,2]],"feasibility":{"type":"mystery"}})"),
        ParseError);
}

TEST_CASE("parse/serialize round-trips instances bit-exactly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto instance = test::random_selection_instance(rng);
        const std::string text = serialize_instance(instance);
        const auto back = parse_instance(text);
        CHECK(back.items == instance.items);
        CHECK(serialize_instance(back) == text);
    }
    // Uniform-matroid feasibility round-trips too.
    const auto matroid = make_instance({Interval{1, 2}, Interval{2, 3}}, make_uniform_matroid(2, 1));
    const auto back = parse_instance(serialize_instance(matroid));
    CHECK(std::get<MatroidOracle>(back.feasibility).uniform_rank == 1);
}

TEST_CASE("solution serialization uses 1-based ascending indices") {
    Solution x{1, 0, 1};
    CHECK(serialize_solution(x) == R"({"selected":[1,3]})");
    CHECK(parse_solution(R"({"selected":[1,3]})", 3) == x);
    CHECK_THROWS_AS(parse_solution(R"({"selected":[4]})", 3), ValidationError);
}

TEST_CASE("is_feasible on selections counts items") {
    const auto instance = test::example_instance(2);
    CHECK(is_feasible(instance, Solution{1, 1, 0}));
    CHECK_FALSE(is_feasible(instance, Solution{1, 0, 0}));
    CHECK_THROWS_AS(is_feasible(instance, Solution{1, 0}), DimensionError);
}

TEST_CASE("is_feasible on matroid oracles requires a basis") {
    const auto instance =
        make_instance({Interval{1, 2}, Interval{1, 2}, Interval{1, 2}}, make_uniform_matroid(3, 2));
    CHECK(is_feasible(instance, Solution{0, 1, 1}));
    CHECK_FALSE(is_feasible(instance, Solution{0, 0, 1})); // independent but not maximal
    CHECK_FALSE(is_feasible(instance, Solution{1, 1, 1}));
}

TEST_CASE("matroid oracles accept the empty set and are downward closed") {
    const auto fs = make_uniform_matroid(6, 3);
    const auto& oracle = std::get<MatroidOracle>(fs);
    CHECK(oracle.is_independent(std::vector<int>{}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> chain;
        std::vector<int> pool{0, 1, 2, 3, 4, 5};
        std::shuffle(pool.begin(), pool.end(), rng);
        bool independent_so_far = true;
        for (int e : pool) {
            chain.insert(std::upper_bound(chain.begin(), chain.end(), e), e);
            const bool independent = oracle.is_independent(chain);
            if (!independent_so_far) {
                CHECK_FALSE(independent); // once dependent, supersets stay dependent
            }
            independent_so_far = independent;
        }
    }
}

TEST_CASE("deterministic_cost sums selected items") {
    const std::vector<double> mids{3, 3, 6};
    CHECK(deterministic_cost(mids, Solution{1, 1, 0}) == 6.0);
    CHECK(deterministic_cost(mids, Solution{0, 0, 0}) == 0.0);
    const std::vector<double> two{2, 10};
    CHECK(deterministic_cost(two, Solution{1, 1}) == 12.0);
    CHECK_THROWS_AS(deterministic_cost(two, Solution{1, 1, 1}), DimensionError);
}

TEST_CASE("deterministic_cost is linear on integer costs") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> cost(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        std::vector<double> a(static_cast<std::size_t>(n));
        std::vector<double> b(static_cast<std::size_t>(n));
        std::vector<double> ab(static_cast<std::size_t>(n));
        Solution x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = cost(rng);
            b[static_cast<std::size_t>(i)] = cost(rng);
            ab[static_cast<std::size_t>(i)] =
                a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
            x.set(static_cast<std::size_t>(i), coin(rng) == 1);
        }
        CHECK(deterministic_cost(ab, x) == deterministic_cost(a, x) + deterministic_cost(b, x));
    }
}

TEST_CASE("feasible selections always have exactly p ones") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto instance = test::random_selection_instance(rng);
        const auto x = test::random_feasible(rng, instance);
        REQUIRE(is_feasible(instance, x));
        CHECK(x.popcount() == std::get<Selection>(instance.feasibility).p);
    }
}
