#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "latcover/bounds.hpp"
#include "latcover/coverage.hpp"
#include "latcover/exact.hpp"
#include "latcover/heuristic.hpp"

using namespace latcover;

TEST_CASE("config validation") {
    SearchConfig config;
    config.target_t = 1;
    CHECK_THROWS_AS(random_search(2, config), std::invalid_argument);
    config.target_t = 99;
    CHECK_THROWS_AS(random_search(2, config), std::invalid_argument);
}

TEST_CASE("symmetric-pairs candidates are mirror-invariant sets") {
    auto rng = Xoshiro256StarStar::stream(5, 0);
    int produced = 0;
    for (int rep = 0; rep < 400; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const int t = 2 * (2 + static_cast<int>(rng.below(3)));  // even
        const auto candidate = sampling::sample(rng, n, Strategy::symmetric_pairs, t);
        if (!candidate) continue;
        ++produced;
        REQUIRE(candidate->axis.has_value());
        CHECK(static_cast<int>(candidate->points.size()) == t);
        std::vector<Point> mirrored;
        for (Point p : candidate->points) mirrored.push_back(apply(*candidate->axis, p, n));
        std::sort(mirrored.begin(), mirrored.end());
        CHECK(mirrored == candidate->points);
    }
    CHECK(produced > 300);
}

TEST_CASE("odd target under symmetric-pairs places one vertex on the axis") {
    auto rng = Xoshiro256StarStar::stream(6, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(8));
        const int t = 5;
        const auto candidate = sampling::sample(rng, n, Strategy::symmetric_pairs, t);
        if (!candidate) continue;
        REQUIRE(candidate->axis.has_value());
        CHECK(static_cast<int>(candidate->points.size()) == t);
        int fixed = 0;
        for (Point p : candidate->points)
            if (apply(*candidate->axis, p, n) == p) ++fixed;
        CHECK(fixed == 1);
    }
}

TEST_CASE("uniform candidates are t distinct vertices") {
    auto rng = Xoshiro256StarStar::stream(7, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const auto candidate = sampling::sample(rng, 4, Strategy::uniform_random, 6);
        REQUIRE(candidate.has_value());
        CHECK_FALSE(candidate->axis.has_value());
        std::set<Point> distinct(candidate->points.begin(), candidate->points.end());
        CHECK(distinct.size() == 6);
    }
}

TEST_CASE("random_search finds covers and reproduces exactly") {
    SearchConfig config;
    config.strategy = Strategy::uniform_random;
    config.target_t = 6;
    config.budget = 20'000;
    config.restarts = 4;
    config.seed = 99;
    const auto a = random_search(3, config);
    REQUIRE(a.has_value());
    CHECK(is_cover(*a));
    CHECK(a->order() == 6);

    const auto b = random_search(3, config);
    REQUIRE(b.has_value());
    CHECK(a->vertices == b->vertices);

    SearchConfig parallel = config;
    parallel.jobs = 4;
    const auto c = random_search(3, parallel);
    REQUIRE(c.has_value());
    CHECK(a->vertices == c->vertices);
}

TEST_CASE("random_search failure is a value") {
    SearchConfig config;
    config.strategy = Strategy::uniform_random;
    config.target_t = 2;  // no 2-vertex cover exists for n >= 1
    config.budget = 200;
    config.restarts = 2;
    CHECK_FALSE(random_search(3, config).has_value());
}

TEST_CASE("improve never grows and deletion-only is idempotent") {
    const Solution design = symmetric_design(4);  // 8 vertices
    const Solution once = improve(design, 0, 1);
    CHECK(once.order() <= design.order());
    CHECK(is_cover(once));
    const Solution twice = improve(once, 0, 1);
    CHECK(twice.order() == once.order());

    const Solution swapped = improve(design, 2'000, 1);
    CHECK(swapped.order() <= once.order());
    CHECK(is_cover(swapped));
}

TEST_CASE("improve cannot shrink a proven minimum") {
    const Solution rep = solve_exact(4, 6).front().representative;
    const Solution improved = improve(rep, 3'000, 7);
    CHECK(improved.order() == 6);
    CHECK(is_cover(improved));
}

TEST_CASE("improve rejects non-covers") {
    CHECK_THROWS_AS(improve(Solution::checked(3, {{0, 0}, {1, 1}, {2, 2}}), 10, 1),
                    std::invalid_argument);
}

TEST_CASE("best_upper_bound_search stays within the constructive ceiling") {
    SearchConfig config;
    config.budget = 5'000;
    config.restarts = 2;
    config.improve_rounds = 2'000;
    config.seed = 3;
    const UpperBound bound = best_upper_bound_search(4, config);
    CHECK(bound.t <= 8);  // never worse than 2n
    CHECK(bound.t >= 6);  // cannot beat the proven minimum
    CHECK(is_cover(bound.witness));
    CHECK(bound.witness.order() == bound.t);

    // Deterministic given the seed, for any worker count.
    SearchConfig parallel = config;
    parallel.jobs = 4;
    const UpperBound again = best_upper_bound_search(4, parallel);
    CHECK(again.witness.vertices == bound.witness.vertices);
}
