#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "latcover/coverage.hpp"
#include "latcover/geometry.hpp"
#include "latcover/rng.hpp"
#include "oracles.hpp"

using namespace latcover;

namespace {

Solution make(int n, std::vector<Point> pts) { return Solution::checked(n, std::move(pts)); }

Solution random_solution(Xoshiro256StarStar& rng, int n, int t) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < t) {
        Point p{static_cast<int>(rng.below(n + 1)), static_cast<int>(rng.below(n + 1))};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return make(n, std::move(pts));
}

}  // namespace

TEST_CASE("normalize_line canonical keys") {
    CHECK(normalize_line({0, 0}, {2, 2}) == LineKey{1, -1, 0});
    CHECK(normalize_line({0, 2}, {2, 0}) == LineKey{1, 1, 2});
    CHECK(normalize_line({0, 1}, {2, 0}) == LineKey{1, 2, 2});
    CHECK_THROWS_AS(normalize_line({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("normalize_line is order independent and contains both endpoints") {
    Xoshiro256StarStar rng(7);
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(12));
        Point p{static_cast<int>(rng.below(n + 1)), static_cast<int>(rng.below(n + 1))};
        Point q{static_cast<int>(rng.below(n + 1)), static_cast<int>(rng.below(n + 1))};
        if (p == q) continue;
        const LineKey key = normalize_line(p, q);
        CHECK(key == normalize_line(q, p));
        CHECK((key.a > 0 || (key.a == 0 && key.b > 0)));
        CHECK(std::gcd(std::abs(key.a), std::abs(key.b)) == 1);
        CHECK(static_cast<long long>(key.a) * p.x + static_cast<long long>(key.b) * p.y == key.c);
        const auto pts = points_on_line(key, n);
        CHECK(std::binary_search(pts.begin(), pts.end(), p));
        CHECK(std::binary_search(pts.begin(), pts.end(), q));
    }
}

TEST_CASE("points_on_line enumerates exactly the in-box solutions") {
    CHECK(points_on_line({1, -1, 0}, 3) ==
          std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(points_on_line({1, 2, 2}, 2) == std::vector<Point>{{0, 1}, {2, 0}});
    CHECK(points_on_line({0, 1, 5}, 3).empty());
}

TEST_CASE("points_on_line agrees with a full box scan") {
    Xoshiro256StarStar rng(11);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(20));
        Point p{static_cast<int>(rng.below(n + 1)), static_cast<int>(rng.below(n + 1))};
        Point q{static_cast<int>(rng.below(n + 1)), static_cast<int>(rng.below(n + 1))};
        if (p == q) continue;
        const LineKey key = normalize_line(p, q);
        std::vector<Point> scanned;
        for (int x = 0; x <= n; ++x)
            for (int y = 0; y <= n; ++y)
                if (static_cast<long long>(key.a) * x + static_cast<long long>(key.b) * y == key.c)
                    scanned.push_back({x, y});
        CHECK(points_on_line(key, n) == scanned);
    }
}

TEST_CASE("coverage of the 4 corners") {
    const auto full2 = coverage(make(2, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
    CHECK(full2.count() == 9);
    CHECK(full2.all());

    const auto full3 = coverage(make(3, {{0, 0}, {0, 3}, {3, 0}, {3, 3}}));
    CHECK(full3.count() == 16);
    CHECK(full3.all());

    const auto diag = coverage(make(2, {{0, 0}, {1, 1}}));
    CHECK(diag.count() == 3);
    CHECK(diag.test({0, 0}));
    CHECK(diag.test({1, 1}));
    CHECK(diag.test({2, 2}));
}

TEST_CASE("coverage rejects fewer than two vertices") {
    CHECK_THROWS_AS(coverage(make(2, {{0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(is_cover(make(2, {{1, 1}})), std::invalid_argument);
}

TEST_CASE("is_cover examples") {
    CHECK(is_cover(make(3, {{0, 0}, {0, 3}, {3, 0}, {3, 3}})));
    CHECK_FALSE(is_cover(make(2, {{0, 0}, {1, 1}, {2, 2}})));
}

TEST_CASE("spanned_lines collinearity dedup") {
    CHECK(spanned_lines(make(2, {{0, 0}, {1, 1}, {2, 2}})).size() == 1);
    CHECK(spanned_lines(make(2, {{0, 0}, {0, 2}, {2, 0}})).size() == 3);
    CHECK(spanned_lines(make(2, {{0, 0}, {0, 2}, {2, 0}, {2, 2}})).size() == 6);
}

TEST_CASE("spanned line count bound, equality iff no collinear triple") {
    Xoshiro256StarStar rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const int t = 2 + static_cast<int>(rng.below(6));
        if (t > (n + 1) * (n + 1)) continue;
        const Solution s = random_solution(rng, n, t);
        const auto lines = spanned_lines(s);
        const std::size_t max_lines = s.vertices.size() * (s.vertices.size() - 1) / 2;
        CHECK(lines.size() <= max_lines);
        bool triple = false;
        for (std::size_t i = 0; i < s.vertices.size() && !triple; ++i)
            for (std::size_t j = i + 1; j < s.vertices.size() && !triple; ++j)
                for (std::size_t k = j + 1; k < s.vertices.size() && !triple; ++k)
                    triple = oracles::collinear(s.vertices[i], s.vertices[j], s.vertices[k]);
        CHECK((lines.size() == max_lines) == !triple);
    }
}

TEST_CASE("coverage is monotone under vertex insertion") {
    Xoshiro256StarStar rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const Solution small = random_solution(rng, n, 3);
        Solution larger = random_solution(rng, n, 2);
        std::vector<Point> merged = small.vertices;
        for (Point p : larger.vertices)
            if (std::find(merged.begin(), merged.end(), p) == merged.end()) merged.push_back(p);
        const Solution super = Solution::checked(n, merged);
        CHECK(coverage(small).is_subset_of(coverage(super)));
    }
}

TEST_CASE("coverage equals the per-point collinearity oracle") {
    Xoshiro256StarStar rng(19);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const int max_t = std::min(8, (n + 1) * (n + 1));
        const int t = 2 + static_cast<int>(rng.below(max_t - 1));
        const Solution s = random_solution(rng, n, t);
        CHECK(coverage(s) == oracles::coverage_by_collinearity(s));
    }
}

TEST_CASE("Solution::checked validates") {
    CHECK_THROWS_AS(make(2, {{0, 0}, {0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK(make(2, {{2, 2}, {0, 0}}).vertices.front() == Point{0, 0});
}
