#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "latcover/coverage.hpp"
#include "latcover/rng.hpp"
#include "latcover/solution_io.hpp"
#include "latcover/svg.hpp"

using namespace latcover;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("parse_solution_line") {
    const auto record = parse_solution_line(
        "12 11 (0,0) (0,3) (2,12) (3,6) (3,9) (6,3) (6,12) (9,6) (9,9) (12,0) (12,3)");
    CHECK(record.n == 12);
    CHECK(record.claimed_t == 11);
    CHECK(record.vertices.size() == 11);
    CHECK(record.vertices.front() == Point{0, 0});

    const auto corners = parse_solution_line("2 4 (0,0) (0,2) (2,0) (2,2)");
    CHECK(corners.vertices.size() == 4);

    const auto bounded = parse_solution_line("12 <=11 (0,0) (1,2)");
    CHECK(bounded.claimed_t == 11);
    const auto spaced = parse_solution_line("12 <= 11 (0,0) (1,2)");
    CHECK(spaced.claimed_t == 11);
}

TEST_CASE("parse errors carry line and column") {
    CHECK_THROWS_AS(parse_solution_line("2 4 (0,0) (0,3)"), ParseError);
    try {
        parse_solution_line("2 4 (0,0) (0,3)", 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 7);
        CHECK(e.column == 11);  // the offending pair starts at column 11
    }
    CHECK_THROWS_AS(parse_solution_line("2 4 (0,0) (0,0)"), ParseError);   // duplicate
    CHECK_THROWS_AS(parse_solution_line("2 4 (0 0)"), ParseError);         // malformed
    CHECK_THROWS_AS(parse_solution_line("2 4 (0,)"), ParseError);          // malformed
    CHECK_THROWS_AS(parse_solution_line("x 4 (0,0)"), ParseError);         // no n
    CHECK_THROWS_AS(parse_solution_line("2 4"), ParseError);               // no vertices
}

TEST_CASE("round trip: parse(format(record)) == record") {
    Xoshiro256StarStar rng(123);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(30));
        const int max_t = std::min(12, (n + 1) * (n + 1));
        const int t = 1 + static_cast<int>(rng.below(max_t));
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < t) {
            Point p{static_cast<int>(rng.below(n + 1)), static_cast<int>(rng.below(n + 1))};
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        SolutionRecord record;
        record.n = n;
        record.claimed_t = t;
        record.vertices = Solution::checked(n, pts).vertices;
        const SolutionRecord back = parse_solution_line(format_solution_line(record));
        CHECK(back.n == record.n);
        CHECK(back.claimed_t == record.claimed_t);
        CHECK(back.vertices == record.vertices);
    }
}

TEST_CASE("json round trip") {
    SolutionRecord record;
    record.n = 3;
    record.claimed_t = 4;
    record.vertices = {{0, 0}, {0, 3}, {3, 0}, {3, 3}};
    record.source = "unit";
    const nlohmann::json j = record;
    CHECK(j.at("t_claimed") == 4);
    const auto back = j.get<SolutionRecord>();
    CHECK(back.vertices == record.vertices);
    CHECK(back.source == "unit");
}

TEST_CASE("parse_solution_file skips comments and blanks") {
    std::istringstream in("# header\n\n2 4 (0,0) (0,2) (2,0) (2,2)\n  # indented comment\n"
                          "3 4 (0,0) (0,3) (3,0) (3,3)\n");
    const auto records = parse_solution_file(in, "mem");
    REQUIRE(records.size() == 2);
    CHECK(records[0].source == "mem:3");
    CHECK(records[1].source == "mem:5");
}

TEST_CASE("shipped corpus verifies 34/34") {
    const auto records = load_solution_file(LATCOVER_DATA_DIR "/table1.txt");
    REQUIRE(records.size() == 34);
    const VerificationReport report = verify_corpus(records, 2);
    CHECK(report.passed == 34);
    CHECK(report.failed == 0);
    for (const auto& v : report.records) {
        CHECK(v.cover);
        CHECK(v.actual_size == v.claimed_t);
    }
    // Spot checks against the published rows.
    CHECK(report.records.front().n == 12);
    CHECK(report.records.front().claimed_t == 11);
    CHECK(report.records.back().n == 110);
    CHECK(report.records.back().actual_size == 100);
}

TEST_CASE("single-coordinate mutations are detected") {
    const auto records = load_solution_file(LATCOVER_DATA_DIR "/table1.txt");
    // Deleting a vertex from the n=12 row must fail at least the size claim.
    SolutionRecord damaged = records.front();
    damaged.vertices.pop_back();
    const auto report = verify_corpus({damaged});
    CHECK(report.failed == 1);

    Xoshiro256StarStar rng(2024);
    int checked = 0, still_valid = 0;
    while (checked < 1000) {
        const auto& base = records[rng.below(records.size())];
        SolutionRecord mutated = base;
        auto& p = mutated.vertices[rng.below(mutated.vertices.size())];
        const int delta = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(base.n)));
        if (rng.below(2))
            p.x = (p.x + delta) % (base.n + 1);
        else
            p.y = (p.y + delta) % (base.n + 1);
        std::sort(mutated.vertices.begin(), mutated.vertices.end());
        bool duplicate = false;
        for (std::size_t i = 1; i < mutated.vertices.size(); ++i)
            if (mutated.vertices[i] == mutated.vertices[i - 1]) duplicate = true;
        ++checked;
        if (duplicate) continue;  // the parser would reject it outright
        const auto r = verify_corpus({mutated});
        if (r.failed == 0) ++still_valid;  // mutation happened to keep a cover
    }
    // Mutations that stay valid covers are counted, not silently passed.
    MESSAGE("mutations still valid covers: ", still_valid, " of ", checked);
    CHECK(still_valid < checked / 10);
}

TEST_CASE("svg rendering") {
    const Solution corners = Solution::checked(3, {{0, 0}, {0, 3}, {3, 0}, {3, 3}});
    const std::string svg = render_svg(corners);
    CHECK(count_occurrences(svg, "<rect") == 16 + 4);
    CHECK(count_occurrences(svg, "<line") == 6);
    CHECK(count_occurrences(svg, "#b0b0b0") == 1);
    CHECK(count_occurrences(svg, "#cc0000") == 1);
    CHECK(render_svg(corners) == svg);  // byte-identical

    RenderOptions reduced;
    reduced.show_all_lines = false;
    const std::string fewer = render_svg(corners, reduced);
    CHECK(count_occurrences(fewer, "<line") <= 6);
    CHECK(count_occurrences(fewer, "<rect") == 20);

    // A reduced rendering still covers: re-parse the chosen line count only.
    const Solution design = Solution::checked(4, {{0, 0}, {0, 4}, {1, 1}, {1, 3}, {3, 1},
                                                  {3, 3}, {4, 0}, {4, 4}});
    const std::string reduced_svg = render_svg(design, reduced);
    CHECK(count_occurrences(reduced_svg, "<line") <
          count_occurrences(render_svg(design), "<line"));
}
