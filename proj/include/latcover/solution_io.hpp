#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latcover/geometry.hpp"

#include "json.hpp"

namespace latcover {

/// Parse failure with 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                             message),
          line(line),
          column(column) {}
};

/// One solution-line record: `<n> <t> (x,y) (x,y) ...` where t may carry a
/// `<=` prefix (accepted and stripped).
struct SolutionRecord {
    int n = 0;
    int claimed_t = 0;
    std::vector<Point> vertices;  // sorted, duplicate-free, bounds-checked
    std::string source;

    Solution solution() const { return Solution{n, vertices}; }
};

SolutionRecord parse_solution_line(std::string_view text, int line_number = 1,
                                   std::string_view source = "");

/// Parses a whole stream; `#`-prefixed and blank lines are ignored.
std::vector<SolutionRecord> parse_solution_file(std::istream& in, std::string_view source_name);
std::vector<SolutionRecord> load_solution_file(const std::string& path);

std::string format_solution_line(const SolutionRecord& record);

void to_json(nlohmann::json& j, const SolutionRecord& record);
void from_json(const nlohmann::json& j, SolutionRecord& record);

struct RecordVerification {
    int index = 0;  // position in the input
    int n = 0;
    int claimed_t = 0;
    int actual_size = 0;
    bool cover = false;
    int line_count = 0;
    int orbit = 0;
    bool pass = false;  // cover && actual_size <= claimed_t
    std::string source;
};

struct VerificationReport {
    std::vector<RecordVerification> records;  // input order
    int passed = 0;
    int failed = 0;
};

/// Verifies each record independently (failures are report entries, never
/// exceptions); records are checked concurrently when jobs > 1, report order
/// stays the input order.
VerificationReport verify_corpus(const std::vector<SolutionRecord>& records, int jobs = 1);

}  // namespace latcover
