#include "latcover/solution_io.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <thread>

#include "latcover/coverage.hpp"
#include "latcover/symmetry.hpp"

namespace latcover {

namespace {

class LineScanner {
public:
    LineScanner(std::string_view text, int line) : text_(text), line_(line) {}

    int column() const { return static_cast<int>(pos_) + 1; }
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool consume_literal(std::string_view lit) {
        if (text_.substr(pos_, lit.size()) == lit) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& message, int column = -1) const {
        throw ParseError(message, line_, column < 0 ? this->column() : column);
    }
    int integer(const char* what) {
        skip_ws();
        const int start = column();
        bool negative = consume('-');
        if (pos_ >= text_.size() || !isdigit(text_[pos_]))
            fail(std::string("expected ") + what, start);
        long long value = 0;
        while (pos_ < text_.size() && isdigit(text_[pos_])) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail(std::string(what) + " out of range", start);
            ++pos_;
        }
        return static_cast<int>(negative ? -value : value);
    }

private:
    static bool isdigit(char c) { return c >= '0' && c <= '9'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
};

}  // namespace

SolutionRecord parse_solution_line(std::string_view text, int line_number,
                                   std::string_view source) {
    LineScanner sc(text, line_number);
    SolutionRecord record;
    record.source = source;

    record.n = sc.integer("lattice parameter n");
    if (record.n < 1) sc.fail("lattice parameter must be >= 1");
    sc.skip_ws();
    sc.consume_literal("<=");  // bound prefix, stripped
    record.claimed_t = sc.integer("claimed order t");
    if (record.claimed_t < 1) sc.fail("claimed order must be >= 1");

    std::vector<std::pair<Point, int>> seen;  // vertex with its column
    while (!sc.at_end()) {
        const int start = sc.column();
        if (!sc.consume('(')) sc.fail("expected '(' starting a vertex pair");
        const int x = sc.integer("x coordinate");
        sc.skip_ws();
        if (!sc.consume(',')) sc.fail("expected ',' inside a vertex pair");
        const int y = sc.integer("y coordinate");
        sc.skip_ws();
        if (!sc.consume(')')) sc.fail("expected ')' closing a vertex pair");
        const Point p{x, y};
        if (x < 0 || x > record.n || y < 0 || y > record.n)
            sc.fail("coordinate outside [0," + std::to_string(record.n) + "]^2", start);
        for (const auto& [q, col] : seen)
            if (q == p)
                sc.fail("duplicate vertex (" + std::to_string(x) + "," + std::to_string(y) + ")",
                        start);
        seen.push_back({p, start});
    }
    if (seen.empty()) sc.fail("record has no vertices");
    record.vertices.reserve(seen.size());
    for (const auto& [p, col] : seen) record.vertices.push_back(p);
    std::sort(record.vertices.begin(), record.vertices.end());
    return record;
}

std::vector<SolutionRecord> parse_solution_file(std::istream& in, std::string_view source_name) {
    std::vector<SolutionRecord> records;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        const auto first = view.find_first_not_of(" \t");
        if (first == std::string_view::npos || view[first] == '#') continue;
        records.push_back(parse_solution_line(
            view, line_number, std::string(source_name) + ":" + std::to_string(line_number)));
    }
    return records;
}

std::vector<SolutionRecord> load_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_solution_file(in, path);
}

std::string format_solution_line(const SolutionRecord& record) {
    std::string out = std::to_string(record.n) + " " + std::to_string(record.claimed_t);
    for (Point p : record.vertices)
        out += " (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
    return out;
}

void to_json(nlohmann::json& j, const SolutionRecord& record) {
    nlohmann::json vertices = nlohmann::json::array();
    for (Point p : record.vertices) vertices.push_back({p.x, p.y});
    j = {{"n", record.n},
         {"t_claimed", record.claimed_t},
         {"vertices", std::move(vertices)},
         {"source", record.source}};
}

void from_json(const nlohmann::json& j, SolutionRecord& record) {
    record.n = j.at("n").get<int>();
    record.claimed_t = j.at("t_claimed").get<int>();
    record.source = j.value("source", "");
    std::vector<Point> vertices;
    for (const auto& v : j.at("vertices"))
        vertices.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
    record.vertices = Solution::checked(record.n, std::move(vertices)).vertices;
}

VerificationReport verify_corpus(const std::vector<SolutionRecord>& records, int jobs) {
    VerificationReport report;
    report.records.resize(records.size());
    const auto verify_one = [&](std::size_t i) {
        const SolutionRecord& record = records[i];
        RecordVerification v;
        v.index = static_cast<int>(i);
        v.n = record.n;
        v.claimed_t = record.claimed_t;
        v.actual_size = static_cast<int>(record.vertices.size());
        v.source = record.source;
        const Solution s = record.solution();
        if (v.actual_size >= 2) {
            v.cover = is_cover(s);
            v.line_count = static_cast<int>(spanned_lines(s).size());
        }
        v.orbit = orbit_size(s);
        v.pass = v.cover && v.actual_size <= v.claimed_t;
        report.records[i] = std::move(v);
    };

    const int workers = std::clamp(jobs, 1, static_cast<int>(records.size()));
    if (workers <= 1 || records.size() <= 1) {
        for (std::size_t i = 0; i < records.size(); ++i) verify_one(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto drain = [&] {
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= records.size()) break;
                verify_one(i);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < workers; ++j) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }

    for (const RecordVerification& v : report.records) (v.pass ? report.passed : report.failed)++;
    return report;
}

}  // namespace latcover
