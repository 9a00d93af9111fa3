// latcover: minimum-sublattice line covers of square lattices.
//
// Subcommands: solve-exact, solve-heuristic, bounds, verify, render,
// classify. Exit codes: 0 success, 1 usage/parse error, 2 verification
// failure, 3 search exhausted without a witness.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "latcover/bounds.hpp"
#include "latcover/coverage.hpp"
#include "latcover/exact.hpp"
#include "latcover/heuristic.hpp"
#include "latcover/kernels.hpp"
#include "latcover/solution_io.hpp"
#include "latcover/svg.hpp"
#include "latcover/symmetry.hpp"

namespace {

using namespace latcover;

int default_jobs() {
    if (const char* env = std::getenv("LATTICE_COVER_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

SolutionRecord to_record(const Solution& s, std::string source) {
    SolutionRecord record;
    record.n = s.n;
    record.claimed_t = s.order();
    record.vertices = s.vertices;
    record.source = std::move(source);
    return record;
}

void print_classes(std::ostream& out, const std::vector<CongruenceClass>& classes) {
    for (const CongruenceClass& cls : classes) {
        out << "# orbit " << cls.orbit_size << "\n";
        out << format_solution_line(to_record(cls.representative, "")) << "\n";
    }
}

int cmd_solve_exact(int n, int t, int jobs, const std::string& out_path) {
    ExactOptions options;
    options.jobs = jobs;
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        out = &file;
    }
    if (t > 0) {
        const SolveOutcome outcome = solve_exact_counted(n, t, options);
        std::cout << outcome.classes.size() << " classes of covering " << t << "-subsets at n = "
                  << n << " (" << outcome.subsets_examined << " subsets examined)\n";
        print_classes(*out, outcome.classes);
        return 0;
    }
    const ExactResult result = t_min(n, options);
    std::cout << "t(" << n << ") = " << result.t_min << ", " << result.classes.size()
              << " classes\n";
    std::cout << "# proven = " << (result.proven ? "yes" : "no") << ", subsets examined = "
              << result.subsets_examined << "\n";
    print_classes(*out, result.classes);
    return 0;
}

int cmd_solve_heuristic(int n, int t, SearchConfig config) {
    if (t > 0) {
        config.target_t = t;
        const auto witness = random_search(n, config);
        if (!witness) {
            std::cout << "not found\n";
            return 3;
        }
        Solution improved = improve(*witness, config.improve_rounds, config.seed);
        std::cout << format_solution_line(to_record(improved, "")) << "\n";
        return 0;
    }
    const UpperBound bound = best_upper_bound_search(n, config);
    std::cout << "t(" << n << ") <= " << bound.t << "\n";
    std::cout << format_solution_line(to_record(bound.witness, "")) << "\n";
    return 0;
}

int cmd_bounds(int n, const std::string& known_path, bool as_json) {
    KnownCovers known;
    if (!known_path.empty()) {
        for (const SolutionRecord& record : load_solution_file(known_path)) {
            if (record.n >= n) continue;
            Solution s = record.solution();
            if (!is_cover(s)) {
                std::cerr << record.source << ": not a cover, ignored\n";
                continue;
            }
            auto it = known.find(record.n);
            if (it == known.end() || s.order() < it->second.order())
                known.insert_or_assign(record.n, std::move(s));
        }
    } else {
        known = constructive_closure(n - 1);
    }
    const BoundsReport report = bounds_report(n, known);

    if (as_json) {
        nlohmann::json j;
        j["n"] = report.n;
        j["entries"] = nlohmann::json::array();
        for (const BoundEntry& e : report.entries) {
            nlohmann::json je{{"method", e.method}, {"value", e.value}};
            if (e.witness) je["witness"] = to_record(*e.witness, e.method);
            j["entries"].push_back(std::move(je));
        }
        j["best"] = {{"method", report.best.method}, {"value", report.best.value}};
        if (report.best.witness) j["best"]["witness"] = to_record(*report.best.witness, "best");
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "constructive upper bounds for n = " << report.n << "\n";
    for (const BoundEntry& e : report.entries)
        std::cout << "  " << e.method << std::string(14 - std::min<std::size_t>(13, e.method.size()), ' ')
                  << e.value << "\n";
    std::cout << "best: " << report.best.method << " = " << report.best.value << "\n";
    if (report.best.witness)
        std::cout << format_solution_line(to_record(*report.best.witness, "")) << "\n";
    return 0;
}

int cmd_verify(const std::string& path, int jobs, bool as_json) {
    const auto records = load_solution_file(path);
    const VerificationReport report = verify_corpus(records, jobs);
    if (as_json) {
        nlohmann::json j;
        j["records"] = nlohmann::json::array();
        for (const RecordVerification& v : report.records)
            j["records"].push_back({{"index", v.index},
                                    {"n", v.n},
                                    {"claimed_t", v.claimed_t},
                                    {"actual_size", v.actual_size},
                                    {"cover", v.cover},
                                    {"lines", v.line_count},
                                    {"orbit", v.orbit},
                                    {"pass", v.pass},
                                    {"source", v.source}});
        j["passed"] = report.passed;
        j["failed"] = report.failed;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const RecordVerification& v : report.records) {
            std::cout << (v.pass ? "PASS" : "FAIL") << "  n=" << v.n << " claimed<=" << v.claimed_t
                      << " size=" << v.actual_size << " cover=" << (v.cover ? "yes" : "no")
                      << " lines=" << v.line_count << " orbit=" << v.orbit;
            if (!v.source.empty()) std::cout << "  [" << v.source << "]";
            std::cout << "\n";
        }
        std::cout << report.passed << " pass / " << report.failed << " fail\n";
    }
    return report.failed == 0 ? 0 : 2;
}

int cmd_render(const std::string& path, const std::string& out_dir, bool all_lines, int scale) {
    const auto records = load_solution_file(path);
    std::filesystem::create_directories(out_dir);
    RenderOptions options;
    options.show_all_lines = all_lines;
    options.scale = scale;
    int index = 0;
    for (const SolutionRecord& record : records) {
        const std::string name = "r" + std::to_string(index / 100) +
                                 std::to_string(index / 10 % 10) + std::to_string(index % 10) +
                                 "_n" + std::to_string(record.n) + ".svg";
        std::ofstream out(std::filesystem::path(out_dir) / name, std::ios::binary);
        out << render_svg(record.solution(), options);
        std::cout << name << "\n";
        ++index;
    }
    return 0;
}

int cmd_classify(const std::string& path) {
    const auto records = load_solution_file(path);
    std::map<int, std::vector<Solution>> by_n;
    for (const SolutionRecord& record : records) by_n[record.n].push_back(record.solution());
    for (const auto& [n, solutions] : by_n) {
        const auto classes = classify(solutions);
        std::cout << "n=" << n << ": " << classes.size() << " classes from " << solutions.size()
                  << " records\n";
        print_classes(std::cout, classes);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-sublattice line covers of square lattices"};
    app.require_subcommand(1);
    const int jobs_default = default_jobs();

    auto* solve_exact_cmd =
        app.add_subcommand("solve-exact", "prove t(n) or enumerate covering t-subsets");
    int se_n = 0, se_t = 0, se_jobs = jobs_default;
    std::string se_out;
    solve_exact_cmd->add_option("--n", se_n, "lattice parameter")->required();
    solve_exact_cmd->add_option("--t", se_t, "subset order (omit to prove the minimum)");
    solve_exact_cmd->add_option("--jobs", se_jobs, "worker threads");
    solve_exact_cmd->add_option("--out", se_out, "write class representatives to a file");

    auto* heur_cmd = app.add_subcommand(
        "solve-heuristic", "randomized search for small covers (upper bounds only)");
    int h_n = 0, h_t = 0;
    SearchConfig h_config;
    h_config.jobs = jobs_default;
    std::string h_strategy = "symmetric";
    heur_cmd->add_option("--n", h_n, "lattice parameter")->required();
    heur_cmd->add_option("--t", h_t, "target order (omit to search the best upper bound)");
    heur_cmd->add_option("--budget", h_config.budget, "candidate sets per restart");
    heur_cmd->add_option("--seed", h_config.seed, "RNG seed");
    heur_cmd->add_option("--strategy", h_strategy, "uniform|symmetric")
        ->check(CLI::IsMember({"uniform", "symmetric"}));
    heur_cmd->add_option("--restarts", h_config.restarts, "independent restarts");
    heur_cmd->add_option("--improve-rounds", h_config.improve_rounds,
                         "swap attempts per improvement");
    heur_cmd->add_option("--jobs", h_config.jobs, "worker threads");

    auto* bounds_cmd = app.add_subcommand("bounds", "constructive upper bounds");
    int b_n = 0;
    std::string b_known;
    bool b_json = false;
    bounds_cmd->add_option("--n", b_n, "lattice parameter")->required();
    bounds_cmd->add_option("--known", b_known, "solution file seeding the recursions");
    bounds_cmd->add_flag("--json", b_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "verify a solution file");
    std::string v_path;
    int v_jobs = jobs_default;
    bool v_json = false;
    verify_cmd->add_option("file", v_path, "solution file")->required();
    verify_cmd->add_option("--jobs", v_jobs, "worker threads");
    verify_cmd->add_flag("--json", v_json, "JSON output");

    auto* render_cmd = app.add_subcommand("render", "render records as SVG drawings");
    std::string r_path, r_out = ".";
    bool r_all_lines = false;
    int r_scale = 40;
    render_cmd->add_option("file", r_path, "solution file")->required();
    render_cmd->add_option("--out", r_out, "output directory")->required();
    render_cmd->add_flag("--all-lines", r_all_lines, "draw every spanned line");
    render_cmd->add_option("--scale", r_scale, "pixels per lattice unit");

    auto* classify_cmd = app.add_subcommand("classify", "congruence classes of records");
    std::string c_path;
    classify_cmd->add_option("file", c_path, "solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_exact_cmd->parsed()) return cmd_solve_exact(se_n, se_t, se_jobs, se_out);
        if (heur_cmd->parsed()) {
            h_config.strategy = h_strategy == "uniform" ? Strategy::uniform_random
                                                        : Strategy::symmetric_pairs;
            return cmd_solve_heuristic(h_n, h_t, h_config);
        }
        if (bounds_cmd->parsed()) return cmd_bounds(b_n, b_known, b_json);
        if (verify_cmd->parsed()) return cmd_verify(v_path, v_jobs, v_json);
        if (render_cmd->parsed()) return cmd_render(r_path, r_out, r_all_lines, r_scale);
        if (classify_cmd->parsed()) return cmd_classify(c_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << "\n";
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
