#include "latcover/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

#include "latcover/coverage.hpp"

namespace latcover {

namespace {

using Subset = std::vector<std::uint16_t>;  // point indices, ascending

template <int W>
using Mask = std::array<std::uint64_t, W>;

template <int W>
inline void or_into(Mask<W>& dst, const std::uint64_t* src) {
    for (int w = 0; w < W; ++w) dst[w] |= src[w];
}

template <int W>
inline int popcount(const Mask<W>& m) {
    int total = 0;
    for (int w = 0; w < W; ++w) total += std::popcount(m[w]);
    return total;
}

template <int W>
struct Search {
    int n, np, t;
    bool prune;
    std::vector<std::uint64_t> pair;  // flat [(i*np + j)*W], symmetric
    Mask<W> full{};
    std::vector<std::uint16_t> forced;
    Mask<W> forced_mask{};
    std::vector<std::uint16_t> first_candidates;  // candidates for the first pick

    const std::uint64_t* pair_row(int i) const { return pair.data() + std::size_t(i) * np * W; }

    bool pruned(int depth, const Mask<W>& mask) const {
        if (!prune) return false;
        const int uncovered = np - popcount<W>(mask);
        if (uncovered == 0) return false;
        const long long b = t - depth;
        const long long addable = b * depth + b * (b - 1) / 2;
        return addable * (n + 1) < uncovered;
    }

    // chosen holds forced vertices plus picks so far; candidates are taken
    // ascending from `from`, skipping forced indices.
    void dfs(std::vector<std::uint16_t>& chosen, int from, const Mask<W>& mask,
             std::vector<Subset>& out, std::uint64_t& leaves) const {
        const int depth = static_cast<int>(chosen.size());
        if (depth == t) {
            ++leaves;
            if (mask == full) {
                Subset s(chosen);
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            return;
        }
        if (pruned(depth, mask)) return;
        const int need = t - depth;
        for (int i = from; i <= np - need; ++i) {
            if (std::find(forced.begin(), forced.end(), i) != forced.end()) continue;
            Mask<W> next = mask;
            const std::uint64_t* row = pair_row(i);
            for (std::uint16_t c : chosen) or_into<W>(next, row + std::size_t(c) * W);
            chosen.push_back(static_cast<std::uint16_t>(i));
            dfs(chosen, i + 1, next, out, leaves);
            chosen.pop_back();
        }
    }

    // One task = one choice of first pick; exhausts that branch.
    void run_task(int first, std::vector<Subset>& out, std::uint64_t& leaves) const {
        std::vector<std::uint16_t> chosen(forced);
        Mask<W> mask = forced_mask;
        const std::uint64_t* row = pair_row(first);
        for (std::uint16_t c : chosen) or_into<W>(mask, row + std::size_t(c) * W);
        chosen.push_back(static_cast<std::uint16_t>(first));
        dfs(chosen, first + 1, mask, out, leaves);
    }
};

template <int W>
SolveOutcome solve_impl(int n, int t, const ExactOptions& options) {
    Search<W> s;
    s.n = n;
    s.np = (n + 1) * (n + 1);
    s.t = t;
    s.prune = options.feasibility_prune;

    const int np = s.np;
    const auto point_of = [n](int i) { return Point{i / (n + 1), i % (n + 1)}; };
    const auto index_of = [n](Point p) { return p.x * (n + 1) + p.y; };

    // Pair -> line-coverage masks, both triangle halves filled.
    s.pair.assign(std::size_t(np) * np * W, 0);
    for (int i = 0; i < np; ++i) {
        for (int j = i + 1; j < np; ++j) {
            Mask<W> m{};
            for_each_point_on_line(normalize_line(point_of(i), point_of(j)), n, [&](Point p) {
                const int b = index_of(p);
                m[b >> 6] |= std::uint64_t{1} << (b & 63);
            });
            std::copy(m.begin(), m.end(), s.pair.begin() + (std::size_t(i) * np + j) * W);
            std::copy(m.begin(), m.end(), s.pair.begin() + (std::size_t(j) * np + i) * W);
        }
    }
    for (int b = 0; b < np; ++b) s.full[b >> 6] |= std::uint64_t{1} << (b & 63);

    // Forced vertices contribute their spanned lines up front.
    if (!options.forced.empty()) {
        const Solution f = Solution::checked(n, options.forced);
        for (Point p : f.vertices) s.forced.push_back(static_cast<std::uint16_t>(index_of(p)));
        if (f.order() >= 2) {
            for (const LineKey& line : spanned_lines(f))
                for_each_point_on_line(line, n, [&](Point p) {
                    const int b = index_of(p);
                    s.forced_mask[b >> 6] |= std::uint64_t{1} << (b & 63);
                });
        }
    }
    if (static_cast<int>(s.forced.size()) > t)
        throw std::invalid_argument("solve_exact: more forced vertices than t");

    const int picks = t - static_cast<int>(s.forced.size());
    if (picks == 0) {
        // Fully forced: the subset either covers or it does not.
        SolveOutcome outcome;
        outcome.subsets_examined = 1;
        if (s.forced_mask == s.full) {
            std::vector<Point> vs;
            for (auto i : s.forced) vs.push_back(point_of(i));
            outcome.classes = classify({Solution::checked(n, vs)});
        }
        return outcome;
    }

    const bool restrict_first = options.restrict_first_vertex && options.forced.empty();
    for (int i = 0; i < np; ++i) {
        if (std::find(s.forced.begin(), s.forced.end(), i) != s.forced.end()) continue;
        if (restrict_first) {
            const Point p = point_of(i);
            Point smallest = p;
            for (SymmetryOp op : kSymmetryOps) smallest = std::min(smallest, apply(op, p, n));
            if (smallest != p) continue;
        }
        s.first_candidates.push_back(static_cast<std::uint16_t>(i));
    }

    const int ntasks = static_cast<int>(s.first_candidates.size());
    std::vector<std::vector<Subset>> hits(ntasks);
    std::vector<std::uint64_t> leaves(ntasks, 0);

    const int jobs = std::min(std::max(options.jobs, 1), ntasks == 0 ? 1 : ntasks);
    if (jobs <= 1) {
        for (int k = 0; k < ntasks; ++k) s.run_task(s.first_candidates[k], hits[k], leaves[k]);
    } else {
        std::atomic<int> cursor{0};
        auto worker = [&] {
            while (true) {
                const int k = cursor.fetch_add(1);
                if (k >= ntasks) break;
                s.run_task(s.first_candidates[k], hits[k], leaves[k]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SolveOutcome outcome;
    std::vector<Solution> found;
    for (int k = 0; k < ntasks; ++k) {
        outcome.subsets_examined += leaves[k];
        for (const Subset& subset : hits[k]) {
            std::vector<Point> vs;
            vs.reserve(subset.size());
            for (auto i : subset) vs.push_back(point_of(i));
            found.push_back(Solution{n, std::move(vs)});  // already sorted ascending
        }
    }
    outcome.classes = classify(found);
    return outcome;
}

}  // namespace

int cover_order_lower_bound(int n) {
    if (n < 1) throw std::invalid_argument("cover_order_lower_bound: n must be >= 1");
    int t = 1;
    while (static_cast<long long>(t) * (t - 1) < 2LL * (n + 1)) ++t;
    return t;
}

SolveOutcome solve_exact_counted(int n, int t, const ExactOptions& options) {
    if (n < 1) throw std::invalid_argument("solve_exact: n must be >= 1");
    const int np = (n + 1) * (n + 1);
    if (t < 2 || t > np)
        throw std::invalid_argument("solve_exact: t must satisfy 2 <= t <= (n+1)^2");
    switch ((np + 63) / 64) {
        case 1:
            return solve_impl<1>(n, t, options);
        case 2:
            return solve_impl<2>(n, t, options);
        case 3:
            return solve_impl<3>(n, t, options);
        case 4:
            return solve_impl<4>(n, t, options);
        default:
            throw CapacityError("solve_exact: lattice beyond exhaustive-search scale (n > 15)");
    }
}

std::vector<CongruenceClass> solve_exact(int n, int t, const ExactOptions& options) {
    return solve_exact_counted(n, t, options).classes;
}

ExactResult t_min(int n, const ExactOptions& options) {
    if (n < 1) throw std::invalid_argument("t_min: n must be >= 1");
    if (n > options.exact_cap)
        throw CapacityError("t_min: n = " + std::to_string(n) + " exceeds the exact-search cap " +
                            std::to_string(options.exact_cap) +
                            "; use the heuristic solver (or raise ExactOptions::exact_cap)");
    ExactResult result;
    result.n = n;
    const int np = (n + 1) * (n + 1);
    for (int t = cover_order_lower_bound(n); t <= np; ++t) {
        SolveOutcome outcome = solve_exact_counted(n, std::max(t, 2), options);
        result.subsets_examined += outcome.subsets_examined;
        if (!outcome.classes.empty()) {
            result.t_min = t;
            result.classes = std::move(outcome.classes);
            result.proven = true;
            return result;
        }
    }
    throw std::logic_error("t_min: no cover found up to (n+1)^2 vertices");  // unreachable
}

}  // namespace latcover
