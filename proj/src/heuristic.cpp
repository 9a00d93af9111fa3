#include "latcover/heuristic.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "latcover/bounds.hpp"
#include "latcover/coverage.hpp"
#include "latcover/exact.hpp"
#include "latcover/kernels.hpp"

namespace latcover {

namespace {

// Precomputed line-coverage masks per point pair. Beyond the memory cap the
// tester falls back to the geometry module per candidate.
class CoverTester {
public:
    explicit CoverTester(int n) : n_(n), np_((n + 1) * (n + 1)), words_((np_ + 63) / 64) {
        const std::size_t bytes = std::size_t(np_) * np_ * words_ * 8;
        if (bytes > kTableBytesCap) return;
        masks_.assign(std::size_t(np_) * np_ * words_, 0);
        for (int i = 0; i < np_; ++i)
            for (int j = i + 1; j < np_; ++j) {
                const auto base = (std::size_t(i) * np_ + j) * words_;
                for_each_point_on_line(normalize_line(point_of(i), point_of(j)), n_,
                                       [&](Point p) {
                                           const int b = index_of(p);
                                           masks_[base + (b >> 6)] |= std::uint64_t{1}
                                                                      << (b & 63);
                                       });
                std::copy_n(masks_.begin() + base, words_,
                            masks_.begin() + (std::size_t(j) * np_ + i) * words_);
            }
        has_table_ = true;
    }

    int n() const { return n_; }
    int np() const { return np_; }

    Point point_of(int i) const { return {i / (n_ + 1), i % (n_ + 1)}; }
    int index_of(Point p) const { return p.x * (n_ + 1) + p.y; }

    bool covers(const std::vector<int>& pts) const {
        if (pts.size() < 2) return false;
        if (!has_table_) {
            std::vector<Point> vs;
            vs.reserve(pts.size());
            for (int i : pts) vs.push_back(point_of(i));
            std::sort(vs.begin(), vs.end());
            return is_cover(Solution{n_, std::move(vs)});
        }
        acc_.assign(words_, 0);
        const int w = words_;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                const std::uint64_t* m =
                    masks_.data() + (std::size_t(pts[a]) * np_ + pts[b]) * w;
                for (int k = 0; k < w; ++k) acc_[k] |= m[k];
            }
        return kernels::all_set(acc_.data(), np_);
    }

private:
    static constexpr std::size_t kTableBytesCap = 64u << 20;

    int n_, np_, words_;
    bool has_table_ = false;
    std::vector<std::uint64_t> masks_;
    mutable std::vector<std::uint64_t> acc_;
};

Solution to_solution(const CoverTester& tester, std::vector<int> pts) {
    std::vector<Point> vs;
    vs.reserve(pts.size());
    for (int i : pts) vs.push_back(tester.point_of(i));
    return Solution::checked(tester.n(), std::move(vs));
}

// Greedy deletion to a fixpoint, in ascending position order.
void deletion_pass(std::vector<int>& pts, const CoverTester& tester) {
    bool changed = true;
    while (changed && pts.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<int> smaller(pts);
            smaller.erase(smaller.begin() + i);
            if (tester.covers(smaller)) {
                pts = std::move(smaller);
                changed = true;
                break;
            }
        }
    }
}

// Swap walk across the space of covers: any coverage-preserving swap is kept
// (the walk moves sideways), and deletions are taken whenever they appear.
void improve_with_rng(std::vector<int>& pts, const CoverTester& tester, std::uint64_t rounds,
                      Xoshiro256StarStar& rng) {
    deletion_pass(pts, tester);
    for (std::uint64_t r = 0; r < rounds && pts.size() > 2; ++r) {
        const auto slot = static_cast<std::size_t>(rng.below(pts.size()));
        const int candidate = static_cast<int>(rng.below(tester.np()));
        if (std::find(pts.begin(), pts.end(), candidate) != pts.end()) continue;
        const int old = pts[slot];
        pts[slot] = candidate;
        if (!tester.covers(pts)) {
            pts[slot] = old;
            continue;
        }
        std::vector<int> reduced(pts);
        deletion_pass(reduced, tester);
        if (reduced.size() < pts.size()) pts = std::move(reduced);
    }
}

std::optional<std::vector<int>> sample_indices(Xoshiro256StarStar& rng, int n, Strategy strategy,
                                               int t, SymmetryOp* axis_out = nullptr) {
    const int np = (n + 1) * (n + 1);
    std::vector<int> pts;
    pts.reserve(t);
    if (strategy == Strategy::uniform_random) {
        while (static_cast<int>(pts.size()) < t) {
            const int v = static_cast<int>(rng.below(np));
            if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
        }
        return pts;
    }
    // symmetric-pairs: one mirror axis per candidate.
    static constexpr SymmetryOp kAxes[4] = {SymmetryOp::mirror_x, SymmetryOp::mirror_y,
                                            SymmetryOp::mirror_d, SymmetryOp::mirror_dp};
    const bool odd_t = (t % 2) != 0;
    SymmetryOp axis;
    if (odd_t && (n % 2) != 0)
        axis = kAxes[2 + rng.below(2)];  // only the diagonals have fixed points
    else
        axis = kAxes[rng.below(4)];
    if (axis_out) *axis_out = axis;
    const auto point_of = [n](int i) { return Point{i / (n + 1), i % (n + 1)}; };
    const auto mirror = [&](int v) {
        const Point m = apply(axis, point_of(v), n);
        return m.x * (n + 1) + m.y;
    };
    int tries = 0;
    const int cap = 32 + 8 * t;
    while (static_cast<int>(pts.size()) < t - (odd_t ? 1 : 0)) {
        if (++tries > cap) return std::nullopt;
        const int v = static_cast<int>(rng.below(np));
        const int w = mirror(v);
        if (w == v) continue;  // on the axis; pairs sit off it
        if (std::find(pts.begin(), pts.end(), v) != pts.end()) continue;
        if (std::find(pts.begin(), pts.end(), w) != pts.end()) continue;
        pts.push_back(v);
        pts.push_back(w);
    }
    if (odd_t) {
        std::vector<int> axis_points;
        for (int v = 0; v < np; ++v)
            if (mirror(v) == v && std::find(pts.begin(), pts.end(), v) == pts.end())
                axis_points.push_back(v);
        if (axis_points.empty()) return std::nullopt;
        pts.push_back(axis_points[rng.below(axis_points.size())]);
    }
    return pts;
}

void validate(const SearchConfig& config, int n) {
    if (config.target_t < 2)
        throw std::invalid_argument("random_search: target_t < 2 cannot span a line");
    if (config.target_t > (n + 1) * (n + 1))
        throw std::invalid_argument("random_search: target_t exceeds the vertex count");
    if (config.budget < 1) throw std::invalid_argument("random_search: budget must be >= 1");
    if (config.restarts < 1) throw std::invalid_argument("random_search: restarts must be >= 1");
}

struct RestartResult {
    std::optional<std::vector<int>> witness;
};

// Runs fn(restart_index) for every restart, possibly in parallel; results
// land in restart order so the reduction is scheduling-independent.
template <typename Fn>
std::vector<RestartResult> run_restarts(int restarts, int jobs, Fn&& fn) {
    std::vector<RestartResult> results(restarts);
    const int workers = std::clamp(jobs, 1, restarts);
    if (workers <= 1) {
        for (int r = 0; r < restarts; ++r) results[r] = fn(r);
        return results;
    }
    std::atomic<int> cursor{0};
    auto drain = [&] {
        while (true) {
            const int r = cursor.fetch_add(1);
            if (r >= restarts) break;
            results[r] = fn(r);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int j = 0; j < workers; ++j) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
    return results;
}

// Smallest witness, ties by canonical form then raw vertex list.
std::optional<Solution> reduce_witnesses(const CoverTester& tester,
                                         const std::vector<RestartResult>& results) {
    std::optional<Solution> best;
    std::vector<Point> best_canon;
    for (const RestartResult& r : results) {
        if (!r.witness) continue;
        Solution s = to_solution(tester, *r.witness);
        std::vector<Point> canon = canonical_form(s).vertices;
        if (!best || std::tuple(s.order(), canon, s.vertices) <
                         std::tuple(best->order(), best_canon, best->vertices)) {
            best_canon = std::move(canon);
            best = std::move(s);
        }
    }
    return best;
}

std::uint64_t stream_index(int level_t, int restart) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(level_t)) << 32) |
           static_cast<std::uint32_t>(restart);
}

}  // namespace

namespace sampling {

std::optional<Candidate> sample(Xoshiro256StarStar& rng, int n, Strategy strategy, int t) {
    if (t < 2 || t > (n + 1) * (n + 1))
        throw std::invalid_argument("sample: t out of range");
    SymmetryOp axis{};
    auto pts = sample_indices(rng, n, strategy, t, &axis);
    if (!pts) return std::nullopt;
    Candidate c;
    for (int i : *pts) c.points.push_back({i / (n + 1), i % (n + 1)});
    std::sort(c.points.begin(), c.points.end());
    if (strategy == Strategy::symmetric_pairs) c.axis = axis;
    return c;
}

}  // namespace sampling

std::optional<Solution> random_search(int n, const SearchConfig& config) {
    validate(config, n);
    const CoverTester tester(n);
    const auto results = run_restarts(config.restarts, config.jobs, [&](int restart) {
        RestartResult out;
        auto rng = Xoshiro256StarStar::stream(config.seed, stream_index(config.target_t, restart));
        for (std::uint64_t it = 0; it < config.budget; ++it) {
            auto pts = sample_indices(rng, n, config.strategy, config.target_t);
            if (!pts) continue;
            if (tester.covers(*pts)) {
                std::sort(pts->begin(), pts->end());
                out.witness = std::move(*pts);
                break;
            }
        }
        return out;
    });
    auto best = reduce_witnesses(tester, results);
    if (best && !is_cover(*best))
        throw std::logic_error("random_search: witness failed independent verification");
    return best;
}

Solution improve(const Solution& s, std::uint64_t rounds, std::uint64_t seed) {
    if (!is_cover(s)) throw std::invalid_argument("improve: input is not a cover");
    const CoverTester tester(s.n);
    std::vector<int> pts;
    pts.reserve(s.vertices.size());
    for (Point p : s.vertices) pts.push_back(tester.index_of(p));
    auto rng = Xoshiro256StarStar::stream(seed, 0);
    improve_with_rng(pts, tester, rounds, rng);
    Solution result = to_solution(tester, std::move(pts));
    if (!is_cover(result))
        throw std::logic_error("improve: result failed independent verification");
    return result;
}

UpperBound best_upper_bound_search(int n, const SearchConfig& config) {
    if (n < 2) throw std::invalid_argument("best_upper_bound_search: n must be >= 2");
    const CoverTester tester(n);

    // Constructive seed; guarantees t <= 2n even if every search level fails.
    Solution best = *bounds_report(n).best.witness;
    {
        std::vector<int> pts;
        for (Point p : best.vertices) pts.push_back(tester.index_of(p));
        auto rng = Xoshiro256StarStar::stream(config.seed, stream_index(0, 0));
        improve_with_rng(pts, tester, config.improve_rounds, rng);
        best = to_solution(tester, std::move(pts));
    }

    const int floor_t = cover_order_lower_bound(n);
    for (int t = best.order() - 1; t >= floor_t; --t) {
        SearchConfig level = config;
        level.target_t = t;
        validate(level, n);
        // Sampling at exactly t can be hopeless (covers of that order may be
        // rare or never mirror-symmetric); each restart walks a small size
        // ladder t, t+1, ..., improving its first hit downward instead.
        std::vector<int> sizes;
        for (int s = t; s <= std::min({t + 4, (n + 1) * (n + 1)}); ++s) sizes.push_back(s);
        const std::uint64_t per_size = std::max<std::uint64_t>(1, level.budget / sizes.size());
        const auto results = run_restarts(level.restarts, level.jobs, [&](int restart) {
            RestartResult out;
            auto rng = Xoshiro256StarStar::stream(level.seed, stream_index(t, restart + 1));
            for (int size : sizes) {
                bool hit = false;
                for (std::uint64_t it = 0; it < per_size && !hit; ++it) {
                    auto pts = sample_indices(rng, n, level.strategy, size);
                    if (!pts) continue;
                    if (!tester.covers(*pts)) continue;
                    improve_with_rng(*pts, tester, level.improve_rounds, rng);
                    std::sort(pts->begin(), pts->end());
                    out.witness = std::move(*pts);
                    hit = true;
                }
                if (hit) break;
            }
            return out;
        });
        auto winner = reduce_witnesses(tester, results);
        if (winner && winner->order() < best.order()) best = std::move(*winner);
        if (best.order() > t) break;  // level failed to reach t
        t = best.order();             // loop decrement lands one below the new witness
    }

    if (!is_cover(best))
        throw std::logic_error("best_upper_bound_search: witness failed verification");
    return {best.order(), std::move(best)};
}

}  // namespace latcover
