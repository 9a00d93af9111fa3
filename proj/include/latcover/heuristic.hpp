#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcover/geometry.hpp"
#include "latcover/rng.hpp"
#include "latcover/symmetry.hpp"

namespace latcover {

enum class Strategy {
    uniform_random,
    symmetric_pairs,
};

/// Published default seed; acceptance runs and documented reproductions use
/// it unless overridden.
inline constexpr std::uint64_t kDefaultSeed = 2024;

struct SearchConfig {
    Strategy strategy = Strategy::symmetric_pairs;
    int target_t = 0;
    std::uint64_t budget = 200'000;          ///< candidate sets per restart
    std::uint64_t seed = kDefaultSeed;
    int restarts = 16;
    std::uint64_t improve_rounds = 400'000;  ///< swap attempts per improvement
    int jobs = 1;                            ///< worker threads over restarts
};

namespace sampling {

struct Candidate {
    std::vector<Point> points;           // exactly t distinct vertices
    std::optional<SymmetryOp> axis;      // the mirror (symmetric-pairs only)
};

/// Draws one candidate vertex set. symmetric_pairs picks one mirror axis per
/// candidate ({mirror_d, mirror_d'} only when both t and n are odd, since
/// m_x/m_y have no lattice fixed points at odd n), fills it with vertex/image
/// pairs, and places an odd final vertex uniformly on the axis. Returns
/// nullopt when the axis cannot host the requested set (budget is consumed).
std::optional<Candidate> sample(Xoshiro256StarStar& rng, int n, Strategy strategy, int t);

}  // namespace sampling

/// Samples candidate sets per the strategy until one covers; per-restart
/// streams are pure functions of (seed, restart index) and the reduction
/// over restarts is deterministic for any worker count. Returns the witness
/// or nullopt after budget exhaustion (failure is a value, not an error).
std::optional<Solution> random_search(int n, const SearchConfig& config);

/// Local refinement: greedy deletion to a fixpoint, then `rounds` random
/// single-vertex swaps keeping coverage (a plateau walk), re-running deletion
/// after each accepted swap. Never returns a larger set; deletion-only
/// (rounds = 0) is idempotent. Throws std::invalid_argument on a non-cover.
Solution improve(const Solution& s, std::uint64_t rounds, std::uint64_t seed);

struct UpperBound {
    int t = 0;          ///< upper bound only, never a proven minimum
    Solution witness;   ///< machine-verified cover of order t
};

/// Starts from the best constructive bound for n, then repeatedly searches
/// one vertex below the best witness found (random_search + improve per
/// restart) until a level fails. config.target_t is ignored.
UpperBound best_upper_bound_search(int n, const SearchConfig& config);

}  // namespace latcover
