#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "latcover/geometry.hpp"
#include "latcover/symmetry.hpp"

namespace latcover {

/// Raised when an exact search is refused as infeasible at desk scale.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExactOptions {
    /// Worker threads over top-level search branches; <= 1 runs inline.
    /// Results are identical for any worker count.
    int jobs = 1;
    /// Restrict the first-added vertex to orbit-canonical single points
    /// (lexicographic minimum of its 8 images). Sound for class enumeration:
    /// the canonical form of every covering set starts with such a point.
    bool restrict_first_vertex = true;
    /// Counting prune: with d vertices chosen and b = t - d remaining, at
    /// most b*d + b*(b-1)/2 new lines can appear, each covering at most n+1
    /// points; backtrack when that cannot reach the uncovered count.
    bool feasibility_prune = true;
    /// Vertices forced into every subset (constrained search). Disables the
    /// first-vertex restriction.
    std::vector<Point> forced;
    /// t_min refuses n beyond this; raise deliberately for long runs.
    int exact_cap = 7;
};

struct SolveOutcome {
    std::vector<CongruenceClass> classes;
    std::uint64_t subsets_examined = 0;
};

/// Smallest t with t*(t-1) >= 2*(n+1): t(t-1)/2 lines of at most n+1 points
/// each must reach (n+1)^2.
int cover_order_lower_bound(int n);

/// All congruence classes of t-vertex covering sets of [0,n]^2, complete and
/// sorted by canonical representative. An empty result proves no t-cover
/// exists.
SolveOutcome solve_exact_counted(int n, int t, const ExactOptions& options = {});
std::vector<CongruenceClass> solve_exact(int n, int t, const ExactOptions& options = {});

struct ExactResult {
    int n = 0;
    int t_min = 0;
    std::vector<CongruenceClass> classes;
    std::uint64_t subsets_examined = 0;
    /// True when the whole configuration space below t_min was exhausted.
    bool proven = false;
};

/// Proves t(n) by iterating t upward from cover_order_lower_bound(n).
/// Throws CapacityError when n exceeds options.exact_cap.
ExactResult t_min(int n, const ExactOptions& options = {});

}  // namespace latcover
