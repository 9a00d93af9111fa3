#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latcover/geometry.hpp"

namespace latcover {

/// Sum of Euler's totient phi(k) for k = 1..m (OEIS A002088), by sieve.
long long totient_summatory(int m);

/// 2n vertices on the two main diagonals, excluding the column x = n/2 when
/// n is even or x = (n-1)/2 when n is odd. Covers the lattice. n >= 2.
Solution symmetric_design(int n);

/// Extends a cover of the (n'+1)x(n'+1) lattice to n'+1 by adding one row and
/// one column covered by three new vertices: (n,n) plus the far corners
/// (0,n) and (n,0) of the new row and column. |result| <= |s| + 3.
Solution taper_extend(const Solution& s);

/// Extends a cover to n'+2 by translating it one step inward and placing the
/// four outer corners; the new border rows and columns are covered by the
/// corner-spanned boundary lines. |result| = |s| + 4.
Solution corner_extend(const Solution& s);

/// Tiles [0,n]^2 with k x k translated copies of a cover of floor(n/k)
/// (adjacent copies overlap by up to one row/column). quad_tile is k = 2.
Solution grid_tile(int n, int k, const Solution& block);
Solution quad_tile(int n, const Solution& block);

/// i x i copies of a tile anchored at all four corners, adjacent copies
/// sharing one row/column; covers the (tile.n * i) lattice.
/// Throws std::invalid_argument when the tile misses a corner or is no cover.
Solution stack_tiles(const Solution& tile, int i);

/// The 4 corners of the n=3 lattice: stacking it i times gives (i+1)^2.
Solution stack_tile_3();
/// Corner-anchored 6-cover of n=4 whose two extra vertices stay distinct
/// under stacking: i x i copies give (i+1)^2 + 2i^2 vertices.
Solution stack_tile_4_interstitial();
/// Corner-anchored 6-cover of n=4 with a mid-edge pair shared between
/// adjacent copies: i x i copies give (i+1)^2 + i(i+1) vertices.
Solution stack_tile_4_shared_edge();

/// One near-center vertex plus one vertex per line direction visible from
/// it: for each primitive direction (one representative per +-pair) the
/// nearest in-box lattice point. Covers the lattice with at most
/// 1 + 4*totient_summatory(floor((n+1)/2)) vertices. n >= 2.
Solution central_star(int n);

struct BoundEntry {
    std::string method;
    int value = 0;
    std::optional<Solution> witness;
};

struct BoundsReport {
    int n = 0;
    std::vector<BoundEntry> entries;
    BoundEntry best;
};

/// Best covers known for smaller lattices, keyed by lattice parameter.
using KnownCovers = std::map<int, Solution>;

/// Evaluates every applicable constructive method at n, seeding the
/// recursions (taper, corner, tilings) from `known`; best = minimum entry.
/// Every witness is verified to cover before it is reported.
BoundsReport bounds_report(int n, const KnownCovers& known);

/// Self-seeded variant: recursion entries use a bottom-up constructive
/// closure over 2..n-1.
BoundsReport bounds_report(int n);

/// Best constructive witnesses for every m in 2..n, each step seeded by the
/// previous ones.
KnownCovers constructive_closure(int n);

/// (n+1)^(2/3) * ln(n+1). Natural logarithm; the growth-limit check below
/// assumes it (documented where reported).
double summary_bound(int n);

/// t < (n+1)^(2/3) * ln(n+1).
bool summary_check(int n, int t);

}  // namespace latcover
