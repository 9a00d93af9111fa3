#pragma once

#include <vector>

#include "latcover/geometry.hpp"
#include "latcover/mask.hpp"

namespace latcover {

/// Deduplicated keys of all lines spanned by vertex pairs of s, sorted.
/// |result| <= t(t-1)/2, with equality iff no three vertices are collinear.
/// Throws std::invalid_argument when s has fewer than two vertices.
std::vector<LineKey> spanned_lines(const Solution& s);

/// Union over every spanned line of the lattice points it passes through.
/// Throws std::invalid_argument when s has fewer than two vertices.
CoverageMask coverage(const Solution& s);

/// True iff the spanned lines cover all (n+1)^2 lattice vertices.
bool is_cover(const Solution& s);

}  // namespace latcover
