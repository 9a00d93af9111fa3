#pragma once

#include <string>

#include "latcover/geometry.hpp"

namespace latcover {

struct RenderOptions {
    /// false draws only a coverage-sufficient subset of the spanned lines,
    /// chosen greedily by points newly covered.
    bool show_all_lines = true;
    int scale = 40;  ///< pixels per lattice unit
};

/// Deterministic SVG drawing of a solution: grey squares at every lattice
/// vertex, red squares at the chosen sublattice, one line per spanned line
/// clipped slightly beyond the lattice box. Byte-identical output for
/// identical inputs.
std::string render_svg(const Solution& s, const RenderOptions& options = {});

}  // namespace latcover
