#include "latcover/coverage.hpp"

#include <algorithm>
#include <stdexcept>

namespace latcover {

std::vector<LineKey> spanned_lines(const Solution& s) {
    if (s.vertices.size() < 2)
        throw std::invalid_argument("spanned_lines: need at least two vertices");
    std::vector<LineKey> lines;
    lines.reserve(s.vertices.size() * (s.vertices.size() - 1) / 2);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
            lines.push_back(normalize_line(s.vertices[i], s.vertices[j]));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

CoverageMask coverage(const Solution& s) {
    CoverageMask mask(s.n);
    for (const LineKey& line : spanned_lines(s))
        for_each_point_on_line(line, s.n, [&](Point p) { mask.set(p); });
    return mask;
}

bool is_cover(const Solution& s) { return coverage(s).all(); }

}  // namespace latcover
