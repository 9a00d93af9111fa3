#include "latcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "latcover/coverage.hpp"
#include "latcover/kernels.hpp"
#include "latcover/mask.hpp"

namespace latcover {

namespace {

// Fixed two-decimal formatting, locale-independent.
void append_fixed(std::string& out, double value) {
    long long cents = std::llround(value * 100.0);
    if (cents < 0) {
        out += '-';
        cents = -cents;
    }
    out += std::to_string(cents / 100);
    out += '.';
    const long long frac = cents % 100;
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
}

struct Segment {
    double x1, y1, x2, y2;
};

// Clip the infinite line a*x + b*y = c to the square [lo, hi]^2.
std::optional<Segment> clip_line(const LineKey& line, double lo, double hi) {
    const double a = line.a, b = line.b, c = line.c;
    // Closest point to the origin plus the direction (-b, a).
    const double norm = a * a + b * b;
    const double px = a * c / norm, py = b * c / norm;
    const double dx = -b, dy = a;
    double tmin = -1e18, tmax = 1e18;
    const auto cut = [&](double p, double d) {
        if (d == 0.0) return p >= lo && p <= hi;
        double t0 = (lo - p) / d, t1 = (hi - p) / d;
        if (t0 > t1) std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
        return true;
    };
    if (!cut(px, dx) || !cut(py, dy) || tmin > tmax) return std::nullopt;
    return Segment{px + tmin * dx, py + tmin * dy, px + tmax * dx, py + tmax * dy};
}

// Coverage-sufficient subset of the spanned lines, greedy by newly covered
// points; ties broken by line-key order.
std::vector<LineKey> reduced_lines(const Solution& s, const std::vector<LineKey>& lines) {
    std::vector<CoverageMask> masks;
    masks.reserve(lines.size());
    for (const LineKey& line : lines) {
        CoverageMask m(s.n);
        for_each_point_on_line(line, s.n, [&](Point p) { m.set(p); });
        masks.push_back(std::move(m));
    }
    CoverageMask acc(s.n);
    std::vector<bool> used(lines.size(), false);
    std::vector<LineKey> chosen;
    while (!acc.all()) {
        std::size_t best = lines.size();
        std::size_t best_gain = 0;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (used[i]) continue;
            const std::size_t gain = kernels::andnot_popcount(
                masks[i].words().data(), acc.words().data(), acc.words().size());
            if (gain > best_gain) {
                best_gain = gain;
                best = i;
            }
        }
        if (best == lines.size()) break;  // not a cover: draw what helps, stop
        used[best] = true;
        acc |= masks[best];
        chosen.push_back(lines[best]);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

std::string render_svg(const Solution& s, const RenderOptions& options) {
    const int n = s.n;
    const double scale = options.scale;
    const double pad = 0.75;               // lattice units of margin
    const double ext = 0.45;               // line overhang beyond the corner vertices
    const double side = 0.28;              // marker square side, lattice units
    const double span = n + 2 * pad;
    const auto X = [&](double x) { return (x + pad) * scale; };
    const auto Y = [&](double y) { return (n - y + pad) * scale; };  // y up

    std::vector<LineKey> lines;
    if (s.vertices.size() >= 2) {
        lines = spanned_lines(s);
        if (!options.show_all_lines) lines = reduced_lines(s, lines);
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
    append_fixed(out, span * scale);
    out += "\" height=\"";
    append_fixed(out, span * scale);
    out += "\" viewBox=\"0 0 ";
    append_fixed(out, span * scale);
    out += " ";
    append_fixed(out, span * scale);
    out += "\">\n";

    out += "<g stroke=\"#404040\" stroke-width=\"";
    append_fixed(out, scale * 0.035);
    out += "\">\n";
    for (const LineKey& line : lines) {
        const auto seg = clip_line(line, -ext, n + ext);
        if (!seg) continue;
        out += "<line x1=\"";
        append_fixed(out, X(seg->x1));
        out += "\" y1=\"";
        append_fixed(out, Y(seg->y1));
        out += "\" x2=\"";
        append_fixed(out, X(seg->x2));
        out += "\" y2=\"";
        append_fixed(out, Y(seg->y2));
        out += "\"/>\n";
    }
    out += "</g>\n";

    const auto square = [&](std::string& dst, double cx, double cy) {
        dst += "<rect x=\"";
        append_fixed(dst, X(cx) - side * scale / 2);
        dst += "\" y=\"";
        append_fixed(dst, Y(cy) - side * scale / 2);
        dst += "\" width=\"";
        append_fixed(dst, side * scale);
        dst += "\" height=\"";
        append_fixed(dst, side * scale);
        dst += "\"/>\n";
    };

    out += "<g fill=\"#b0b0b0\">\n";
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y) square(out, x, y);
    out += "</g>\n";

    out += "<g fill=\"#cc0000\">\n";
    for (Point p : s.vertices) square(out, p.x, p.y);
    out += "</g>\n";

    out += "</svg>\n";
    return out;
}

}  // namespace latcover
