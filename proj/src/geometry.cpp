#include "latcover/geometry.hpp"

#include <algorithm>

namespace latcover {

Solution Solution::checked(int n, std::vector<Point> vertices) {
    if (n < 1) throw std::invalid_argument("Solution: lattice parameter must be >= 1");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point p = vertices[i];
        if (p.x < 0 || p.x > n || p.y < 0 || p.y > n)
            throw std::invalid_argument("Solution: vertex (" + std::to_string(p.x) + "," +
                                        std::to_string(p.y) + ") outside [0," +
                                        std::to_string(n) + "]^2");
        if (i > 0 && vertices[i - 1] == p)
            throw std::invalid_argument("Solution: duplicate vertex (" + std::to_string(p.x) +
                                        "," + std::to_string(p.y) + ")");
    }
    return Solution{n, std::move(vertices)};
}

LineKey normalize_line(Point p, Point q) {
    if (p == q) throw std::invalid_argument("normalize_line: degenerate pair");
    long long a = q.y - p.y;
    long long b = p.x - q.x;
    long long c = a * p.x + b * p.y;
    const long long g = std::gcd(std::abs(a), std::abs(b));
    a /= g;
    b /= g;
    c /= g;  // g divides c: c was computed from the unreduced (a, b)
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
}

std::vector<Point> points_on_line(const LineKey& line, int n) {
    std::vector<Point> pts;
    for_each_point_on_line(line, n, [&](Point p) { pts.push_back(p); });
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace latcover
