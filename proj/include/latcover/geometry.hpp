#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcover {

/// Vertex of the (n+1)x(n+1) lattice; valid coordinates satisfy 0 <= x,y <= n.
struct Point {
    int x = 0;
    int y = 0;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Canonical key of the infinite line {(x,y) : a*x + b*y = c}.
///
/// Normal form: gcd(|a|,|b|) == 1 and (a > 0, or a == 0 and b > 0), so two
/// point pairs spanning the same geometric line always produce the same key.
struct LineKey {
    int a = 0;
    int b = 0;
    int c = 0;
    friend constexpr auto operator<=>(const LineKey&, const LineKey&) = default;
};

/// A vertex subset of the (n+1)x(n+1) lattice. Vertices are strictly sorted
/// lexicographically by (x, y), duplicate-free and within bounds.
struct Solution {
    int n = 0;
    std::vector<Point> vertices;

    int order() const { return static_cast<int>(vertices.size()); }

    /// Sorts, then rejects out-of-bounds coordinates and duplicates.
    static Solution checked(int n, std::vector<Point> vertices);

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Key of the line through two distinct lattice points.
/// Throws std::invalid_argument on a degenerate pair (p == q).
LineKey normalize_line(Point p, Point q);

/// All lattice points of [0,n]^2 on the line, sorted by (x, y).
std::vector<Point> points_on_line(const LineKey& line, int n);

namespace detail {

constexpr long long floor_div(long long num, long long den) {
    // den > 0
    return num >= 0 ? num / den : -((-num + den - 1) / den);
}

constexpr long long ceil_div(long long num, long long den) {
    return -floor_div(-num, den);
}

struct Egcd {
    long long g, u, v;  // a*u + b*v == g
};

constexpr Egcd egcd(long long a, long long b) {
    if (b == 0) return a < 0 ? Egcd{-a, -1, 0} : Egcd{a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.v, e.u - (a / b) * e.v};
}

struct KRange {
    long long lo, hi;  // empty when lo > hi
};

// k such that lo <= s + k*step <= hi (step != 0).
constexpr KRange k_range(long long s, long long step, long long lo, long long hi) {
    if (step < 0) {
        step = -step;
        s = -s;
        long long t = lo;
        lo = -hi;
        hi = -t;
    }
    return {ceil_div(lo - s, step), floor_div(hi - s, step)};
}

}  // namespace detail

/// Calls fn(Point) once for every lattice point of [0,n]^2 on the line.
/// Visits points along the primitive direction (-b, a); order unspecified.
template <typename Fn>
void for_each_point_on_line(const LineKey& line, int n, Fn&& fn) {
    const long long a = line.a, b = line.b, c = line.c;
    if (b == 0) {  // vertical line a*x = c
        if (c % a == 0) {
            const long long x = c / a;
            if (0 <= x && x <= n)
                for (int y = 0; y <= n; ++y) fn(Point{static_cast<int>(x), y});
        }
        return;
    }
    if (a == 0) {  // horizontal line b*y = c
        if (c % b == 0) {
            const long long y = c / b;
            if (0 <= y && y <= n)
                for (int x = 0; x <= n; ++x) fn(Point{x, static_cast<int>(y)});
        }
        return;
    }
    // General solution of a*x + b*y = c over the integers: gcd(a, b) == 1 for
    // a normalized key, so (x, y) = (u*c - k*b, v*c + k*a).
    const auto e = detail::egcd(a, b);
    const long long x0 = e.u * c, y0 = e.v * c;
    const auto kx = detail::k_range(x0, -b, 0, n);
    const auto ky = detail::k_range(y0, a, 0, n);
    const long long klo = std::max(kx.lo, ky.lo), khi = std::min(kx.hi, ky.hi);
    for (long long k = klo; k <= khi; ++k)
        fn(Point{static_cast<int>(x0 - k * b), static_cast<int>(y0 + k * a)});
}

}  // namespace latcover
