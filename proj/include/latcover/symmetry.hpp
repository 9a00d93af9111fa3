#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "latcover/geometry.hpp"

namespace latcover {

/// The eight symmetries of the square (dihedral group D4, point group 4mm)
/// acting on lattice coordinates of [0,n]^2. Mirror axes: mirror_x flips
/// along the horizontal mid axis (negates y), mirror_y along the vertical,
/// mirror_d is the main-diagonal transpose, mirror_dp the anti-diagonal map.
enum class SymmetryOp : std::uint8_t {
    identity,
    rot90,
    rot180,
    rot270,
    mirror_x,
    mirror_y,
    mirror_d,
    mirror_dp,
};

inline constexpr std::array<SymmetryOp, 8> kSymmetryOps = {
    SymmetryOp::identity, SymmetryOp::rot90,    SymmetryOp::rot180,   SymmetryOp::rot270,
    SymmetryOp::mirror_x, SymmetryOp::mirror_y, SymmetryOp::mirror_d, SymmetryOp::mirror_dp,
};

const char* symmetry_op_name(SymmetryOp op);

constexpr Point apply(SymmetryOp op, Point p, int n) {
    switch (op) {
        case SymmetryOp::identity:  return p;
        case SymmetryOp::rot90:     return {p.y, n - p.x};
        case SymmetryOp::rot180:    return {n - p.x, n - p.y};
        case SymmetryOp::rot270:    return {n - p.y, p.x};
        case SymmetryOp::mirror_x:  return {p.x, n - p.y};
        case SymmetryOp::mirror_y:  return {n - p.x, p.y};
        case SymmetryOp::mirror_d:  return {p.y, p.x};
        case SymmetryOp::mirror_dp: return {n - p.y, n - p.x};
    }
    return p;
}

/// compose(f, g) acts as f after g: apply(compose(f,g), p, n) ==
/// apply(f, apply(g, p, n), n). The group is closed; the table matches D4.
SymmetryOp compose(SymmetryOp f, SymmetryOp g);

/// Image of a vertex set under one symmetry, re-sorted. Coverage status is
/// preserved: lines map to lines.
Solution apply_symmetry(SymmetryOp op, const Solution& s);

/// Lexicographically smallest sorted vertex list among the 8 images.
/// Idempotent and constant on orbits; the dedup key for congruence classes.
Solution canonical_form(const Solution& s);

/// Number of distinct images under the 8 ops; 8 / |stabilizer|, so one of
/// {1, 2, 4, 8}.
int orbit_size(const Solution& s);

/// One congruence class of solutions: the canonical representative and how
/// many distinct images its orbit has.
struct CongruenceClass {
    Solution representative;
    int orbit_size = 0;

    friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
};

/// Groups solutions by canonical form; one class per distinct form, sorted by
/// representative. Duplicate vertex sets in the input collapse. Throws
/// std::invalid_argument when inputs mix lattice parameters.
std::vector<CongruenceClass> classify(const std::vector<Solution>& solutions);

}  // namespace latcover
