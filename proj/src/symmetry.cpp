#include "latcover/symmetry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latcover {

namespace {

// D4 presented as rot^k * transpose^m: each op is (k, m) with
// transpose * rot = rot^-1 * transpose.
struct RotFlip {
    int k;  // quarter turns
    int m;  // 0 or 1 applications of the main-diagonal transpose
};

constexpr RotFlip to_rotflip(SymmetryOp op) {
    switch (op) {
        case SymmetryOp::identity:  return {0, 0};
        case SymmetryOp::rot90:     return {1, 0};
        case SymmetryOp::rot180:    return {2, 0};
        case SymmetryOp::rot270:    return {3, 0};
        case SymmetryOp::mirror_d:  return {0, 1};
        case SymmetryOp::mirror_x:  return {1, 1};
        case SymmetryOp::mirror_dp: return {2, 1};
        case SymmetryOp::mirror_y:  return {3, 1};
    }
    return {0, 0};
}

constexpr SymmetryOp from_rotflip(RotFlip rf) {
    constexpr SymmetryOp rot[4] = {SymmetryOp::identity, SymmetryOp::rot90, SymmetryOp::rot180,
                                   SymmetryOp::rot270};
    constexpr SymmetryOp ref[4] = {SymmetryOp::mirror_d, SymmetryOp::mirror_x,
                                   SymmetryOp::mirror_dp, SymmetryOp::mirror_y};
    return rf.m == 0 ? rot[rf.k & 3] : ref[rf.k & 3];
}

}  // namespace

const char* symmetry_op_name(SymmetryOp op) {
    switch (op) {
        case SymmetryOp::identity:  return "identity";
        case SymmetryOp::rot90:     return "rot90";
        case SymmetryOp::rot180:    return "rot180";
        case SymmetryOp::rot270:    return "rot270";
        case SymmetryOp::mirror_x:  return "mirror_x";
        case SymmetryOp::mirror_y:  return "mirror_y";
        case SymmetryOp::mirror_d:  return "mirror_d";
        case SymmetryOp::mirror_dp: return "mirror_d'";
    }
    return "?";
}

SymmetryOp compose(SymmetryOp f, SymmetryOp g) {
    const RotFlip a = to_rotflip(f), b = to_rotflip(g);
    // rot^ak T^am rot^bk T^bm = rot^(ak + (-1)^am bk) T^(am+bm)
    const int k = ((a.k + (a.m ? -b.k : b.k)) % 4 + 4) % 4;
    return from_rotflip({k, (a.m + b.m) & 1});
}

Solution apply_symmetry(SymmetryOp op, const Solution& s) {
    std::vector<Point> image;
    image.reserve(s.vertices.size());
    for (Point p : s.vertices) image.push_back(apply(op, p, s.n));
    std::sort(image.begin(), image.end());
    return Solution{s.n, std::move(image)};
}

Solution canonical_form(const Solution& s) {
    Solution best = s;
    for (SymmetryOp op : kSymmetryOps) {
        if (op == SymmetryOp::identity) continue;
        Solution image = apply_symmetry(op, s);
        if (image.vertices < best.vertices) best = std::move(image);
    }
    return best;
}

int orbit_size(const Solution& s) {
    std::vector<std::vector<Point>> images;
    images.reserve(8);
    for (SymmetryOp op : kSymmetryOps) images.push_back(apply_symmetry(op, s).vertices);
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return static_cast<int>(images.size());
}

std::vector<CongruenceClass> classify(const std::vector<Solution>& solutions) {
    if (solutions.empty()) return {};
    const int n = solutions.front().n;
    std::map<std::vector<Point>, Solution> canon;
    for (const Solution& s : solutions) {
        if (s.n != n)
            throw std::invalid_argument("classify: mismatched lattice parameters " +
                                        std::to_string(n) + " vs " + std::to_string(s.n));
        Solution c = canonical_form(s);
        canon.try_emplace(c.vertices, std::move(c));
    }
    std::vector<CongruenceClass> classes;
    classes.reserve(canon.size());
    for (auto& [key, rep] : canon)
        classes.push_back({std::move(rep), 0});
    for (auto& cls : classes) cls.orbit_size = orbit_size(cls.representative);
    return classes;  // std::map iteration is already sorted by vertices
}

}  // namespace latcover
