#pragma once

#include <cstdint>
#include <vector>

#include "latcover/geometry.hpp"
#include "latcover/kernels.hpp"

namespace latcover {

/// Bitset over the (n+1)^2 lattice vertices. Bit index of (x, y) is
/// x*(n+1) + y; this layout is fixed so serialized masks stay comparable.
/// Tail bits of the final word are kept zero.
class CoverageMask {
public:
    explicit CoverageMask(int n)
        : n_(n), bits_(static_cast<std::size_t>(n + 1) * (n + 1)), words_((bits_ + 63) / 64) {}

    int n() const { return n_; }
    std::size_t bit_count() const { return bits_; }

    std::size_t index_of(Point p) const {
        return static_cast<std::size_t>(p.x) * (n_ + 1) + p.y;
    }

    void set(Point p) { set_index(index_of(p)); }
    void set_index(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(Point p) const { return test_index(index_of(p)); }
    bool test_index(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const { return kernels::popcount(words_.data(), words_.size()); }
    bool all() const { return kernels::all_set(words_.data(), bits_); }

    /// True iff every bit of *this is also set in other (same n).
    bool is_subset_of(const CoverageMask& other) const {
        return kernels::andnot_popcount(words_.data(), other.words_.data(), words_.size()) == 0;
    }

    CoverageMask& operator|=(const CoverageMask& other) {
        kernels::or_inplace(words_.data(), other.words_.data(), words_.size());
        return *this;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const CoverageMask&, const CoverageMask&) = default;

private:
    int n_;
    std::size_t bits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace latcover
