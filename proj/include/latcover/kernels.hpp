#pragma once

#include <cstddef>
#include <cstdint>

// Word-array kernels behind CoverageMask and the solvers' inner loops:
// or-accumulation of line masks, uncovered-point counting and the all-covered
// test. Each operation has a scalar reference implementation plus SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected once at runtime from
// CPU features. LATTICE_COVER_SIMD={auto,scalar,avx2,neon} overrides the
// selection; tests run the scalar and dispatched paths against each other.

namespace latcover::kernels {

enum class Impl { scalar, avx2, neon };

const char* impl_name(Impl impl);

/// Implementation the dispatched entry points currently use.
Impl active();

/// Force an implementation (throws std::invalid_argument if unavailable).
void force(Impl impl);

bool available(Impl impl);

// Dispatched entry points.
void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::size_t popcount(const std::uint64_t* words, std::size_t nwords);
/// popcount(a & ~b): bits of `a` not present in `b`.
std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
/// True iff the first nbits bits are all set (tail bits beyond nbits ignored).
bool all_set(const std::uint64_t* words, std::size_t nbits);

namespace scalar {
void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::size_t popcount(const std::uint64_t* words, std::size_t nwords);
std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
bool all_set(const std::uint64_t* words, std::size_t nbits);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::size_t popcount(const std::uint64_t* words, std::size_t nwords);
std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
bool all_set(const std::uint64_t* words, std::size_t nbits);
}  // namespace avx2
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
namespace neon {
void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
std::size_t popcount(const std::uint64_t* words, std::size_t nwords);
std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
bool all_set(const std::uint64_t* words, std::size_t nbits);
}  // namespace neon
#endif

}  // namespace latcover::kernels
