#include "latcover/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace latcover::kernels {

namespace scalar {

void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] |= src[i];
}

std::size_t popcount(const std::uint64_t* words, std::size_t nwords) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(words[i]);
    return total;
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(a[i] & ~b[i]);
    return total;
}

bool all_set(const std::uint64_t* words, std::size_t nbits) {
    const std::size_t whole = nbits / 64;
    for (std::size_t i = 0; i < whole; ++i)
        if (words[i] != ~std::uint64_t{0}) return false;
    const std::size_t rem = nbits % 64;
    if (rem) {
        const std::uint64_t tail = (std::uint64_t{1} << rem) - 1;
        if ((words[whole] & tail) != tail) return false;
    }
    return true;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {

__attribute__((target("avx2"))) void or_inplace(std::uint64_t* dst, const std::uint64_t* src,
                                                std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] |= src[i];
}

// Nibble-LUT popcount of one 256-bit lane, accumulated as four 64-bit sums.
__attribute__((target("avx2"))) static inline __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

__attribute__((target("avx2"))) std::size_t popcount(const std::uint64_t* words,
                                                     std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(v));
    }
    std::uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i) total += std::popcount(words[i]);
    return total;
}

__attribute__((target("avx2"))) std::size_t andnot_popcount(const std::uint64_t* a,
                                                            const std::uint64_t* b,
                                                            std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_andnot_si256(vb, va)));
    }
    std::uint64_t lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < nwords; ++i) total += std::popcount(a[i] & ~b[i]);
    return total;
}

__attribute__((target("avx2"))) bool all_set(const std::uint64_t* words, std::size_t nbits) {
    const std::size_t whole = nbits / 64;
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= whole; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        if (!_mm256_testc_si256(v, ones)) return false;
    }
    for (; i < whole; ++i)
        if (words[i] != ~std::uint64_t{0}) return false;
    const std::size_t rem = nbits % 64;
    if (rem) {
        const std::uint64_t tail = (std::uint64_t{1} << rem) - 1;
        if ((words[whole] & tail) != tail) return false;
    }
    return true;
}

}  // namespace avx2
#endif  // x86_64

#if defined(__ARM_NEON) || defined(__aarch64__)
namespace neon {

void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        const uint64x2_t d = vld1q_u64(dst + i);
        const uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, vorrq_u64(d, s));
    }
    for (; i < nwords; ++i) dst[i] |= src[i];
}

std::size_t popcount(const std::uint64_t* words, std::size_t nwords) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        const uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(words + i));
        total += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < nwords; ++i) total += std::popcount(words[i]);
    return total;
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        const uint64x2_t va = vld1q_u64(a + i);
        const uint64x2_t vb = vld1q_u64(b + i);
        total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(vbicq_u64(va, vb))));
    }
    for (; i < nwords; ++i) total += std::popcount(a[i] & ~b[i]);
    return total;
}

bool all_set(const std::uint64_t* words, std::size_t nbits) {
    const std::size_t whole = nbits / 64;
    std::size_t i = 0;
    for (; i + 2 <= whole; i += 2) {
        const uint64x2_t v = vld1q_u64(words + i);
        if (vminvq_u32(vreinterpretq_u32_u64(v)) != 0xffffffffu) return false;
    }
    for (; i < whole; ++i)
        if (words[i] != ~std::uint64_t{0}) return false;
    const std::size_t rem = nbits % 64;
    if (rem) {
        const std::uint64_t tail = (std::uint64_t{1} << rem) - 1;
        if ((words[whole] & tail) != tail) return false;
    }
    return true;
}

}  // namespace neon
#endif  // ARM

namespace {

struct Vtable {
    void (*or_inplace)(std::uint64_t*, const std::uint64_t*, std::size_t);
    std::size_t (*popcount)(const std::uint64_t*, std::size_t);
    std::size_t (*andnot_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    bool (*all_set)(const std::uint64_t*, std::size_t);
    Impl impl;
};

constexpr Vtable kScalar{scalar::or_inplace, scalar::popcount, scalar::andnot_popcount,
                         scalar::all_set, Impl::scalar};

Vtable table_for(Impl impl) {
    switch (impl) {
#if defined(__x86_64__) || defined(_M_X64)
        case Impl::avx2:
            return {avx2::or_inplace, avx2::popcount, avx2::andnot_popcount, avx2::all_set,
                    Impl::avx2};
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
        case Impl::neon:
            return {neon::or_inplace, neon::popcount, neon::andnot_popcount, neon::all_set,
                    Impl::neon};
#endif
        default:
            return kScalar;
    }
}

Impl detect() {
    if (const char* env = std::getenv("LATTICE_COVER_SIMD")) {
        const std::string v(env);
        if (v == "scalar") return Impl::scalar;
        if (v == "avx2" && available(Impl::avx2)) return Impl::avx2;
        if (v == "neon" && available(Impl::neon)) return Impl::neon;
        // "auto" or unusable value: fall through to detection
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Impl::avx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    return Impl::neon;
#endif
    return Impl::scalar;
}

Vtable g_table = table_for(detect());

}  // namespace

bool available(Impl impl) {
    switch (impl) {
        case Impl::scalar:
            return true;
        case Impl::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Impl::neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const char* impl_name(Impl impl) {
    switch (impl) {
        case Impl::scalar:
            return "scalar";
        case Impl::avx2:
            return "avx2";
        case Impl::neon:
            return "neon";
    }
    return "?";
}

Impl active() { return g_table.impl; }

void force(Impl impl) {
    if (!available(impl))
        throw std::invalid_argument(std::string("kernel implementation unavailable: ") +
                                    impl_name(impl));
    g_table = table_for(impl);
}

void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    g_table.or_inplace(dst, src, nwords);
}

std::size_t popcount(const std::uint64_t* words, std::size_t nwords) {
    return g_table.popcount(words, nwords);
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    return g_table.andnot_popcount(a, b, nwords);
}

bool all_set(const std::uint64_t* words, std::size_t nbits) {
    return g_table.all_set(words, nbits);
}

}  // namespace latcover::kernels
