#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "latcover/kernels.hpp"
#include "latcover/rng.hpp"

using namespace latcover;

namespace {

std::vector<std::uint64_t> random_words(Xoshiro256StarStar& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& word : w) word = rng.next();
    return w;
}

template <typename OrFn, typename PopFn, typename AndNotFn, typename AllSetFn>
void check_against_scalar(OrFn or_fn, PopFn pop_fn, AndNotFn andnot_fn, AllSetFn all_set_fn) {
    Xoshiro256StarStar rng(42);
    for (std::size_t nwords : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 33u, 193u}) {
        for (int rep = 0; rep < 8; ++rep) {
            const auto a = random_words(rng, nwords);
            const auto b = random_words(rng, nwords);

            auto expected = a;
            kernels::scalar::or_inplace(expected.data(), b.data(), nwords);
            auto got = a;
            or_fn(got.data(), b.data(), nwords);
            CHECK(got == expected);

            CHECK(pop_fn(a.data(), nwords) == kernels::scalar::popcount(a.data(), nwords));
            CHECK(andnot_fn(a.data(), b.data(), nwords) ==
                  kernels::scalar::andnot_popcount(a.data(), b.data(), nwords));

            if (nwords == 0) continue;
            // all_set over every bit length, on all-ones buffers with one bit
            // cleared somewhere.
            auto ones = std::vector<std::uint64_t>(nwords, ~std::uint64_t{0});
            for (std::size_t nbits : {std::size_t{1}, nwords * 64 - 63, nwords * 64 - 1,
                                      nwords * 64}) {
                CHECK(all_set_fn(ones.data(), nbits));
                const std::size_t hole = rng.below(nbits);
                ones[hole >> 6] &= ~(std::uint64_t{1} << (hole & 63));
                CHECK_FALSE(all_set_fn(ones.data(), nbits));
                ones[hole >> 6] |= std::uint64_t{1} << (hole & 63);
            }
            // Bits past nbits must not matter.
            if (nwords * 64 > 3) {
                auto padded = std::vector<std::uint64_t>(nwords, ~std::uint64_t{0});
                padded[nwords - 1] = (std::uint64_t{1} << 3) - 1;
                CHECK(all_set_fn(padded.data(), (nwords - 1) * 64 + 3));
            }
        }
    }
}

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
    check_against_scalar(kernels::or_inplace, kernels::popcount, kernels::andnot_popcount,
                         kernels::all_set);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels match the scalar reference") {
    if (!kernels::available(kernels::Impl::avx2)) return;
    check_against_scalar(kernels::avx2::or_inplace, kernels::avx2::popcount,
                         kernels::avx2::andnot_popcount, kernels::avx2::all_set);
}
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
TEST_CASE("neon kernels match the scalar reference") {
    if (!kernels::available(kernels::Impl::neon)) return;
    check_against_scalar(kernels::neon::or_inplace, kernels::neon::popcount,
                         kernels::neon::andnot_popcount, kernels::neon::all_set);
}
#endif

TEST_CASE("force() switches the active implementation and back") {
    const kernels::Impl before = kernels::active();
    kernels::force(kernels::Impl::scalar);
    CHECK(kernels::active() == kernels::Impl::scalar);
    std::uint64_t a[2] = {1, 2}, b[2] = {4, 8};
    kernels::or_inplace(a, b, 2);
    CHECK(a[0] == 5);
    CHECK(a[1] == 10);
    kernels::force(before);
    CHECK(kernels::active() == before);
}

TEST_CASE("popcount counts bits") {
    std::uint64_t w[3] = {0, ~std::uint64_t{0}, 0x5555555555555555ull};
    CHECK(kernels::popcount(w, 3) == 64 + 32);
    CHECK(kernels::andnot_popcount(w + 1, w + 2, 1) == 32);
}
