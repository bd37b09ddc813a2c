#include "circpat/kernels.hpp"

#if defined(CIRCPAT_HAVE_AVX2_KERNEL)

#include <immintrin.h>

namespace circpat::kernels {

// 32 window starts per iteration: one unaligned byte load per chain offset,
// signed byte compares ANDed into a survivor mask. Entry values stay far
// below 127, so epi8 compares are safe. Over-read past the last window is
// covered by the caller's kPad guarantee and masked off.
int count_chain_windows_avx2(const std::uint8_t* w, int nwin, const PatternChain& chain) {
    int total = 0;
    for (int base = 0; base < nwin; base += 32) {
        __m256i ok = _mm256_set1_epi8(-1);
        for (int k = 0; k + 1 < chain.m; ++k) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(
                w + base + chain.offsets[static_cast<std::size_t>(k)]));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(
                w + base + chain.offsets[static_cast<std::size_t>(k + 1)]));
            ok = _mm256_and_si256(ok, _mm256_cmpgt_epi8(b, a));
        }
        auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(ok));
        const int lanes = nwin - base;
        if (lanes < 32) mask &= (1u << lanes) - 1u;
        total += __builtin_popcount(mask);
    }
    return total;
}

}  // namespace circpat::kernels

#endif  // CIRCPAT_HAVE_AVX2_KERNEL
