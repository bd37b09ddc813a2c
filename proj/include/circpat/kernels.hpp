#pragma once

#include "circpat/word.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace circpat::kernels {

// Kernel buffers must stay readable this many bytes past the last window
// element; lanes beyond the window count are masked off, padding values
// never affect the result.
inline constexpr int kPad = 32;
inline constexpr int kMaxKernelLength = 16;

// Window offsets of a pattern's entries in increasing value order. A window
// of distinct bytes is order-isomorphic to the pattern iff reading it at
// these offsets gives a strictly increasing sequence (m-1 comparisons).
struct PatternChain {
    int m = 0;
    std::array<std::uint8_t, kMaxKernelLength> offsets{};

    static PatternChain from_pattern(const Word& sigma);
};

// Counts window starts i in [0, nwin) with
//   w[i+offsets[0]] < w[i+offsets[1]] < ... < w[i+offsets[m-1]].
using CountFn = int (*)(const std::uint8_t* w, int nwin, const PatternChain& chain);

int count_chain_windows_scalar(const std::uint8_t* w, int nwin, const PatternChain& chain);

#if defined(CIRCPAT_HAVE_AVX2_KERNEL)
int count_chain_windows_avx2(const std::uint8_t* w, int nwin, const PatternChain& chain);
#endif
#if defined(CIRCPAT_HAVE_NEON_KERNEL)
int count_chain_windows_neon(const std::uint8_t* w, int nwin, const PatternChain& chain);
#endif

// Variant picked once at startup from CPU capabilities.
CountFn active_kernel();
std::string active_kernel_name();

}  // namespace circpat::kernels
