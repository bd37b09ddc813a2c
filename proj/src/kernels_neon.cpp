#include "circpat/kernels.hpp"

#if defined(CIRCPAT_HAVE_NEON_KERNEL)

#include <arm_neon.h>

namespace circpat::kernels {

// 16 window starts per iteration, mirroring the AVX2 variant: unsigned byte
// compares ANDed into a survivor mask, tail lanes zeroed via an index table.
int count_chain_windows_neon(const std::uint8_t* w, int nwin, const PatternChain& chain) {
    static const std::uint8_t lane_index[16] = {0, 1, 2,  3,  4,  5,  6,  7,
                                                8, 9, 10, 11, 12, 13, 14, 15};
    const uint8x16_t idx = vld1q_u8(lane_index);
    int total = 0;
    for (int base = 0; base < nwin; base += 16) {
        uint8x16_t ok = vdupq_n_u8(0xFF);
        for (int k = 0; k + 1 < chain.m; ++k) {
            const uint8x16_t a = vld1q_u8(w + base + chain.offsets[static_cast<std::size_t>(k)]);
            const uint8x16_t b =
                vld1q_u8(w + base + chain.offsets[static_cast<std::size_t>(k + 1)]);
            ok = vandq_u8(ok, vcltq_u8(a, b));
        }
        const int lanes = nwin - base < 16 ? nwin - base : 16;
        const uint8x16_t live = vcltq_u8(idx, vdupq_n_u8(static_cast<std::uint8_t>(lanes)));
        const uint8x16_t ones = vandq_u8(vandq_u8(ok, live), vdupq_n_u8(1));
        total += vaddvq_u8(ones);
    }
    return total;
}

}  // namespace circpat::kernels

#endif  // CIRCPAT_HAVE_NEON_KERNEL
