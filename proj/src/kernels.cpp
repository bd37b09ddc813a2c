#include "circpat/kernels.hpp"

#include "circpat/errors.hpp"

#include <algorithm>
#include <numeric>

namespace circpat::kernels {

PatternChain PatternChain::from_pattern(const Word& sigma) {
    if (sigma.empty() || !sigma.is_standard())
        throw InvalidPatternError("pattern must be a standard permutation, got \"" +
                                  sigma.str() + "\"");
    if (sigma.size() > kMaxKernelLength)
        throw ResourceLimitError("kernel patterns are limited to length " +
                                 std::to_string(kMaxKernelLength));
    PatternChain c;
    c.m = static_cast<int>(sigma.size());
    std::array<int, kMaxKernelLength> order{};
    std::iota(order.begin(), order.begin() + c.m, 0);
    std::sort(order.begin(), order.begin() + c.m, [&](int a, int b) {
        return sigma[static_cast<std::size_t>(a)] < sigma[static_cast<std::size_t>(b)];
    });
    for (int k = 0; k < c.m; ++k)
        c.offsets[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(order[static_cast<std::size_t>(k)]);
    return c;
}

int count_chain_windows_scalar(const std::uint8_t* w, int nwin, const PatternChain& chain) {
    int total = 0;
    for (int i = 0; i < nwin; ++i) {
        bool ok = true;
        for (int k = 0; k + 1 < chain.m; ++k) {
            if (w[i + chain.offsets[static_cast<std::size_t>(k)]] >=
                w[i + chain.offsets[static_cast<std::size_t>(k + 1)]]) {
                ok = false;
                break;
            }
        }
        total += ok ? 1 : 0;
    }
    return total;
}

namespace {

CountFn detect() {
#if defined(CIRCPAT_HAVE_AVX2_KERNEL)
    if (__builtin_cpu_supports("avx2")) return count_chain_windows_avx2;
#endif
#if defined(CIRCPAT_HAVE_NEON_KERNEL)
    return count_chain_windows_neon;
#endif
    return count_chain_windows_scalar;
}

}  // namespace

CountFn active_kernel() {
    static const CountFn fn = detect();
    return fn;
}

std::string active_kernel_name() {
    const CountFn fn = active_kernel();
#if defined(CIRCPAT_HAVE_AVX2_KERNEL)
    if (fn == count_chain_windows_avx2) return "avx2";
#endif
#if defined(CIRCPAT_HAVE_NEON_KERNEL)
    if (fn == count_chain_windows_neon) return "neon";
#endif
    return "scalar";
}

}  // namespace circpat::kernels
