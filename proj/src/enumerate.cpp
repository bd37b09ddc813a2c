#include "circpat/enumerate.hpp"

#include "circpat/errors.hpp"
#include "circpat/kernels.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstring>
#include <numeric>
#include <thread>

namespace circpat {

namespace {

using kernels::kMaxKernelLength;
using kernels::kPad;
using kernels::PatternChain;

constexpr std::size_t kBufSize = 2 * kMaxKernelLength + kPad;

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void check_size(const Word& sigma, int n, const EnumOptions& opts) {
    if (!sigma.is_standard() || sigma.empty())
        throw InvalidPatternError("pattern must be a standard permutation, got \"" +
                                  sigma.str() + "\"");
    if (n < 0) throw Error("negative enumeration size");
    if (n > opts.n_cap)
        throw ResourceLimitError("size " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(opts.n_cap) + " (raise the cap to override)");
    if (n > kMaxKernelLength)
        throw ResourceLimitError("enumeration supports sizes up to " +
                                 std::to_string(kMaxKernelLength));
}

// An enumeration block pins the first free positions to a fixed value tuple;
// workers stream permutations of the remaining suffix. Partial distributions
// merge by addition, so the result is independent of scheduling.
struct Block {
    std::array<std::uint8_t, 2> vals{};
    int len = 0;
};

std::vector<Block> make_blocks(const std::vector<std::uint8_t>& values) {
    const int free = static_cast<int>(values.size());
    std::vector<Block> blocks;
    if (free >= 4) {
        for (std::uint8_t a : values)
            for (std::uint8_t b : values)
                if (a != b) blocks.push_back(Block{{a, b}, 2});
    } else {
        blocks.push_back(Block{});
    }
    return blocks;
}

// Counts u-exponent frequencies for every arrangement of `values` placed
// after `fixed` pinned entries. `wrap` appends the first m-1 entries so the
// kernel sees cyclic windows.
void enumerate_block(const Block& block, const std::vector<std::uint8_t>& values,
                     const std::vector<std::uint8_t>& fixed, int n, int nwin, bool wrap,
                     const PatternChain& chain, kernels::CountFn kernel,
                     std::vector<std::uint64_t>& acc) {
    std::array<std::uint8_t, kBufSize> buf{};
    std::size_t pos = 0;
    for (std::uint8_t v : fixed) buf[pos++] = v;
    for (int i = 0; i < block.len; ++i) buf[pos++] = block.vals[static_cast<std::size_t>(i)];

    std::vector<std::uint8_t> suffix;
    suffix.reserve(values.size());
    for (std::uint8_t v : values)
        if (std::find(block.vals.begin(), block.vals.begin() + block.len, v) ==
            block.vals.begin() + block.len)
            suffix.push_back(v);
    std::sort(suffix.begin(), suffix.end());

    const int wrap_len = wrap ? chain.m - 1 : 0;
    do {
        if (!suffix.empty()) std::memcpy(buf.data() + pos, suffix.data(), suffix.size());
        if (wrap_len > 0)
            std::memcpy(buf.data() + n, buf.data(), static_cast<std::size_t>(wrap_len));
        const int occ = kernel(buf.data(), nwin, chain);
        ++acc[static_cast<std::size_t>(occ)];
    } while (std::next_permutation(suffix.begin(), suffix.end()));
}

UPoly distribution(const Word& sigma, int n, bool circular, const EnumOptions& opts) {
    check_size(sigma, n, opts);
    const int m = static_cast<int>(sigma.size());

    // Too short to contain the pattern: every object counts with exponent 0.
    if (n < m) {
        const BigInt total = circular ? (n == 0 ? BigInt(1) : factorial(n - 1)) : factorial(n);
        return UPoly(Rational(total));
    }

    const PatternChain chain = PatternChain::from_pattern(sigma);
    const kernels::CountFn kernel = kernels::active_kernel();
    const int nwin = circular ? n : n - m + 1;

    std::vector<std::uint8_t> fixed;
    std::vector<std::uint8_t> values;
    if (circular) fixed.push_back(1);
    for (int v = circular ? 2 : 1; v <= n; ++v)
        values.push_back(static_cast<std::uint8_t>(v));

    const std::vector<Block> blocks = make_blocks(values);
    const int workers = std::min<int>(effective_jobs(opts.jobs),
                                      static_cast<int>(blocks.size()));

    std::vector<std::vector<std::uint64_t>> partials(
        static_cast<std::size_t>(workers),
        std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    std::atomic<std::size_t> next{0};
    auto run = [&](int wi) {
        auto& acc = partials[static_cast<std::size_t>(wi)];
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= blocks.size()) break;
            enumerate_block(blocks[b], values, fixed, n, nwin, circular, chain, kernel, acc);
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(run, wi);
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& p : partials)
        for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += p[k];

    std::vector<Rational> coeffs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) coeffs[k] = counts[k];
    return UPoly(std::move(coeffs));
}

}  // namespace

UPoly linear_distribution(const Word& sigma, int n, const EnumOptions& opts) {
    return distribution(sigma, n, false, opts);
}

UPoly circular_distribution(const Word& sigma, int n, const EnumOptions& opts) {
    return distribution(sigma, n, true, opts);
}

std::vector<BigInt> avoidance_sequence(const Word& sigma, int n_max, const EnumOptions& opts) {
    std::vector<BigInt> seq;
    seq.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const Rational c = circular_distribution(sigma, n, opts).coeff(0);
        seq.push_back(numerator(c));
    }
    return seq;
}

DistributionTable distribution_table(const Word& sigma, DistributionKind kind, int n_from,
                                     int n_to, const EnumOptions& opts) {
    DistributionTable t;
    t.pattern = sigma;
    t.kind = kind;
    for (int n = n_from; n <= n_to; ++n)
        t.rows[n] = kind == DistributionKind::Linear ? linear_distribution(sigma, n, opts)
                                                     : circular_distribution(sigma, n, opts);
    return t;
}

}  // namespace circpat
