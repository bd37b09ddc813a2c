#pragma once

#include "circpat/upoly.hpp"
#include "circpat/word.hpp"

#include <map>
#include <vector>

namespace circpat {

// Exhaustive enumeration keeps a deliberately small default ceiling;
// callers opt into larger sizes explicitly.
inline constexpr int kDefaultEnumCap = 10;

struct EnumOptions {
    int jobs = 0;                 // <= 0 picks hardware concurrency
    int n_cap = kDefaultEnumCap;  // sizes beyond this raise ResourceLimitError
};

enum class DistributionKind { Linear, Circular };

// Occurrence-distribution polynomial over all n! linear permutations:
// the u^k coefficient counts permutations with exactly k occurrences.
UPoly linear_distribution(const Word& sigma, int n, const EnumOptions& opts = {});

// Same over the (n-1)! circular classes, enumerated directly through their
// canonical representatives (entry 1 pinned to the front).
UPoly circular_distribution(const Word& sigma, int n, const EnumOptions& opts = {});

// Constant terms of the circular rows: entry n counts the classes of size n
// with no occurrence at all.
std::vector<BigInt> avoidance_sequence(const Word& sigma, int n_max,
                                       const EnumOptions& opts = {});

struct DistributionTable {
    Word pattern;
    DistributionKind kind = DistributionKind::Linear;
    std::map<int, UPoly> rows;
};

DistributionTable distribution_table(const Word& sigma, DistributionKind kind,
                                     int n_from, int n_to, const EnumOptions& opts = {});

}  // namespace circpat
