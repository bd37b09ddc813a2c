#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace circpat {

// A linear arrangement of distinct positive integers. Patterns and
// permutations are Words whose entry set is exactly {1..n} (standard);
// factorization factors are Words over arbitrary value sets.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::int64_t> entries);  // validates

    // "132" (single digits) or "1,12,5,3" (comma form).
    static Word parse(const std::string& text);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    // Entry set is exactly {1..n}.
    bool is_standard() const;

    bool operator==(const Word& o) const = default;
    auto operator<=>(const Word& o) const = default;

    // Digit string when all entries are <= 9, comma-separated otherwise.
    std::string str() const;

private:
    std::vector<std::int64_t> entries_;
};

// Equivalence class of a Word under rotation, keyed by the canonical
// rotation (the one starting at the minimum entry).
class CircularClass {
public:
    CircularClass() = default;
    explicit CircularClass(const Word& representative);

    const Word& canonical() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }
    std::vector<Word> rotations() const;

    bool operator==(const CircularClass& o) const = default;
    auto operator<=>(const CircularClass& o) const = default;

    std::string str() const;  // "[14253]"

private:
    Word canonical_;
};

struct OccurrenceCount {
    long count = 0;
    // 0-based window start indices; circular positions refer to the
    // canonical representative.
    std::vector<int> positions;
};

// Unique standard permutation order-isomorphic to w (rank replacement).
Word standardize(const Word& w);

Word reversed(const Word& w);
// Value complement sigma_i -> m+1-sigma_i; requires a standard word.
Word complemented(const Word& w);

// {sigma, sigma^r, sigma^c, sigma^rc}; closed under both maps.
std::set<Word> symmetry_orbit(const Word& sigma);

// Consecutive-window occurrences of the standard pattern sigma in w.
OccurrenceCount occurrences_linear(const Word& sigma, const Word& w);
// Cyclic windows (wrap-around allowed); 0 when the class is shorter than
// the pattern. Independent of the representative.
OccurrenceCount occurrences_circular(const Word& sigma, const CircularClass& c);

// The length-m window of w starting at 0-based position i, wrapping around
// the end if needed.
Word window_at(const Word& w, int i, int m);

// Split before every left-right minimum; factors' first entries strictly
// decrease and concatenation restores the input.
std::vector<Word> lr_factorize(const Word& w);

// Wraps each left-right-minima factor into its circular class.
std::set<CircularClass> phi(const Word& pi);
// Rotate each class to start at its minimum, concatenate by decreasing
// first entry. Throws on overlapping entry sets.
Word phi_inverse(const std::set<CircularClass>& classes);

// True iff no permutation of length 2m-2 holds two occurrences of sigma
// (exhaustive check).
bool is_nonoverlapping(const Word& sigma);

}  // namespace circpat
