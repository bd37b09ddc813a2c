#include "circpat/word.hpp"

#include "circpat/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

namespace circpat {

namespace {

void require_standard_pattern(const Word& sigma) {
    if (sigma.empty() || !sigma.is_standard())
        throw InvalidPatternError("pattern must be a standard permutation, got \"" +
                                  sigma.str() + "\"");
}

// Window positions in value order: chain[k] is where the (k+1)-st smallest
// pattern entry sits. A window of distinct values matches the pattern iff
// its entries read in chain order strictly increase.
std::vector<int> value_order_chain(const Word& sigma) {
    const int m = static_cast<int>(sigma.size());
    std::vector<int> chain(static_cast<std::size_t>(m));
    std::iota(chain.begin(), chain.end(), 0);
    std::sort(chain.begin(), chain.end(),
              [&](int a, int b) { return sigma[static_cast<std::size_t>(a)] <
                                         sigma[static_cast<std::size_t>(b)]; });
    return chain;
}

bool window_matches(const std::vector<std::int64_t>& w, std::size_t start,
                    std::size_t len, const std::vector<int>& chain) {
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const std::int64_t a = w[(start + static_cast<std::size_t>(chain[k])) % len];
        const std::int64_t b = w[(start + static_cast<std::size_t>(chain[k + 1])) % len];
        if (!(a < b)) return false;
    }
    return true;
}

}  // namespace

Word::Word(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    std::unordered_set<std::int64_t> seen;
    for (std::int64_t e : entries_) {
        if (e <= 0) throw ParseError("word entries must be positive, got " + std::to_string(e));
        if (!seen.insert(e).second)
            throw ParseError("word entries must be distinct, repeated " + std::to_string(e));
    }
}

Word Word::parse(const std::string& text) {
    if (text.empty()) return Word{};
    std::vector<std::int64_t> entries;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t next = std::min(text.find(',', pos), text.size());
            const std::string tok = text.substr(pos, next - pos);
            if (tok.empty()) throw ParseError("empty entry in word \"" + text + "\"");
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("bad entry \"" + tok + "\" in word \"" + text + "\"");
            entries.push_back(std::stoll(tok));
            pos = next + 1;
            if (next == text.size()) break;
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad character '" + std::string(1, c) + "' in word \"" +
                                 text + "\" (use comma form for entries > 9)");
            entries.push_back(c - '0');
        }
    }
    return Word(std::move(entries));
}

bool Word::is_standard() const {
    const auto n = static_cast<std::int64_t>(entries_.size());
    for (std::int64_t e : entries_)
        if (e > n) return false;
    return true;  // distinct positive entries <= n are exactly {1..n}
}

std::string Word::str() const {
    const bool digits =
        std::all_of(entries_.begin(), entries_.end(), [](std::int64_t e) { return e <= 9; });
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!digits && i > 0) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out;
}

CircularClass::CircularClass(const Word& representative) {
    if (representative.empty()) return;
    const auto& e = representative.entries();
    const std::size_t k = static_cast<std::size_t>(
        std::min_element(e.begin(), e.end()) - e.begin());
    std::vector<std::int64_t> rot(e.begin() + static_cast<std::ptrdiff_t>(k), e.end());
    rot.insert(rot.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
    canonical_ = Word(std::move(rot));
}

std::vector<Word> CircularClass::rotations() const {
    std::vector<Word> out;
    const auto& e = canonical_.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
        std::vector<std::int64_t> rot(e.begin() + static_cast<std::ptrdiff_t>(k), e.end());
        rot.insert(rot.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(k));
        out.emplace_back(std::move(rot));
    }
    if (out.empty()) out.emplace_back();
    return out;
}

std::string CircularClass::str() const { return "[" + canonical_.str() + "]"; }

Word standardize(const Word& w) {
    const auto& e = w.entries();
    std::vector<std::size_t> idx(e.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    std::vector<std::int64_t> out(e.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<std::int64_t>(r) + 1;
    return Word(std::move(out));
}

Word reversed(const Word& w) {
    std::vector<std::int64_t> e(w.entries().rbegin(), w.entries().rend());
    return Word(std::move(e));
}

Word complemented(const Word& w) {
    if (!w.is_standard())
        throw InvalidPatternError("complement requires a standard word, got \"" + w.str() + "\"");
    const auto n = static_cast<std::int64_t>(w.size());
    std::vector<std::int64_t> e;
    e.reserve(w.size());
    for (std::int64_t x : w.entries()) e.push_back(n + 1 - x);
    return Word(std::move(e));
}

std::set<Word> symmetry_orbit(const Word& sigma) {
    require_standard_pattern(sigma);
    std::set<Word> orbit{sigma, reversed(sigma), complemented(sigma),
                         complemented(reversed(sigma))};
    return orbit;
}

OccurrenceCount occurrences_linear(const Word& sigma, const Word& w) {
    require_standard_pattern(sigma);
    const auto chain = value_order_chain(sigma);
    const std::size_t m = sigma.size(), n = w.size();
    OccurrenceCount out;
    if (n < m) return out;
    for (std::size_t i = 0; i + m <= n; ++i) {
        if (window_matches(w.entries(), i, n, chain)) {
            ++out.count;
            out.positions.push_back(static_cast<int>(i));
        }
    }
    return out;
}

OccurrenceCount occurrences_circular(const Word& sigma, const CircularClass& c) {
    require_standard_pattern(sigma);
    const auto chain = value_order_chain(sigma);
    const std::size_t m = sigma.size(), n = c.size();
    OccurrenceCount out;
    if (n < m) return out;  // a cyclic window needs m distinct positions
    for (std::size_t i = 0; i < n; ++i) {
        if (window_matches(c.canonical().entries(), i, n, chain)) {
            ++out.count;
            out.positions.push_back(static_cast<int>(i));
        }
    }
    return out;
}

Word window_at(const Word& w, int i, int m) {
    std::vector<std::int64_t> e;
    e.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        e.push_back(w[(static_cast<std::size_t>(i + k)) % w.size()]);
    return Word(std::move(e));
}

std::vector<Word> lr_factorize(const Word& w) {
    std::vector<Word> factors;
    const auto& e = w.entries();
    std::size_t start = 0;
    std::int64_t running_min = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i == 0 || e[i] < running_min) {
            if (i > 0)
                factors.emplace_back(std::vector<std::int64_t>(
                    e.begin() + static_cast<std::ptrdiff_t>(start),
                    e.begin() + static_cast<std::ptrdiff_t>(i)));
            start = i;
            running_min = e[i];
        }
    }
    if (!e.empty())
        factors.emplace_back(std::vector<std::int64_t>(
            e.begin() + static_cast<std::ptrdiff_t>(start), e.end()));
    return factors;
}

std::set<CircularClass> phi(const Word& pi) {
    if (!pi.is_standard())
        throw InvalidPatternError("phi requires a standard permutation, got \"" + pi.str() + "\"");
    std::set<CircularClass> classes;
    for (const Word& f : lr_factorize(pi)) classes.emplace(f);
    return classes;
}

Word phi_inverse(const std::set<CircularClass>& classes) {
    std::vector<Word> reps;
    std::unordered_set<std::int64_t> seen;
    for (const CircularClass& c : classes) {
        for (std::int64_t e : c.canonical().entries())
            if (!seen.insert(e).second)
                throw Error("phi_inverse: entry " + std::to_string(e) +
                            " appears in more than one class");
        reps.push_back(c.canonical());  // canonical rotation starts at the minimum
    }
    std::sort(reps.begin(), reps.end(),
              [](const Word& a, const Word& b) { return a[0] > b[0]; });
    std::vector<std::int64_t> out;
    for (const Word& r : reps)
        out.insert(out.end(), r.entries().begin(), r.entries().end());
    return Word(std::move(out));
}

bool is_nonoverlapping(const Word& sigma) {
    require_standard_pattern(sigma);
    const int m = static_cast<int>(sigma.size());
    if (m < 2) throw InvalidPatternError("overlap classification needs a pattern of length >= 2");
    const int n = 2 * m - 2;
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    const auto chain = value_order_chain(sigma);
    do {
        int hits = 0;
        for (std::size_t i = 0; i + static_cast<std::size_t>(m) <= perm.size(); ++i)
            if (window_matches(perm, i, perm.size(), chain) && ++hits >= 2) break;
        if (hits >= 2) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace circpat
