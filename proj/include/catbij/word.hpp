#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catbij/errors.hpp"

namespace catbij {

/// Sorted set of 1-based positions (or values). Kept as a sorted vector so it
/// compares and hashes cheaply and prints in a stable order.
using PositionSet = std::vector<int>;

/// Sum of the elements of a position set.
inline long position_sum(const PositionSet& s)
{
    long total = 0;
    for (int v : s) total += v;
    return total;
}

/// {1..limit} minus s.
inline PositionSet complement_in(const PositionSet& s, int limit)
{
    PositionSet out;
    for (int i = 1; i <= limit; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

/// A finite 0/1 sequence addressed with 1-based positions.
class BinaryWord {
public:
    BinaryWord() = default;

    explicit BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
    {
        for (auto b : bits_)
            if (b > 1) throw InvalidInput("binary word entries must be 0 or 1");
    }

    static BinaryWord parse(std::string_view text)
    {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw InvalidInput("binary word must contain only '0' and '1': '" + std::string(text) + "'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BinaryWord(std::move(bits));
    }

    int size() const noexcept { return static_cast<int>(bits_.size()); }
    bool empty() const noexcept { return bits_.empty(); }

    /// Entry at 1-based position i.
    int at(int i) const { return bits_.at(static_cast<std::size_t>(i - 1)); }

    int ones() const noexcept { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::string str() const
    {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b)
    {
        std::vector<std::uint8_t> bits = a.bits_;
        bits.insert(bits.end(), b.bits_.begin(), b.bits_.end());
        return BinaryWord(std::move(bits));
    }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
    friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// True when no prefix of w has more 1s than 0s.
inline bool is_ballot(const BinaryWord& w) noexcept
{
    int height = 0;
    for (auto b : w.bits()) {
        height += b ? -1 : 1;
        if (height < 0) return false;
    }
    return true;
}

/// Positions i with x_i = 1, x_{i+1} = 0.
inline PositionSet descent_set(const BinaryWord& w)
{
    PositionSet out;
    for (int i = 1; i < w.size(); ++i)
        if (w.at(i) == 1 && w.at(i + 1) == 0) out.push_back(i);
    return out;
}

inline long maj(const BinaryWord& w) { return position_sum(descent_set(w)); }

inline int des(const BinaryWord& w) { return static_cast<int>(descent_set(w).size()); }

/// Positions i with x_i = 0, x_{i+1} = 1.
inline PositionSet pattern01_positions(const BinaryWord& w)
{
    PositionSet out;
    for (int i = 1; i < w.size(); ++i)
        if (w.at(i) == 0 && w.at(i + 1) == 1) out.push_back(i);
    return out;
}

/// Reverse, then exchange 0 and 1.
inline BinaryWord invert(const BinaryWord& w)
{
    std::vector<std::uint8_t> bits(w.bits().rbegin(), w.bits().rend());
    for (auto& b : bits) b ^= 1U;
    return BinaryWord(std::move(bits));
}

/// Ballot word of length 2n with exactly n ones (a Dyck path).
class CatalanWord {
public:
    CatalanWord() = default;

    explicit CatalanWord(BinaryWord w) : word_(std::move(w))
    {
        if (word_.size() % 2 != 0) throw InvalidInput("Catalan word must have even length: " + word_.str());
        if (word_.ones() * 2 != word_.size()) throw InvalidInput("Catalan word must have n ones: " + word_.str());
        if (!is_ballot(word_)) throw InvalidInput("Catalan word has a prefix with more 1s than 0s: " + word_.str());
    }

    static CatalanWord parse(std::string_view text) { return CatalanWord(BinaryWord::parse(text)); }

    const BinaryWord& word() const noexcept { return word_; }
    int half_length() const noexcept { return word_.size() / 2; }
    std::string str() const { return word_.str(); }

    friend bool operator==(const CatalanWord&, const CatalanWord&) = default;
    friend auto operator<=>(const CatalanWord&, const CatalanWord&) = default;

private:
    BinaryWord word_;
};

/// Inversion restricted to Catalan words; the result is again a Catalan word.
inline CatalanWord invert(const CatalanWord& w) { return CatalanWord(invert(w.word())); }

/// Ballot word of length n with any number of ones (at most n/2).
class HalfWord {
public:
    HalfWord() = default;

    explicit HalfWord(BinaryWord w) : word_(std::move(w))
    {
        if (!is_ballot(word_)) throw InvalidInput("half-word has a prefix with more 1s than 0s: " + word_.str());
    }

    static HalfWord parse(std::string_view text) { return HalfWord(BinaryWord::parse(text)); }

    const BinaryWord& word() const noexcept { return word_; }
    int size() const noexcept { return word_.size(); }
    int ones() const noexcept { return word_.ones(); }
    std::string str() const { return word_.str(); }

    friend bool operator==(const HalfWord&, const HalfWord&) = default;
    friend auto operator<=>(const HalfWord&, const HalfWord&) = default;

private:
    BinaryWord word_;
};

/// (n, j, P): half-words of length n with j ones whose 01-pattern set is exactly P.
struct FamilyKey {
    int n = 0;
    int j = 0;
    PositionSet patterns;

    void validate() const
    {
        if (n < 0 || j < 0) throw InvalidInput("family key: n and j must be non-negative");
        if (static_cast<int>(patterns.size()) > j) throw InvalidInput("family key: |P| must not exceed j");
        if (!std::is_sorted(patterns.begin(), patterns.end())
            || std::adjacent_find(patterns.begin(), patterns.end()) != patterns.end())
            throw InvalidInput("family key: pattern positions must be strictly increasing");
        for (int p : patterns)
            if (p < 1 || p > n - 1) throw InvalidInput("family key: pattern positions must lie in 1..n-1");
    }

    bool contains(const HalfWord& w) const
    {
        return w.size() == n && w.ones() == j && pattern01_positions(w.word()) == patterns;
    }

    friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
    friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;
};

/// w1 · invert(w2). Requires equal length and equal ones-count.
inline CatalanWord concat_pair(const HalfWord& w1, const HalfWord& w2)
{
    if (w1.size() != w2.size()) throw InvalidInput("concat_pair: half-words differ in length");
    if (w1.ones() != w2.ones()) throw InvalidInput("concat_pair: half-words differ in number of 1s");
    return CatalanWord(w1.word() + invert(w2.word()));
}

/// Inverse of concat_pair: (first n bits, invert(last n bits)).
inline std::pair<HalfWord, HalfWord> split_pair(const CatalanWord& w)
{
    const auto& bits = w.word().bits();
    const auto half = static_cast<std::ptrdiff_t>(bits.size() / 2);
    BinaryWord head(std::vector<std::uint8_t>(bits.begin(), bits.begin() + half));
    BinaryWord tail(std::vector<std::uint8_t>(bits.begin() + half, bits.end()));
    return {HalfWord(std::move(head)), HalfWord(invert(tail))};
}

namespace detail {

// Depth-first generation of ballot words of the given length in lexicographic
// order (0 before 1). `ones_total` caps the number of 1s; `exact` requires
// reaching it.
template <class Visit>
void ballot_words(int length, int ones_total, bool exact, Visit&& visit)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(length));
    auto rec = [&](auto&& self, int zeros, int ones) -> void {
        const int remaining = length - zeros - ones;
        if (remaining == 0) {
            if (!exact || ones == ones_total) visit(bits);
            return;
        }
        if (!exact || remaining > ones_total - ones) {
            bits.push_back(0);
            self(self, zeros + 1, ones);
            bits.pop_back();
        }
        if (ones < ones_total && ones < zeros) {
            bits.push_back(1);
            self(self, zeros, ones + 1);
            bits.pop_back();
        }
    };
    rec(rec, 0, 0);
}

} // namespace detail

/// All Catalan words of length 2n, lexicographic with 0 < 1.
inline std::vector<CatalanWord> enumerate_catalan(int n)
{
    if (n < 0) throw InvalidInput("enumerate_catalan: n must be non-negative");
    std::vector<CatalanWord> out;
    detail::ballot_words(2 * n, n, true, [&](const std::vector<std::uint8_t>& bits) {
        out.emplace_back(BinaryWord(bits));
    });
    return out;
}

/// All half-words of length n with exactly j ones, lexicographic.
inline std::vector<HalfWord> enumerate_halfwords(int n, int j)
{
    if (n < 0) throw InvalidInput("enumerate_halfwords: n must be non-negative");
    std::vector<HalfWord> out;
    if (j < 0 || 2 * j > n) return out;
    detail::ballot_words(n, j, true, [&](const std::vector<std::uint8_t>& bits) {
        out.emplace_back(BinaryWord(bits));
    });
    return out;
}

/// All half-words of length n, lexicographic.
inline std::vector<HalfWord> enumerate_halfwords(int n)
{
    if (n < 0) throw InvalidInput("enumerate_halfwords: n must be non-negative");
    std::vector<HalfWord> out;
    detail::ballot_words(n, n / 2, false, [&](const std::vector<std::uint8_t>& bits) {
        out.emplace_back(BinaryWord(bits));
    });
    return out;
}

/// Members of CW_P in lexicographic order. Between consecutive 01 anchors every
/// member is filled 1...10...0, so a member is fixed by its per-segment 1-counts.
inline std::vector<HalfWord> enumerate_family(const FamilyKey& key)
{
    key.validate();
    std::vector<HalfWord> out;
    for (auto& w : enumerate_halfwords(key.n, key.j))
        if (pattern01_positions(w.word()) == key.patterns) out.push_back(std::move(w));
    return out;
}

/// Number of 1s in each segment after a 01 anchor, anchors taken left to right.
/// Segment t covers positions anchor_t + 2 .. anchor_{t+1} - 1 (or n).
inline std::vector<int> segment_ones(const HalfWord& w)
{
    const auto anchors = pattern01_positions(w.word());
    std::vector<int> counts;
    counts.reserve(anchors.size());
    for (std::size_t t = 0; t < anchors.size(); ++t) {
        const int first = anchors[t] + 2;
        const int last = t + 1 < anchors.size() ? anchors[t + 1] - 1 : w.size();
        int c = 0;
        for (int i = first; i <= last; ++i) c += w.word().at(i);
        counts.push_back(c);
    }
    return counts;
}

} // namespace catbij
