#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "catbij/errors.hpp"
#include "catbij/word.hpp"

namespace catbij {

/// Permutation of 1..n in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v - 1)])
                throw InvalidInput("permutation must list each of 1..n exactly once");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// Accepts "7 5 6 2 1 4 3" and, for n <= 9, the compact "7562143".
    static Permutation parse(std::string_view text)
    {
        std::vector<int> v;
        if (text.find_first_of(" ,\t") == std::string_view::npos) {
            for (char c : text) {
                if (c < '1' || c > '9') throw InvalidInput("bad permutation: '" + std::string(text) + "'");
                v.push_back(c - '0');
            }
        } else {
            std::string s(text);
            std::replace(s.begin(), s.end(), ',', ' ');
            std::istringstream in(s);
            std::string tok;
            while (in >> tok) {
                std::size_t used = 0;
                int x = 0;
                try {
                    x = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size()) throw InvalidInput("bad permutation entry: '" + tok + "'");
                v.push_back(x);
            }
        }
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    /// Image of 1-based position i.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s.push_back(' ');
            s += std::to_string(images_[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

inline PositionSet descent_set(const Permutation& p)
{
    PositionSet out;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) out.push_back(i);
    return out;
}

/// Major index.
inline long maj(const Permutation& p) { return position_sum(descent_set(p)); }

inline Permutation inverse(const Permutation& p)
{
    std::vector<int> inv(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(inv));
}

inline bool is_involution(const Permutation& p)
{
    for (int i = 1; i <= p.size(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

/// Length of the longest strictly increasing subsequence (patience sorting,
/// O(n log n)).
inline int lis_length(const Permutation& p)
{
    std::vector<int> tops;
    for (int v : p.images()) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end()) tops.push_back(v);
        else *it = v;
    }
    return static_cast<int>(tops.size());
}

namespace detail {

template <class Keep>
std::vector<Permutation> filter_permutations(int n, Keep&& keep)
{
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p(v);
        if (keep(p)) out.push_back(std::move(p));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace detail

/// S_{n,i}: permutations whose longest increasing subsequence has length
/// exactly i, in lexicographic order.
inline std::vector<Permutation> enumerate_S_n_i(int n, int i)
{
    if (n < 1 || i < 1 || i > n) throw InvalidInput("enumerate_S_n_i: need 1 <= i <= n");
    return detail::filter_permutations(n, [i](const Permutation& p) { return lis_length(p) == i; });
}

/// Permutations with longest increasing subsequence at most k.
inline std::vector<Permutation> enumerate_lis_at_most(int n, int k)
{
    if (n < 1) throw InvalidInput("enumerate_lis_at_most: need n >= 1");
    return detail::filter_permutations(n, [k](const Permutation& p) { return lis_length(p) <= k; });
}

/// S_n(123), in lexicographic order.
inline std::vector<Permutation> enumerate_avoiding_123(int n) { return enumerate_lis_at_most(n, 2); }

} // namespace catbij
