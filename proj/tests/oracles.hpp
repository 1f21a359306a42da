#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library's enumeration or arithmetic code paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Bits = std::vector<int>;
using Poly = std::map<long, long long>; // exponent -> coefficient, zeros dropped

inline std::string str(const Bits& b)
{
    std::string s;
    for (int x : b) s.push_back(static_cast<char>('0' + x));
    return s;
}

/// All 0/1 sequences of length n, lexicographic.
inline std::vector<Bits> all_words(int n)
{
    std::vector<Bits> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Bits b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = static_cast<int>((m >> (n - 1 - i)) & 1U);
        out.push_back(b);
    }
    return out;
}

inline bool prefix_ok(const Bits& b)
{
    int zeros = 0, ones = 0;
    for (int x : b) {
        (x ? ones : zeros)++;
        if (ones > zeros) return false;
    }
    return true;
}

inline int count_ones(const Bits& b) { return static_cast<int>(std::count(b.begin(), b.end(), 1)); }

inline std::vector<Bits> catalan_words(int n)
{
    std::vector<Bits> out;
    for (auto& b : all_words(2 * n))
        if (prefix_ok(b) && count_ones(b) == n) out.push_back(b);
    return out;
}

inline std::vector<Bits> half_words(int n, int j)
{
    std::vector<Bits> out;
    for (auto& b : all_words(n))
        if (prefix_ok(b) && count_ones(b) == j) out.push_back(b);
    return out;
}

inline long word_maj(const Bits& b)
{
    long s = 0;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] == 1 && b[i + 1] == 0) s += static_cast<long>(i + 1);
    return s;
}

inline Bits word_inverse(const Bits& b)
{
    Bits r(b.rbegin(), b.rend());
    for (int& x : r) x = 1 - x;
    return r;
}

inline std::vector<int> pattern01(const Bits& b)
{
    std::vector<int> s;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i] == 0 && b[i + 1] == 1) s.push_back(static_cast<int>(i + 1));
    return s;
}

/// C_0 = 1, C_{n+1} = sum C_i C_{n-i}.
inline std::vector<long long> catalan_numbers(int upto)
{
    std::vector<long long> c(static_cast<std::size_t>(upto + 1), 0);
    c[0] = 1;
    for (int m = 0; m < upto; ++m)
        for (int i = 0; i <= m; ++i) c[static_cast<std::size_t>(m + 1)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
    return c;
}

/// Longest increasing subsequence by trying every subset of positions.
inline int lis_exhaustive(const std::vector<int>& p)
{
    const int n = static_cast<int>(p.size());
    int best = 0;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        int last = 0, len = 0;
        bool inc = true;
        for (int i = 0; i < n && inc; ++i)
            if (m & (1U << i)) {
                if (p[static_cast<std::size_t>(i)] <= last) inc = false;
                last = p[static_cast<std::size_t>(i)];
                ++len;
            }
        if (inc) best = std::max(best, len);
    }
    return best;
}

inline long perm_maj(const std::vector<int>& p)
{
    long s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) s += static_cast<long>(i + 1);
    return s;
}

inline std::vector<int> perm_inverse(const std::vector<int>& p)
{
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i + 1);
    return q;
}

inline std::vector<std::vector<int>> all_perms(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Two-column standard tableaux of n entries with j in the right column, found
/// by placing every permutation of 1..n into the shape and keeping the
/// standard fillings. Rows bottom first.
inline std::vector<std::vector<std::vector<int>>> two_col_tableaux(int n, int j)
{
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& p : all_perms(n)) {
        // left column gets p[0..n-j-1], right column gets p[n-j..]
        std::vector<int> left(p.begin(), p.begin() + (n - j));
        std::vector<int> right(p.begin() + (n - j), p.end());
        bool ok = std::is_sorted(left.begin(), left.end()) && std::is_sorted(right.begin(), right.end());
        for (int r = 0; r < j && ok; ++r) ok = left[static_cast<std::size_t>(r)] < right[static_cast<std::size_t>(r)];
        if (!ok) continue;
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < n - j; ++r) {
            if (r < j) rows.push_back({left[static_cast<std::size_t>(r)], right[static_cast<std::size_t>(r)]});
            else rows.push_back({left[static_cast<std::size_t>(r)]});
        }
        out.push_back(rows);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> tableau_descents(const std::vector<std::vector<int>>& rows, int n)
{
    std::vector<int> row_of(static_cast<std::size_t>(n + 1));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int v : rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
    std::vector<int> d;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) d.push_back(i);
    return d;
}

inline void add(Poly& p, long e, long long c)
{
    p[e] += c;
    if (p[e] == 0) p.erase(e);
}

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add(out, ea + eb, ca * cb);
    return out;
}

/// q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k].
inline Poly q_binomial_pascal(int n, int k)
{
    if (k < 0 || k > n) return {};
    if (k == 0 || k == n) return {{0, 1}};
    Poly out = q_binomial_pascal(n - 1, k - 1);
    for (const auto& [e, c] : q_binomial_pascal(n - 1, k)) add(out, e + k, c);
    return out;
}

inline boost::multiprecision::cpp_int binomial(int n, int k)
{
    std::vector<boost::multiprecision::cpp_int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<boost::multiprecision::cpp_int> next(static_cast<std::size_t>(i + 1), 0);
        for (int m = 0; m <= i; ++m)
            next[static_cast<std::size_t>(m)] = (m > 0 ? row[static_cast<std::size_t>(m - 1)] : 0) + (m < i ? row[static_cast<std::size_t>(m)] : 0);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace oracle
