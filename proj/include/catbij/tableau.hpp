#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "catbij/errors.hpp"
#include "catbij/word.hpp"

namespace catbij {

/// Standard Young tableau drawn in the first quadrant: rows are stored bottom
/// row first, rows increase left to right and columns increase upward.
class Tableau {
public:
    using Row = std::vector<int>;

    Tableau() = default;

    explicit Tableau(std::vector<Row> rows) : rows_(std::move(rows)) { validate_and_index(); }

    const std::vector<Row>& rows() const noexcept { return rows_; }
    int size() const noexcept { return static_cast<int>(row_of_.size()); }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
    int num_columns() const noexcept { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }

    /// 0-based row (counted from the bottom) holding value v.
    int row_of(int v) const { return row_of_.at(static_cast<std::size_t>(v - 1)); }
    /// 0-based column holding value v.
    int column_of(int v) const { return col_of_.at(static_cast<std::size_t>(v - 1)); }

    /// Number of entries in column c (0-based).
    int column_length(int c) const
    {
        int len = 0;
        for (const auto& r : rows_)
            if (static_cast<int>(r.size()) > c) ++len;
        return len;
    }

    std::vector<int> shape() const
    {
        std::vector<int> s;
        for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
        return s;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

private:
    void validate_and_index()
    {
        std::size_t n = 0;
        for (const auto& r : rows_) {
            if (r.empty()) throw InvalidInput("tableau rows must be non-empty");
            n += r.size();
        }
        row_of_.assign(n, -1);
        col_of_.assign(n, -1);
        for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
            const auto& r = rows_[ri];
            if (ri > 0 && r.size() > rows_[ri - 1].size())
                throw InvalidInput("tableau row lengths must weakly decrease upward");
            for (std::size_t ci = 0; ci < r.size(); ++ci) {
                const int v = r[ci];
                if (v < 1 || static_cast<std::size_t>(v) > n || row_of_[static_cast<std::size_t>(v - 1)] != -1)
                    throw InvalidInput("tableau entries must be exactly 1..n");
                row_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(ri);
                col_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(ci);
                if (ci > 0 && r[ci - 1] >= v) throw InvalidInput("tableau rows must increase left to right");
                if (ri > 0 && rows_[ri - 1][ci] >= v) throw InvalidInput("tableau columns must increase upward");
            }
        }
    }

    std::vector<Row> rows_;
    std::vector<int> row_of_;
    std::vector<int> col_of_;
};

/// {i : i+1 sits in a strictly higher row than i}.
inline PositionSet descent_set(const Tableau& t)
{
    PositionSet out;
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i + 1) > t.row_of(i)) out.push_back(i);
    return out;
}

inline long maj(const Tableau& t) { return position_sum(descent_set(t)); }

/// Descent class of two-column tableaux: n entries, j of them in the second
/// column, descent set exactly D.
struct TwoColClass {
    int n = 0;
    int j = 0;
    PositionSet descents;

    void validate() const
    {
        if (n < 0 || j < 0 || 2 * j > n) throw InvalidInput("two-column class: need 0 <= j <= n/2");
        if (!std::is_sorted(descents.begin(), descents.end())
            || std::adjacent_find(descents.begin(), descents.end()) != descents.end())
            throw InvalidInput("two-column class: descents must be strictly increasing");
        for (int d : descents)
            if (d < 1 || d > n - 1) throw InvalidInput("two-column class: descents must lie in 1..n-1");
    }
};

/// All standard tableaux with n entries, at most two columns and j entries in
/// the second column. Generated by choosing the second column as a j-subset of
/// 1..n (lexicographic) and keeping the subsets that give a standard filling.
inline std::vector<Tableau> enumerate_two_col(int n, int j)
{
    if (n < 0 || j < 0 || 2 * j > n) throw InvalidInput("enumerate_two_col: need 0 <= j <= n/2");
    std::vector<Tableau> out;
    std::vector<int> right(static_cast<std::size_t>(j));
    std::iota(right.begin(), right.end(), 1);
    for (;;) {
        std::vector<int> left;
        for (int v = 1; v <= n; ++v)
            if (!std::binary_search(right.begin(), right.end(), v)) left.push_back(v);
        bool ok = true;
        for (int r = 0; r < j && ok; ++r) ok = left[static_cast<std::size_t>(r)] < right[static_cast<std::size_t>(r)];
        if (ok) {
            std::vector<Tableau::Row> rows;
            for (std::size_t r = 0; r < left.size(); ++r) {
                if (r < right.size()) rows.push_back({left[r], right[r]});
                else rows.push_back({left[r]});
            }
            out.emplace_back(std::move(rows));
        }
        // next j-subset of 1..n in lexicographic order
        int k = j - 1;
        while (k >= 0 && right[static_cast<std::size_t>(k)] == n - j + k + 1) --k;
        if (k < 0) break;
        ++right[static_cast<std::size_t>(k)];
        for (int m = k + 1; m < j; ++m) right[static_cast<std::size_t>(m)] = right[static_cast<std::size_t>(m - 1)] + 1;
    }
    return out;
}

/// The set T_D.
inline std::vector<Tableau> enumerate_T_D(const TwoColClass& c)
{
    c.validate();
    std::vector<Tableau> out;
    for (auto& t : enumerate_two_col(c.n, c.j))
        if (descent_set(t) == c.descents) out.push_back(std::move(t));
    return out;
}

/// Non-descents of a tableau with at most two columns: values i in the left
/// column whose successor i+1 is in the right column.
inline PositionSet ascent_set(const Tableau& t) { return complement_in(descent_set(t), t.size() - 1); }

/// For each ascent a (bottom to top), how many of a+2, a+3, ... continue up the
/// right-hand column before the first entry placed in the left-hand column.
inline std::vector<int> section_continuations(const Tableau& t)
{
    if (t.num_columns() > 2) throw InvalidInput("section_continuations: tableau has more than two columns");
    std::vector<int> counts;
    for (int a : ascent_set(t)) {
        int c = 0;
        for (int v = a + 2; v <= t.size() && t.column_of(v) == 1; ++v) ++c;
        counts.push_back(c);
    }
    return counts;
}

} // namespace catbij
