#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "catbij/errors.hpp"
#include "catbij/permutation.hpp"
#include "catbij/tableau.hpp"

namespace catbij {

/// Same-shape pair: `first` is the insertion tableau, `second` the recording
/// tableau. With this order maj(second) = maj(p) and the pair of p^{-1} is the
/// swapped pair.
struct TableauPair {
    Tableau first;
    Tableau second;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Robinson–Schensted row insertion of p(1), p(2), ... in order.
inline TableauPair rsk(const Permutation& p)
{
    std::vector<Tableau::Row> ins;
    std::vector<Tableau::Row> rec;
    for (int step = 1; step <= p.size(); ++step) {
        int x = p(step);
        std::size_t r = 0;
        for (;; ++r) {
            if (r == ins.size()) {
                ins.push_back({x});
                rec.push_back({step});
                break;
            }
            auto& row = ins[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                rec[r].push_back(step);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {Tableau(std::move(ins)), Tableau(std::move(rec))};
}

/// Reverse bumping: peel off the recording tableau's entries from n down to 1.
inline Permutation rsk_inverse(const TableauPair& pair)
{
    if (pair.first.shape() != pair.second.shape()) throw InvalidInput("rsk_inverse: tableaux differ in shape");
    const int n = pair.first.size();
    auto ins = pair.first.rows();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int step = n; step >= 1; --step) {
        auto r = static_cast<std::size_t>(pair.second.row_of(step));
        // the recorded cell is at the end of its row in the current shape
        int x = ins[r].back();
        ins[r].pop_back();
        if (ins[r].empty()) ins.pop_back();
        while (r > 0) {
            --r;
            auto& row = ins[r];
            // largest entry smaller than x is the one x displaced
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;
            std::swap(x, *it);
        }
        images[static_cast<std::size_t>(step - 1)] = x;
    }
    return Permutation(std::move(images));
}

} // namespace catbij
