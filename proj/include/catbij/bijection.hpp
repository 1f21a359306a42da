#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "catbij/errors.hpp"
#include "catbij/permutation.hpp"
#include "catbij/rsk.hpp"
#include "catbij/tableau.hpp"
#include "catbij/word.hpp"

namespace catbij {

/// How a tableau descent class T_D is assigned its word family CW_P.
enum class TranslationRule {
    /// P = {i in 1..n-1 : n - i not in D}. Shipped rule: the only candidate
    /// under which phi carries the maj statistic (see tests/test_bijection.cpp).
    reflected_complement,
    /// P = {1..n-1} \ D. Matches class sizes (it is the column-word bijection)
    /// but does not preserve the statistic.
    complement,
};

inline constexpr TranslationRule kShippedRule = TranslationRule::reflected_complement;

inline const char* to_string(TranslationRule r)
{
    return r == TranslationRule::reflected_complement ? "reflected-complement" : "complement";
}

namespace detail {

inline PositionSet translate_descents(int n, const PositionSet& d, TranslationRule rule)
{
    if (rule == TranslationRule::complement) return complement_in(d, n - 1);
    PositionSet p;
    for (int i = 1; i <= n - 1; ++i)
        if (!std::binary_search(d.begin(), d.end(), n - i)) p.push_back(i);
    return p;
}

inline PositionSet untranslate_patterns(int n, const PositionSet& p, TranslationRule rule)
{
    if (rule == TranslationRule::complement) return complement_in(p, n - 1);
    PositionSet d;
    for (int i = n - 1; i >= 1; --i)
        if (!std::binary_search(p.begin(), p.end(), i)) d.push_back(n - i);
    return d;
}

} // namespace detail

/// FamilyKey (n, j, P) matched to the tableau class T_D.
inline FamilyKey class_translate(int n, int j, const PositionSet& descents, TranslationRule rule = kShippedRule)
{
    TwoColClass c{n, j, descents};
    c.validate();
    if (enumerate_T_D(c).empty()) throw InvalidInput("class_translate: no two-column tableau realizes this (n, j, D)");
    return FamilyKey{n, j, detail::translate_descents(n, descents, rule)};
}

/// Tableau class matched to a word family; inverse of class_translate.
inline TwoColClass class_untranslate(const FamilyKey& key, TranslationRule rule = kShippedRule)
{
    key.validate();
    return TwoColClass{key.n, key.j, detail::untranslate_patterns(key.n, key.patterns, rule)};
}

/// Chooses the bijection T_D -> CW_P inside one class. Receives the family and
/// the class size m; returns a permutation `perm` of 0..m-1 so that the
/// tableau of rank r is sent to the word of rank perm[r]. An empty policy means
/// rank r goes to rank r.
using MatchingPolicy = std::function<std::vector<std::size_t>(const FamilyKey& family, std::size_t size)>;

/// Matches each tableau class to its word family and caches the result.
///
/// Tableaux in a class are ranked by their section continuations read bottom
/// to top, words by their per-segment 1-counts read right to left; both lists
/// are sorted lexicographically and equal ranks are paired. Lookups are
/// thread-safe.
class ClassMatcher {
public:
    explicit ClassMatcher(TranslationRule rule = kShippedRule, MatchingPolicy policy = {})
        : rule_(rule), policy_(std::move(policy))
    {
    }

    TranslationRule rule() const noexcept { return rule_; }

    HalfWord to_halfword(const Tableau& t) const
    {
        if (t.num_columns() > 2) throw InvalidInput("tableau_to_halfword: tableau has more than two columns");
        const int n = t.size();
        const int j = t.column_length(1);
        const auto& m = lookup(n, j, descent_set(t));
        const auto it = std::find(m.tableaux.begin(), m.tableaux.end(), t);
        return m.words[m.tableau_to_word[static_cast<std::size_t>(it - m.tableaux.begin())]];
    }

    Tableau to_tableau(const HalfWord& w) const
    {
        const FamilyKey key{w.size(), w.ones(), pattern01_positions(w.word())};
        const auto cls = class_untranslate(key, rule_);
        const auto& m = lookup(cls.n, cls.j, cls.descents);
        if (m.family != key) throw InvalidInput("halfword_to_tableau: no tableau class maps to the family of " + w.str());
        const auto it = std::find(m.words.begin(), m.words.end(), w);
        const auto rank = static_cast<std::size_t>(it - m.words.begin());
        const auto back = std::find(m.tableau_to_word.begin(), m.tableau_to_word.end(), rank);
        return m.tableaux[static_cast<std::size_t>(back - m.tableau_to_word.begin())];
    }

private:
    struct ClassMatch {
        FamilyKey family;
        std::vector<Tableau> tableaux;  // ranked
        std::vector<HalfWord> words;    // ranked
        std::vector<std::size_t> tableau_to_word;
    };

    const ClassMatch& lookup(int n, int j, const PositionSet& descents) const
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(n, j, descents);
        auto found = cache_.find(key);
        if (found != cache_.end()) return *found->second;
        auto built = std::make_unique<ClassMatch>(build(n, j, descents));
        return *cache_.emplace(std::move(key), std::move(built)).first->second;
    }

    ClassMatch build(int n, int j, const PositionSet& descents) const
    {
        ClassMatch m;
        m.tableaux = enumerate_T_D(TwoColClass{n, j, descents});
        m.family = FamilyKey{n, j, detail::translate_descents(n, descents, rule_)};
        if (static_cast<int>(m.family.patterns.size()) <= j) m.words = enumerate_family(m.family);
        if (m.tableaux.size() != m.words.size())
            throw InvalidInput("class sizes differ under rule " + std::string(to_string(rule_)));

        std::sort(m.tableaux.begin(), m.tableaux.end(), [](const Tableau& a, const Tableau& b) {
            return section_continuations(a) < section_continuations(b);
        });
        auto word_rank = [](const HalfWord& w) {
            auto v = segment_ones(w);
            std::reverse(v.begin(), v.end());
            return v;
        };
        std::sort(m.words.begin(), m.words.end(),
                  [&](const HalfWord& a, const HalfWord& b) { return word_rank(a) < word_rank(b); });

        m.tableau_to_word.resize(m.tableaux.size());
        std::iota(m.tableau_to_word.begin(), m.tableau_to_word.end(), std::size_t{0});
        if (policy_) {
            auto perm = policy_(m.family, m.tableaux.size());
            auto check = perm;
            std::sort(check.begin(), check.end());
            if (check != m.tableau_to_word) throw InvalidInput("matching policy did not return a permutation");
            m.tableau_to_word = std::move(perm);
        }
        return m;
    }

    TranslationRule rule_;
    MatchingPolicy policy_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<int, int, PositionSet>, std::unique_ptr<ClassMatch>> cache_;
};

inline HalfWord tableau_to_halfword(const Tableau& t) { return ClassMatcher{}.to_halfword(t); }

inline Tableau halfword_to_tableau(const HalfWord& w) { return ClassMatcher{}.to_tableau(w); }

/// phi : S_n(123) -> CW_n. The RS pair (insertion, recording) goes to the
/// half-word pair, which is glued as w1 · w2^{-1}. The image satisfies
///   maj(w) - maj(w^{-1}) = 2 (maj(p^{-1}) - maj(p)).
inline CatalanWord phi(const Permutation& p, const ClassMatcher& matcher)
{
    if (lis_length(p) > 2) throw InvalidInput("phi: permutation " + p.str() + " contains the pattern 123");
    const auto pair = rsk(p);
    return concat_pair(matcher.to_halfword(pair.first), matcher.to_halfword(pair.second));
}

inline CatalanWord phi(const Permutation& p) { return phi(p, ClassMatcher{}); }

inline Permutation phi_inverse(const CatalanWord& w, const ClassMatcher& matcher)
{
    const auto [w1, w2] = split_pair(w);
    return rsk_inverse(TableauPair{matcher.to_tableau(w1), matcher.to_tableau(w2)});
}

inline Permutation phi_inverse(const CatalanWord& w) { return phi_inverse(w, ClassMatcher{}); }

/// maj(w) - maj(w^{-1}).
inline long maj_difference(const BinaryWord& w) { return maj(w) - maj(invert(w)); }

/// Contribution of w1 to maj(w1 w2^{-1}) - maj(w2 w1^{-1}): its own descents,
/// minus the descents of w1^{-1} shifted by n into the second half. The
/// junction at position n is left out; it cancels between the two sides.
inline long halfword_contribution(const HalfWord& w)
{
    const long n = w.size();
    long c = maj(w.word());
    for (int d : descent_set(invert(w.word()))) c -= n + d;
    return c;
}

} // namespace catbij
