#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "catbij/errors.hpp"
#include "catbij/laurent.hpp"
#include "catbij/permutation.hpp"
#include "catbij/word.hpp"

namespace catbij {

/// (q^m; q)_a = (1 - q^m)(1 - q^{m+1}) ... (1 - q^{m+a-1}); 1 when a = 0.
inline LaurentPoly pochhammer(int m, int a)
{
    if (m < 1 || a < 0) throw InvalidInput("pochhammer: need base exponent >= 1 and length >= 0");
    LaurentPoly out = 1;
    for (int r = 0; r < a; ++r) out *= LaurentPoly(1) - LaurentPoly::monomial(m + r);
    return out;
}

/// q-binomial [n choose k] = (q;q)_n / ((q;q)_k (q;q)_{n-k}).
inline LaurentPoly gaussian_binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) throw InvalidInput("gaussian_binomial: need 0 <= k <= n");
    return exact_div(pochhammer(1, n), pochhammer(1, k) * pochhammer(1, n - k));
}

inline long choose2(long n) { return n * (n - 1) / 2; }

/// Ordered sequence of positive parts.
struct Composition {
    std::vector<int> parts;

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Compositions of n into exactly k positive parts, lexicographic.
inline std::vector<Composition> compositions(int n, int k)
{
    std::vector<Composition> out;
    if (n < 0 || k < 0) return out;
    if (k == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> parts(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == k - 1) {
            parts[static_cast<std::size_t>(idx)] = left;
            out.push_back({parts});
            return;
        }
        for (int a = 1; a <= left - (k - 1 - idx); ++a) {
            parts[static_cast<std::size_t>(idx)] = a;
            self(self, idx + 1, left - a);
        }
    };
    if (n >= k) rec(rec, 0, n);
    return out;
}

/// Product of (1 - q^s) factors, stored as s -> multiplicity.
using CyclotomicProduct = std::map<int, int>;

inline LaurentPoly expand(const CyclotomicProduct& factors)
{
    LaurentPoly out = 1;
    for (const auto& [s, mult] : factors)
        for (int r = 0; r < mult; ++r) out *= LaurentPoly(1) - LaurentPoly::monomial(s);
    return out;
}

/// One summand of F_{n,k}(q,q) as an unreduced fraction.
struct FTerm {
    Composition composition;
    LaurentPoly numerator;
    CyclotomicProduct denominator;
};

/// Summand of F_{n,k}(q,q) for a composition a_1 + ... + a_k = n:
///   q^{sum C(a_i,2) + sum_{i<k} (k-i) a_i} (q;q)_n^2 prod_{i<k} [a_i+a_{i+1}-1, a_i]
///   / ( (q^k;q)_{a_1} (q;q)_{a_k} prod_{i<k} (q^{k-i};q)_{a_i+a_{i+1}} ).
inline FTerm f_term(const Composition& comp)
{
    const int k = static_cast<int>(comp.parts.size());
    if (k < 1) throw InvalidInput("f_term: composition must have at least one part");
    for (int a : comp.parts)
        if (a < 1) throw InvalidInput("f_term: parts must be positive");
    const int n = comp.total();
    const auto a = [&](int i) { return comp.parts[static_cast<std::size_t>(i - 1)]; };

    Exponent e = 0;
    for (int i = 1; i <= k; ++i) e += choose2(a(i));
    for (int i = 1; i <= k - 1; ++i) e += static_cast<Exponent>(k - i) * a(i);

    FTerm t{comp, LaurentPoly::monomial(e), {}};
    const auto qq_n = pochhammer(1, n);
    t.numerator *= qq_n * qq_n;
    for (int i = 1; i <= k - 1; ++i) t.numerator *= gaussian_binomial(a(i) + a(i + 1) - 1, a(i));

    auto add_pochhammer = [&](int base, int len) {
        for (int r = 0; r < len; ++r) ++t.denominator[base + r];
    };
    add_pochhammer(k, a(1));
    add_pochhammer(1, a(k));
    for (int i = 1; i <= k - 1; ++i) add_pochhammer(k - i, a(i) + a(i + 1));
    return t;
}

/// The summand reduced to a Laurent polynomial by one exact division. Throws
/// DivisibilityError naming the composition when the summand is not a
/// polynomial.
inline LaurentPoly f_term_value(const Composition& comp)
{
    const auto t = f_term(comp);
    try {
        return exact_div(t.numerator, expand(t.denominator));
    } catch (const DivisibilityError&) {
        throw DivisibilityError("F summand for composition " + comp.str() + " is not a polynomial");
    }
}

/// Sum of the F summands over compositions of n into exactly k parts. The
/// summands are brought over a common denominator (each (1 - q^s) taken with
/// its largest multiplicity) and divided once; divisibility is asserted.
inline LaurentPoly f_single_sum(int n, int k)
{
    const auto comps = compositions(n, k);
    std::vector<FTerm> terms;
    terms.reserve(comps.size());
    CyclotomicProduct common;
    for (const auto& c : comps) {
        terms.push_back(f_term(c));
        for (const auto& [s, mult] : terms.back().denominator) common[s] = std::max(common[s], mult);
    }
    LaurentPoly numerator;
    for (const auto& t : terms) {
        CyclotomicProduct cofactor = common;
        for (const auto& [s, mult] : t.denominator) cofactor[s] -= mult;
        numerator += t.numerator * expand(cofactor);
    }
    try {
        return exact_div(numerator, expand(common));
    } catch (const DivisibilityError&) {
        throw DivisibilityError("F_{" + std::to_string(n) + "," + std::to_string(k)
                                + "} combined sum is not a polynomial");
    }
}

/// Readings of the outer sum over i in F_{n,k}.
enum class FVariant {
    /// Single sum over compositions into exactly k parts.
    A,
    /// sum_{i=1}^{k} of the single sum with k replaced by i. Shipped: it is the
    /// reading that agrees with H at k = 2.
    B,
};

inline constexpr FVariant kShippedVariant = FVariant::B;

inline const char* to_string(FVariant v) { return v == FVariant::A ? "A" : "B"; }

inline FVariant parse_variant(const std::string& s)
{
    if (s == "A" || s == "a") return FVariant::A;
    if (s == "B" || s == "b") return FVariant::B;
    throw InvalidInput("variant must be A or B, got '" + s + "'");
}

/// F_{n,k}(q,q).
inline LaurentPoly F_nk(int n, int k, FVariant variant = kShippedVariant)
{
    if (n < 1 || k < 1 || k > n) throw InvalidInput("F_nk: need 1 <= k <= n");
    if (variant == FVariant::A) return f_single_sum(n, k);
    LaurentPoly total;
    for (int i = 1; i <= k; ++i) total += f_single_sum(n, i);
    return total;
}

namespace detail {

// Sums q^{exponent(p)} over permutations p of 1..n with lis(p) <= lis_max.
template <class ExponentOf>
LaurentPoly permutation_series(int n, int lis_max, ExponentOf&& exponent_of)
{
    std::map<Exponent, long long> counts;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        Permutation p(v);
        if (lis_length(p) <= lis_max) ++counts[exponent_of(p)];
    } while (std::next_permutation(v.begin(), v.end()));
    LaurentPoly out;
    for (const auto& [e, c] : counts) out.add_term(e, BigInt(c));
    return out;
}

} // namespace detail

/// H_{n,k}(q,q) = sum over p with lis(p) <= k of q^{maj(p) + C(n,2) - maj(p^{-1})}.
inline LaurentPoly H_nk(int n, int k)
{
    if (n < 1 || k < 1 || k > n) throw InvalidInput("H_nk: need 1 <= k <= n");
    const long c2 = choose2(n);
    return detail::permutation_series(n, k, [c2](const Permutation& p) { return maj(p) + c2 - maj(inverse(p)); });
}

/// sum over w in CW_n of q^{maj(w) - maj(w^{-1})}.
inline LaurentPoly theorem_lhs(int n)
{
    if (n < 1) throw InvalidInput("theorem_lhs: need n >= 1");
    LaurentPoly out;
    for (const auto& w : enumerate_catalan(n)) out.add_term(maj(w.word()) - maj(invert(w.word())), 1);
    return out;
}

/// sum over p in S_n(123) of q^{2(maj(p) - maj(p^{-1}))}.
inline LaurentPoly theorem_rhs(int n)
{
    if (n < 1) throw InvalidInput("theorem_rhs: need n >= 1");
    return detail::permutation_series(n, 2, [](const Permutation& p) { return 2 * (maj(p) - maj(inverse(p))); });
}

/// sum over w in CW_n of q^{maj(w) - n des(w)}.
inline LaurentPoly conjecture2_lhs(int n)
{
    if (n < 1) throw InvalidInput("conjecture2_lhs: need n >= 1");
    LaurentPoly out;
    for (const auto& w : enumerate_catalan(n)) out.add_term(maj(w.word()) - static_cast<long>(n) * des(w.word()), 1);
    return out;
}

} // namespace catbij
