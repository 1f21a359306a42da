#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "catbij/bijection.hpp"
#include "catbij/laurent.hpp"
#include "catbij/permutation.hpp"
#include "catbij/qseries.hpp"
#include "catbij/rsk.hpp"
#include "catbij/tableau.hpp"
#include "catbij/word.hpp"

namespace catbij {

/// Outcome of one verification run. A failing report always carries a witness.
struct VerificationReport {
    std::string check;
    std::map<std::string, std::string> parameters;
    bool passed = true;
    std::map<std::string, std::string> witness;
    std::map<std::string, long long> counts;
    std::map<std::string, std::string> notes;
    double elapsed_ms = 0.0;

    void fail(std::map<std::string, std::string> w)
    {
        if (!passed) return; // keep the first counterexample
        passed = false;
        witness = std::move(w);
    }
};

struct VerifyOptions {
    bool parallel = false;
};

inline std::string to_string(const PositionSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

namespace detail {

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline VerificationReport start_report(std::string check, int n)
{
    VerificationReport r;
    r.check = std::move(check);
    r.parameters["n"] = std::to_string(n);
    return r;
}

inline void require_n(int n, const char* what)
{
    if (n < 1) throw InvalidInput(std::string(what) + ": need n >= 1");
}

// Runs `work(begin, end, partial)` over index chunks of [0, size) and folds
// the partial reports into `into` in chunk order, so the first witness and
// all counts are independent of scheduling.
template <class Work>
void sweep(std::size_t size, const VerifyOptions& opt, VerificationReport& into, Work&& work)
{
    const std::size_t workers =
        opt.parallel ? std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16)) : 1;
    const std::size_t chunk = (size + workers - 1) / std::max<std::size_t>(workers, 1);
    std::vector<VerificationReport> parts(workers);
    if (workers == 1) {
        work(std::size_t{0}, size, parts[0]);
    } else {
        std::vector<std::future<void>> jobs;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t b = std::min(size, w * chunk);
            const std::size_t e = std::min(size, b + chunk);
            jobs.push_back(std::async(std::launch::async, [&, b, e, w] { work(b, e, parts[w]); }));
        }
        for (auto& j : jobs) j.get();
    }
    for (auto& p : parts) {
        if (!p.passed) into.fail(p.witness);
        for (const auto& [k, v] : p.counts) into.counts[k] += v;
    }
}

} // namespace detail

/// Theorem: sum_{CW_n} q^{maj(w)-maj(w^{-1})} = sum_{S_n(123)} q^{2(maj p - maj p^{-1})}.
inline VerificationReport check_theorem(int n, const VerifyOptions& = {})
{
    detail::require_n(n, "check_theorem");
    detail::Stopwatch clock;
    auto r = detail::start_report("theorem", n);
    const auto lhs = theorem_lhs(n);
    const auto rhs = theorem_rhs(n);
    r.counts["words"] = static_cast<long long>(lhs.coefficient_sum());
    r.counts["permutations"] = static_cast<long long>(rhs.coefficient_sum());
    r.notes["lhs"] = lhs.str();
    r.notes["rhs"] = rhs.str();
    if (lhs != rhs) r.fail({{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"lhs_minus_rhs", (lhs - rhs).str()}});
    r.elapsed_ms = clock.ms();
    return r;
}

/// |T_D| = |CW_P| for every realized class, and the translated families
/// partition the half-words with j ones.
inline VerificationReport check_lemma1(int n, TranslationRule rule = kShippedRule)
{
    detail::require_n(n, "check_lemma1");
    detail::Stopwatch clock;
    auto r = detail::start_report("lemma1", n);
    r.parameters["rule"] = to_string(rule);
    for (int j = 0; 2 * j <= n; ++j) {
        std::map<PositionSet, long long> class_sizes;
        for (const auto& t : enumerate_two_col(n, j)) ++class_sizes[descent_set(t)];
        std::map<PositionSet, long long> family_sizes;
        for (const auto& w : enumerate_halfwords(n, j)) ++family_sizes[pattern01_positions(w.word())];

        std::set<PositionSet> image;
        for (const auto& [d, size] : class_sizes) {
            const auto p = detail::translate_descents(n, d, rule);
            const auto it = family_sizes.find(p);
            const long long fsize = it == family_sizes.end() ? 0 : it->second;
            if (fsize != size)
                r.fail({{"j", std::to_string(j)}, {"descents", to_string(d)}, {"patterns", to_string(p)},
                        {"tableaux", std::to_string(size)}, {"words", std::to_string(fsize)}});
            if (!image.insert(p).second)
                r.fail({{"j", std::to_string(j)}, {"patterns", to_string(p)}, {"reason", "two classes share a family"}});
        }
        for (const auto& [p, size] : family_sizes)
            if (!image.count(p))
                r.fail({{"j", std::to_string(j)}, {"patterns", to_string(p)}, {"reason", "family not covered"}});
        r.counts["classes"] += static_cast<long long>(class_sizes.size());
        r.counts["families"] += static_cast<long long>(family_sizes.size());
        for (const auto& [d, size] : class_sizes) r.counts["tableaux"] += size;
        for (const auto& [p, size] : family_sizes) r.counts["halfwords"] += size;
    }
    r.elapsed_ms = clock.ms();
    return r;
}

namespace detail {

inline std::map<PositionSet, std::vector<HalfWord>> families_with(int n, int j)
{
    std::map<PositionSet, std::vector<HalfWord>> fams;
    for (auto& w : enumerate_halfwords(n, j)) fams[pattern01_positions(w.word())].push_back(std::move(w));
    return fams;
}

} // namespace detail

/// Exchange invariance: members of one family give the same maj difference
/// when glued to any half-word w3 with the same number of 1s.
inline VerificationReport check_lemma2(int n)
{
    detail::require_n(n, "check_lemma2");
    detail::Stopwatch clock;
    auto r = detail::start_report("lemma2", n);
    for (int j = 0; 2 * j <= n; ++j) {
        const auto partners = enumerate_halfwords(n, j);
        for (const auto& [p, members] : detail::families_with(n, j)) {
            ++r.counts["families"];
            for (const auto& w3 : partners) {
                const auto tail = invert(w3.word());
                const long ref = maj_difference(members.front().word() + tail);
                for (std::size_t m = 1; m < members.size(); ++m) {
                    ++r.counts["comparisons"];
                    const long got = maj_difference(members[m].word() + tail);
                    if (got != ref)
                        r.fail({{"family", to_string(p)}, {"j", std::to_string(j)}, {"w1", members.front().str()},
                                {"w2", members[m].str()}, {"w3", w3.str()}, {"difference_w1", std::to_string(ref)},
                                {"difference_w2", std::to_string(got)}});
                }
            }
        }
    }
    r.elapsed_ms = clock.ms();
    return r;
}

/// Contribution formula. For each family, the contribution of a member is
/// constant and the maj difference of w1 w3^{-1} splits as c(w1) - c(w3). The
/// constant is compared with 2j - 2 maj(D) for the matched tableau class D
/// ("tableau-descents") and with 2j - 2 sum({1..n-1} \ D) ("complement").
/// Passes when at least one identification holds for every family; the ones
/// that do are listed in notes["identification"].
inline VerificationReport check_lemma3(int n, TranslationRule rule = kShippedRule)
{
    detail::require_n(n, "check_lemma3");
    detail::Stopwatch clock;
    auto r = detail::start_report("lemma3", n);
    r.parameters["rule"] = to_string(rule);
    bool descents_hold = true;
    bool complement_hold = true;
    std::map<std::string, std::string> first_miss;
    for (int j = 0; 2 * j <= n; ++j) {
        const auto partners = enumerate_halfwords(n, j);
        for (const auto& [p, members] : detail::families_with(n, j)) {
            ++r.counts["families"];
            const long c = halfword_contribution(members.front());
            for (const auto& w : members) {
                if (halfword_contribution(w) != c)
                    r.fail({{"family", to_string(p)}, {"word", w.str()}, {"reason", "contribution not constant"}});
                for (const auto& w3 : partners) {
                    ++r.counts["decompositions"];
                    const long total = maj_difference(w.word() + invert(w3.word()));
                    if (total != halfword_contribution(w) - halfword_contribution(w3))
                        r.fail({{"w1", w.str()}, {"w3", w3.str()}, {"reason", "difference does not split"}});
                }
            }
            const auto d = detail::untranslate_patterns(n, p, rule);
            const long by_descents = 2L * j - 2 * position_sum(d);
            const long by_complement = 2L * j - 2 * position_sum(complement_in(d, n - 1));
            if (c != by_descents) descents_hold = false;
            if (c != by_complement) complement_hold = false;
            if (c != by_descents && c != by_complement && first_miss.empty())
                first_miss = {{"family", to_string(p)},       {"j", std::to_string(j)},
                              {"descents", to_string(d)},     {"contribution", std::to_string(c)},
                              {"2j-2maj(D)", std::to_string(by_descents)},
                              {"2j-2sum(complement)", std::to_string(by_complement)}};
        }
    }
    std::string ident;
    if (descents_hold) ident = "tableau-descents";
    if (complement_hold) ident += ident.empty() ? "complement" : ",complement";
    r.notes["identification"] = ident.empty() ? "none" : ident;
    if (!descents_hold && !complement_hold) r.fail(first_miss.empty() ? std::map<std::string, std::string>{{"reason", "no identification holds"}} : first_miss);
    r.elapsed_ms = clock.ms();
    return r;
}

/// maj(w^{-1}) = 2n des(w) - maj(w) on CW_n.
inline VerificationReport check_maj_inversion(int n)
{
    detail::require_n(n, "check_maj_inversion");
    detail::Stopwatch clock;
    auto r = detail::start_report("maj-inversion", n);
    for (const auto& w : enumerate_catalan(n)) {
        ++r.counts["words"];
        const long lhs = maj(invert(w.word()));
        const long rhs = 2L * n * des(w.word()) - maj(w.word());
        if (lhs != rhs) r.fail({{"word", w.str()}, {"maj_inverse", std::to_string(lhs)}, {"2n*des-maj", std::to_string(rhs)}});
    }
    r.elapsed_ms = clock.ms();
    return r;
}

/// F_{n,k}(q,q) = H_{n,k}(q,q). For k <= 2 (proven cases) every summand must divide
/// exactly; for k >= 3 the report is exploratory and lists how many summands
/// were not polynomials on their own.
inline VerificationReport check_conjecture1(int n, int k, FVariant variant = kShippedVariant)
{
    if (n < 1 || k < 1 || k > n) throw InvalidInput("check_conjecture1: need 1 <= k <= n");
    detail::Stopwatch clock;
    auto r = detail::start_report("conjecture1", n);
    r.parameters["k"] = std::to_string(k);
    r.parameters["variant"] = to_string(variant);
    r.notes["case"] = k <= 2 ? "proven" : "exploratory";

    const int lo = variant == FVariant::A ? k : 1;
    for (int i = lo; i <= k; ++i) {
        for (const auto& c : compositions(n, i)) {
            ++r.counts["summands"];
            try {
                (void)f_term_value(c);
            } catch (const DivisibilityError& e) {
                ++r.counts["non_polynomial_summands"];
                if (k <= 2) r.fail({{"kind", "divisibility"}, {"composition", c.str()}, {"error", e.what()}});
            }
        }
    }
    if (!r.passed) {
        r.elapsed_ms = clock.ms();
        return r;
    }
    LaurentPoly f;
    try {
        f = F_nk(n, k, variant);
    } catch (const DivisibilityError& e) {
        r.fail({{"kind", "divisibility"}, {"error", e.what()}});
        r.elapsed_ms = clock.ms();
        return r;
    }
    const auto h = H_nk(n, k);
    r.notes["F"] = f.str();
    r.notes["H"] = h.str();
    if (f != h) r.fail({{"kind", "inequality"}, {"F", f.str()}, {"H", h.str()}, {"F_minus_H", (f - h).str()}});
    r.elapsed_ms = clock.ms();
    return r;
}

/// conjecture2_lhs(n) with q -> q^2 equals theorem_lhs(n).
inline VerificationReport check_conjecture2(int n)
{
    detail::require_n(n, "check_conjecture2");
    detail::Stopwatch clock;
    auto r = detail::start_report("conjecture2", n);
    const auto squared = conjecture2_lhs(n).substitute_power(2);
    const auto lhs = theorem_lhs(n);
    if (squared != lhs) r.fail({{"conjecture2_squared", squared.str()}, {"theorem_lhs", lhs.str()}});
    r.elapsed_ms = clock.ms();
    return r;
}

/// Robinson–Schensted properties over all of S_n: round trip, pair swap for
/// the inverse, maj of the recording tableau, columns = LIS, and diagonal
/// pairs = involutions.
inline VerificationReport check_rsk(int n, const VerifyOptions& opt = {})
{
    detail::require_n(n, "check_rsk");
    detail::Stopwatch clock;
    auto r = detail::start_report("rsk", n);
    const auto perms = detail::filter_permutations(n, [](const Permutation&) { return true; });
    detail::sweep(perms.size(), opt, r, [&](std::size_t b, std::size_t e, VerificationReport& part) {
        for (std::size_t i = b; i < e; ++i) {
            const auto& p = perms[i];
            ++part.counts["permutations"];
            const auto pair = rsk(p);
            auto bad = [&](const char* what) { part.fail({{"permutation", p.str()}, {"property", what}}); };
            if (rsk_inverse(pair) != p) bad("round trip");
            const auto inv_pair = rsk(inverse(p));
            if (inv_pair.first != pair.second || inv_pair.second != pair.first) bad("inverse swaps the pair");
            if (maj(pair.second) != maj(p)) bad("maj(recording) = maj(p)");
            if (pair.first.num_columns() != lis_length(p)) bad("columns = lis");
            if (is_involution(p) != (pair.first == pair.second)) bad("involution iff diagonal pair");
        }
    });
    r.elapsed_ms = clock.ms();
    return r;
}

/// phi is a bijection S_n(123) -> CW_n that round-trips, carries the statistic
/// (maj(w) - maj(w^{-1}) = 2(maj p^{-1} - maj p)) and sends involutions to
/// self-inverse words.
inline VerificationReport check_bijection(int n, const VerifyOptions& opt = {},
                                          const ClassMatcher& matcher = ClassMatcher{})
{
    detail::require_n(n, "check_bijection");
    detail::Stopwatch clock;
    auto r = detail::start_report("bijection", n);
    r.parameters["rule"] = to_string(matcher.rule());
    r.notes["statistic_law"] = "maj(w)-maj(w^-1) = 2(maj(p^-1)-maj(p))";
    const auto perms = enumerate_avoiding_123(n);
    std::vector<CatalanWord> images(perms.size());
    detail::sweep(perms.size(), opt, r, [&](std::size_t b, std::size_t e, VerificationReport& part) {
        for (std::size_t i = b; i < e; ++i) {
            const auto& p = perms[i];
            ++part.counts["permutations"];
            CatalanWord w;
            try {
                w = phi(p, matcher);
            } catch (const InvalidInput& ex) {
                part.fail({{"permutation", p.str()}, {"property", "phi defined"}, {"error", ex.what()}});
                continue;
            }
            images[i] = w;
            auto bad = [&](const char* what) { part.fail({{"permutation", p.str()}, {"word", w.str()}, {"property", what}}); };
            if (maj_difference(w.word()) != 2 * (maj(inverse(p)) - maj(p))) bad("statistic law");
            if (phi_inverse(w, matcher) != p) bad("round trip");
            if (is_involution(p)) {
                ++part.counts["involutions"];
                if (invert(w) != w) bad("involution preserved");
            }
        }
    });
    if (r.passed) {
        const auto words = enumerate_catalan(n);
        r.counts["words"] = static_cast<long long>(words.size());
        auto sorted = images;
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) r.fail({{"word", dup->str()}, {"property", "injective"}});
        else if (sorted != words) r.fail({{"property", "image is CW_n"}, {"images", std::to_string(sorted.size())}});
        for (const auto& w : words)
            if (phi(phi_inverse(w, matcher), matcher) != w) r.fail({{"word", w.str()}, {"property", "inverse round trip"}});
    }
    r.elapsed_ms = clock.ms();
    return r;
}

/// Matching policy that shuffles each class independently with a seeded
/// generator; the shuffle depends only on (seed, family).
inline MatchingPolicy random_matching(std::uint64_t seed)
{
    return [seed](const FamilyKey& family, std::size_t size) {
        std::vector<std::uint32_t> data{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                        static_cast<std::uint32_t>(family.n), static_cast<std::uint32_t>(family.j)};
        data.insert(data.end(), family.patterns.begin(), family.patterns.end());
        std::seed_seq seq(data.begin(), data.end());
        std::mt19937_64 rng(seq);
        std::vector<std::size_t> perm(size);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    };
}

/// Replacing the within-class matching by random bijections keeps phi a
/// bijection and leaves sum_{S_n(123)} q^{maj(phi p) - maj(phi p)^{-1}} equal to
/// theorem_lhs(n).
inline VerificationReport check_random_matchings(int n, int trials, std::uint64_t seed)
{
    detail::require_n(n, "check_random_matchings");
    detail::Stopwatch clock;
    auto r = detail::start_report("random-matching", n);
    r.parameters["trials"] = std::to_string(trials);
    r.parameters["seed"] = std::to_string(seed);
    const auto perms = enumerate_avoiding_123(n);
    const auto expected = theorem_lhs(n);
    for (int t = 0; t < trials; ++t) {
        ClassMatcher matcher(kShippedRule, random_matching(seed + static_cast<std::uint64_t>(t)));
        LaurentPoly got;
        std::set<CatalanWord> seen;
        for (const auto& p : perms) {
            const auto w = phi(p, matcher);
            seen.insert(w);
            got.add_term(maj_difference(w.word()), 1);
            if (maj_difference(w.word()) != 2 * (maj(inverse(p)) - maj(p)))
                r.fail({{"trial", std::to_string(t)}, {"permutation", p.str()}, {"word", w.str()}, {"property", "statistic law"}});
        }
        ++r.counts["trials"];
        if (seen.size() != perms.size())
            r.fail({{"trial", std::to_string(t)}, {"property", "injective"}});
        if (got != expected)
            r.fail({{"trial", std::to_string(t)}, {"expected", expected.str()}, {"got", got.str()}});
    }
    r.elapsed_ms = clock.ms();
    return r;
}

} // namespace catbij
