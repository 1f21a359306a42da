// catbij: enumerate, map and verify the Catalan-word / 123-avoiding
// permutation correspondence and the F/H q-series.
//
// Exit status: 0 success or verified, 1 verification failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "catbij/catbij.hpp"
#include "catbij/io.hpp"

namespace {

using namespace catbij;
using io::Format;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Globals {
    std::string format = "text";
    bool parallel = false;
    bool timing = false;
    int max_n = 10;
    Format fmt() const { return io::parse_format(format); }
};

void guard_n(const Globals& g, int n)
{
    if (n < 0) throw InvalidInput("--n must be non-negative");
    if (n > g.max_n)
        throw InvalidInput("n = " + std::to_string(n) + " exceeds --max-n " + std::to_string(g.max_n));
}

std::string positions_text(const PositionSet& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

void print_poly(const LaurentPoly& p, Format f)
{
    switch (f) {
    case Format::json: std::cout << io::to_json(p).dump() << "\n"; break;
    case Format::csv: std::cout << io::to_csv(p); break;
    case Format::text: std::cout << p.str() << "\n"; break;
    }
}

template <class T, class ToText, class ToJson>
void print_list(const std::vector<T>& items, Format f, const char* key, ToText&& text, ToJson&& json,
                Json header = Json::object())
{
    switch (f) {
    case Format::json: {
        Json out = std::move(header);
        out["count"] = items.size();
        Json arr = Json::array();
        for (const auto& x : items) arr.push_back(json(x));
        out[key] = std::move(arr);
        std::cout << out.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << key << "\n";
        for (const auto& x : items) std::cout << text(x) << "\n";
        break;
    case Format::text:
        for (const auto& x : items) std::cout << text(x) << "\n";
        break;
    }
}

// Flat key/value record: JSON object, "key,value" CSV, or "key: value" lines.
void print_record(const Json& rec, Format f)
{
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    switch (f) {
    case Format::json: std::cout << rec.dump() << "\n"; break;
    case Format::csv:
        std::cout << "field,value\n";
        for (const auto& [k, v] : rec.items()) {
            auto s = scalar(v);
            if (s.find_first_of(",\"") != std::string::npos) {
                std::string q = "\"";
                for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
                s = q + "\"";
            }
            std::cout << k << "," << s << "\n";
        }
        break;
    case Format::text:
        for (const auto& [k, v] : rec.items()) std::cout << k << ": " << scalar(v) << "\n";
        break;
    }
}

int emit_report(const VerificationReport& r, const Globals& g)
{
    std::cout << io::render(r, g.fmt(), g.timing);
    return r.passed ? kExitOk : kExitFailed;
}

Json word_stats(const BinaryWord& w)
{
    Json rec;
    rec["word"] = w.str();
    rec["length"] = w.size();
    rec["ones"] = w.ones();
    rec["descents"] = positions_text(descent_set(w));
    rec["des"] = des(w);
    rec["maj"] = maj(w);
    rec["patterns01"] = positions_text(pattern01_positions(w));
    rec["inverse"] = invert(w).str();
    rec["maj_inverse"] = maj(invert(w));
    rec["maj_difference"] = maj_difference(w);
    rec["ballot"] = is_ballot(w);
    rec["catalan"] = is_ballot(w) && w.size() % 2 == 0 && 2 * w.ones() == w.size();
    return rec;
}

Json perm_stats(const Permutation& p)
{
    Json rec;
    rec["permutation"] = p.str();
    rec["n"] = p.size();
    rec["descents"] = positions_text(descent_set(p));
    rec["maj"] = maj(p);
    rec["inverse"] = inverse(p).str();
    rec["maj_inverse"] = maj(inverse(p));
    rec["lis"] = lis_length(p);
    rec["involution"] = is_involution(p);
    const auto pair = rsk(p);
    rec["insertion_tableau"] = io::to_text(pair.first);
    rec["recording_tableau"] = io::to_text(pair.second);
    if (lis_length(p) <= 2) rec["phi"] = phi(p).str();
    return rec;
}

Json tableau_stats(const Tableau& t)
{
    Json rec;
    rec["rows"] = io::to_text(t);
    rec["n"] = t.size();
    std::string shape;
    for (int len : t.shape()) shape += (shape.empty() ? "" : ",") + std::to_string(len);
    rec["shape"] = shape;
    rec["columns"] = t.num_columns();
    rec["descents"] = positions_text(descent_set(t));
    rec["maj"] = maj(t);
    if (t.num_columns() <= 2) rec["halfword"] = tableau_to_halfword(t).str();
    return rec;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Catalan words, 123-avoiding permutations and the F/H q-series at q = t"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--parallel", g.parallel, "Spread verification sweeps over worker threads");
    app.add_option("--max-n", g.max_n, "Reject any n above this bound");
    app.add_flag("--timing", g.timing, "Include elapsed time in verification reports");

    std::function<int()> action;

    // enum
    auto* en = app.add_subcommand("enum", "Enumerate words, tableaux or permutations");
    en->require_subcommand(1);
    en->fallthrough();
    int n = 0;
    std::optional<std::string> family;
    auto* en_words = en->add_subcommand("words", "Catalan words of length 2n, or a half-word family");
    en_words->add_option("--n", n, "Half length");
    en_words->add_option("--family", family, "Family \"n,j,p1;p2;...\"");
    en_words->callback([&] {
        action = [&] {
            if (family) {
                const auto key = io::parse_family(*family);
                guard_n(g, key.n);
                print_list(enumerate_family(key), g.fmt(), "words", [](const HalfWord& w) { return w.str(); },
                           [](const HalfWord& w) { return w.str(); }, Json{{"family", io::to_json(key)}});
            } else {
                guard_n(g, n);
                print_list(enumerate_catalan(n), g.fmt(), "words", [](const CatalanWord& w) { return w.str(); },
                           [](const CatalanWord& w) { return w.str(); }, Json{{"n", n}});
            }
            return kExitOk;
        };
    });

    std::optional<int> j_opt;
    std::optional<std::string> descents_opt;
    auto* en_tab = en->add_subcommand("tableaux", "Two-column standard tableaux");
    en_tab->add_option("--n", n, "Number of entries")->required();
    en_tab->add_option("--j", j_opt, "Entries in the second column");
    en_tab->add_option("--descents", descents_opt, "Exact descent set, e.g. \"1,3,4,6\" (needs --j)");
    en_tab->callback([&] {
        action = [&] {
            guard_n(g, n);
            std::vector<Tableau> out;
            if (descents_opt && !j_opt) throw InvalidInput("--descents requires --j");
            if (j_opt && descents_opt)
                out = enumerate_T_D(TwoColClass{n, *j_opt, io::parse_position_set(*descents_opt)});
            else if (j_opt)
                out = enumerate_two_col(n, *j_opt);
            else
                for (int j = 0; 2 * j <= n; ++j)
                    for (auto& t : enumerate_two_col(n, j)) out.push_back(std::move(t));
            print_list(out, g.fmt(), "tableaux", [](const Tableau& t) { return io::to_text(t); },
                       [](const Tableau& t) { return io::to_json(t); }, Json{{"n", n}});
            return kExitOk;
        };
    });

    std::optional<int> lis_max;
    auto* en_perm = en->add_subcommand("perms", "Permutations, optionally with bounded LIS");
    en_perm->add_option("--n", n, "Size")->required();
    en_perm->add_option("--lis-max", lis_max, "Keep permutations whose LIS is at most K");
    en_perm->callback([&] {
        action = [&] {
            guard_n(g, n);
            if (n < 1) throw InvalidInput("--n must be at least 1");
            const auto out = enumerate_lis_at_most(n, lis_max.value_or(n));
            print_list(out, g.fmt(), "permutations", [](const Permutation& p) { return p.str(); },
                       [](const Permutation& p) { return Json(p.images()); }, Json{{"n", n}});
            return kExitOk;
        };
    });

    // map
    auto* mp = app.add_subcommand("map", "Apply phi or its inverse");
    mp->require_subcommand(1);
    mp->fallthrough();
    std::string perm_text;
    std::string word_text;
    auto* p2w = mp->add_subcommand("perm-to-word", "123-avoiding permutation -> Catalan word");
    p2w->add_option("--perm", perm_text, "One-line notation, e.g. \"7 5 6 2 1 4 3\"")->required();
    p2w->callback([&] {
        action = [&] {
            const auto p = Permutation::parse(perm_text);
            guard_n(g, p.size());
            const auto w = phi(p);
            const auto pair = rsk(p);
            const auto [w1, w2] = split_pair(w);
            Json rec{{"permutation", p.str()}, {"word", w.str()}};
            if (g.fmt() == Format::json) {
                rec["pair"] = io::to_json(pair);
                rec["halfwords"] = Json{w1.str(), w2.str()};
                std::cout << rec.dump() << "\n";
            } else if (g.fmt() == Format::csv) {
                std::cout << "permutation,word\n" << p.str() << "," << w.str() << "\n";
            } else {
                std::cout << w.str() << "\n";
            }
            return kExitOk;
        };
    });
    auto* w2p = mp->add_subcommand("word-to-perm", "Catalan word -> 123-avoiding permutation");
    w2p->add_option("--word", word_text, "0/1 string")->required();
    w2p->callback([&] {
        action = [&] {
            const auto w = CatalanWord::parse(word_text);
            guard_n(g, w.half_length());
            const auto p = phi_inverse(w);
            if (g.fmt() == Format::json)
                std::cout << Json{{"word", w.str()}, {"permutation", p.str()}}.dump() << "\n";
            else if (g.fmt() == Format::csv)
                std::cout << "word,permutation\n" << w.str() << "," << p.str() << "\n";
            else
                std::cout << p.str() << "\n";
            return kExitOk;
        };
    });

    // stats
    std::optional<std::string> st_word;
    std::optional<std::string> st_perm;
    std::optional<std::string> st_tab;
    auto* st = app.add_subcommand("stats", "Statistics of a word, permutation or tableau");
    st->fallthrough();
    auto* o_word = st->add_option("--word", st_word, "0/1 word");
    auto* o_perm = st->add_option("--perm", st_perm, "Permutation in one-line notation");
    auto* o_tab = st->add_option("--tableau-file", st_tab, "JSON file {\"rows\": [...]} (bottom row first)");
    o_word->excludes(o_perm)->excludes(o_tab);
    o_perm->excludes(o_tab);
    st->callback([&] {
        action = [&] {
            if (st_word) {
                print_record(word_stats(BinaryWord::parse(*st_word)), g.fmt());
            } else if (st_perm) {
                const auto p = Permutation::parse(*st_perm);
                guard_n(g, p.size());
                print_record(perm_stats(p), g.fmt());
            } else if (st_tab) {
                print_record(tableau_stats(io::parse_tableau_json(read_file(*st_tab))), g.fmt());
            } else {
                throw InvalidInput("stats needs one of --word, --perm, --tableau-file");
            }
            return kExitOk;
        };
    });

    // series
    auto* se = app.add_subcommand("series", "Exact q-series");
    se->require_subcommand(1);
    se->fallthrough();
    int k = 1;
    std::string variant = to_string(kShippedVariant);
    auto* se_f = se->add_subcommand("F", "F_{n,k}(q,q)");
    se_f->add_option("--n", n)->required();
    se_f->add_option("--k", k)->required();
    se_f->add_option("--variant", variant, "Reading of the outer sum (A or B)")->check(CLI::IsMember({"A", "B"}));
    se_f->callback([&] {
        action = [&] {
            guard_n(g, n);
            print_poly(F_nk(n, k, parse_variant(variant)), g.fmt());
            return kExitOk;
        };
    });
    auto* se_h = se->add_subcommand("H", "H_{n,k}(q,q)");
    se_h->add_option("--n", n)->required();
    se_h->add_option("--k", k)->required();
    se_h->callback([&] {
        action = [&] {
            guard_n(g, n);
            print_poly(H_nk(n, k), g.fmt());
            return kExitOk;
        };
    });
    auto add_series = [&](const char* name, const char* help, LaurentPoly (*fn)(int)) {
        auto* sub = se->add_subcommand(name, help);
        sub->add_option("--n", n)->required();
        sub->callback([&, fn] {
            action = [&, fn] {
                guard_n(g, n);
                print_poly(fn(n), g.fmt());
                return kExitOk;
            };
        });
    };
    add_series("theorem-lhs", "sum over CW_n of q^{maj(w)-maj(w^-1)}", &theorem_lhs);
    add_series("theorem-rhs", "sum over S_n(123) of q^{2(maj p - maj p^-1)}", &theorem_rhs);
    add_series("conjecture2", "sum over CW_n of q^{maj(w) - n des(w)}", &conjecture2_lhs);

    // verify
    auto* ve = app.add_subcommand("verify", "Run a verification check and report");
    ve->require_subcommand(1);
    ve->fallthrough();
    auto add_check = [&](const char* name, const char* help, auto run) {
        auto* sub = ve->add_subcommand(name, help);
        sub->add_option("--n", n)->required();
        sub->callback([&, run] {
            action = [&, run] {
                guard_n(g, n);
                return emit_report(run(), g);
            };
        });
        return sub;
    };
    const auto opts = [&] { return VerifyOptions{g.parallel}; };
    add_check("theorem", "Theorem identity at q", [&] { return check_theorem(n, opts()); });
    add_check("lemma1", "Class cardinalities and family partition", [&] { return check_lemma1(n); });
    add_check("lemma2", "Exchange invariance within families", [&] { return check_lemma2(n); });
    add_check("lemma3", "Per-family contribution formula", [&] { return check_lemma3(n); });
    add_check("bijection", "phi on S_n(123)", [&] { return check_bijection(n, opts()); });
    add_check("rsk", "Robinson-Schensted properties on S_n", [&] { return check_rsk(n, opts()); });
    add_check("maj-inversion", "maj(w^-1) = 2n des(w) - maj(w) on CW_n", [&] { return check_maj_inversion(n); });
    add_check("conjecture2", "q^{maj(w) - n des(w)} sum under q -> q^2 vs theorem lhs", [&] { return check_conjecture2(n); });
    auto* c1 = add_check("conjecture1", "F_{n,k}(q,q) = H_{n,k}(q,q)",
                         [&] { return check_conjecture1(n, k, parse_variant(variant)); });
    c1->add_option("--k", k)->required();
    c1->add_option("--variant", variant, "Reading of the outer sum (A or B)")->check(CLI::IsMember({"A", "B"}));
    int trials = 100;
    std::uint64_t seed = 1;
    auto* rm = add_check("random-matching", "Random within-class matchings keep the theorem sum",
                         [&] { return check_random_matchings(n, trials, seed); });
    rm->add_option("--trials", trials);
    rm->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        (void)io::parse_format(g.format);
        if (!action) throw InvalidInput("no command given");
        return action();
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const DivisibilityError& e) {
        std::cerr << "divisibility failure: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
