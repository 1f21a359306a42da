#pragma once

// Text, JSON and CSV encodings used by the command-line tool.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "catbij/errors.hpp"
#include "catbij/laurent.hpp"
#include "catbij/permutation.hpp"
#include "catbij/rsk.hpp"
#include "catbij/tableau.hpp"
#include "catbij/verify.hpp"
#include "catbij/word.hpp"

namespace catbij::io {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline Format parse_format(const std::string& s)
{
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw InvalidInput("format must be text, json or csv");
}

/// Comma (or semicolon) separated integers; empty input gives an empty list.
inline std::vector<int> parse_int_list(std::string_view text, char sep = ',')
{
    std::vector<int> out;
    std::string s(text);
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) {
        const auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw InvalidInput("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline PositionSet parse_position_set(std::string_view text, char sep = ',')
{
    auto v = parse_int_list(text, sep);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw InvalidInput("repeated position in set");
    return v;
}

/// "n,j,p1;p2;..." e.g. "7,3,2;5" or "2,0," for an empty pattern set.
inline FamilyKey parse_family(std::string_view text)
{
    const std::string s(text);
    const auto c1 = s.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(',', c1 + 1);
    if (c2 == std::string::npos) throw InvalidInput("family must look like \"n,j,p1;p2;...\"");
    const auto head = parse_int_list(s.substr(0, c2));
    if (head.size() != 2) throw InvalidInput("family must look like \"n,j,p1;p2;...\"");
    FamilyKey key{head.at(0), head.at(1), parse_position_set(s.substr(c2 + 1), ';')};
    key.validate();
    return key;
}

inline Json to_json(const FamilyKey& key) { return Json{{"n", key.n}, {"j", key.j}, {"patterns", key.patterns}}; }

inline FamilyKey family_from_json(const Json& j)
{
    FamilyKey key{j.at("n").get<int>(), j.at("j").get<int>(), j.at("patterns").get<PositionSet>()};
    std::sort(key.patterns.begin(), key.patterns.end());
    key.validate();
    return key;
}

/// {"rows": [[1,3],[2,4],[5,6],[7]]}, bottom row first.
inline Json to_json(const Tableau& t) { return Json{{"rows", t.rows()}}; }

inline Tableau tableau_from_json(const Json& j)
{
    try {
        return Tableau(j.at("rows").get<std::vector<Tableau::Row>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("tableau JSON: ") + e.what());
    }
}

inline Tableau parse_tableau_json(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("tableau JSON: ") + e.what());
    }
    return tableau_from_json(j);
}

/// {"p": <insertion tableau>, "q": <recording tableau>}.
inline Json to_json(const TableauPair& pair) { return Json{{"p", to_json(pair.first)}, {"q", to_json(pair.second)}}; }

/// Rows bottom first, separated by " / ": "1 3 / 2 4 / 5 6 / 7".
inline std::string to_text(const Tableau& t)
{
    std::string s;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) s += " / ";
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) s += (c ? " " : "") + std::to_string(t.rows()[r][c]);
    }
    return s;
}

/// {"variable":"q","terms":[{"exp":-2,"coeff":"1"}, ...]}, ascending exponents.
inline Json to_json(const LaurentPoly& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coeff", c.str()}});
    return Json{{"variable", "q"}, {"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const Json& j)
{
    LaurentPoly p;
    for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<Exponent>(), BigInt(t.at("coeff").get<std::string>()));
    return p;
}

/// "exp,coeff" header followed by one row per term, ascending exponents.
inline std::string to_csv(const LaurentPoly& p)
{
    std::string s = "exp,coeff\n";
    for (const auto& [e, c] : p.terms()) s += std::to_string(e) + "," + c.str() + "\n";
    return s;
}

inline Json to_json(const VerificationReport& r, bool timing = false)
{
    Json j{{"check", r.check}, {"parameters", r.parameters}, {"status", r.passed ? "pass" : "fail"}};
    if (!r.passed) j["witness"] = r.witness;
    j["counts"] = r.counts;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

/// Two-column "field,value" listing.
inline std::string to_csv(const VerificationReport& r, bool timing = false)
{
    auto quote = [](const std::string& v) {
        if (v.find_first_of(",\"\n") == std::string::npos) return v;
        std::string q = "\"";
        for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    std::string s = "field,value\ncheck," + r.check + "\nstatus," + (r.passed ? "pass" : "fail") + "\n";
    for (const auto& [k, v] : r.parameters) s += "param." + k + "," + quote(v) + "\n";
    for (const auto& [k, v] : r.counts) s += "count." + k + "," + std::to_string(v) + "\n";
    for (const auto& [k, v] : r.notes) s += "note." + k + "," + quote(v) + "\n";
    if (!r.passed)
        for (const auto& [k, v] : r.witness) s += "witness." + k + "," + quote(v) + "\n";
    if (timing) s += "elapsed_ms," + std::to_string(r.elapsed_ms) + "\n";
    return s;
}

inline std::string to_text(const VerificationReport& r, bool timing = false)
{
    std::string s = r.check;
    for (const auto& [k, v] : r.parameters) s += " " + k + "=" + v;
    s += r.passed ? ": PASS\n" : ": FAIL\n";
    for (const auto& [k, v] : r.counts) s += "  " + k + ": " + std::to_string(v) + "\n";
    for (const auto& [k, v] : r.notes) s += "  " + k + ": " + v + "\n";
    if (!r.passed) {
        s += "  witness:\n";
        for (const auto& [k, v] : r.witness) s += "    " + k + ": " + v + "\n";
    }
    if (timing) s += "  elapsed_ms: " + std::to_string(r.elapsed_ms) + "\n";
    return s;
}

inline std::string render(const VerificationReport& r, Format f, bool timing = false)
{
    switch (f) {
    case Format::json: return to_json(r, timing).dump(2) + "\n";
    case Format::csv: return to_csv(r, timing);
    case Format::text: break;
    }
    return to_text(r, timing);
}

} // namespace catbij::io
