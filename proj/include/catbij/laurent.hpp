#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "catbij/errors.hpp"

namespace catbij {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::int64_t;

namespace detail {

inline Exponent checked_add(Exponent a, Exponent b)
{
    Exponent r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent polynomial exponent overflow");
    return r;
}

inline Exponent checked_mul(Exponent a, Exponent b)
{
    Exponent r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent polynomial exponent overflow");
    return r;
}

} // namespace detail

/// Sparse Laurent polynomial in q with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c) { add_term(0, BigInt(c)); } // NOLINT: integers promote to constants

    static LaurentPoly monomial(Exponent e, BigInt c = 1)
    {
        LaurentPoly p;
        p.add_term(e, std::move(c));
        return p;
    }

    /// q
    static LaurentPoly q() { return monomial(1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Exponent min_exponent() const { return require_nonzero().begin()->first; }
    Exponent max_exponent() const { return require_nonzero().rbegin()->first; }

    BigInt coeff(Exponent e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Value at q = 1.
    BigInt coefficient_sum() const
    {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    void add_term(Exponent e, const BigInt& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// q -> q^factor (factor may be negative: factor = -1 reflects q -> 1/q).
    LaurentPoly substitute_power(Exponent factor) const
    {
        if (factor == 0) return monomial(0, coefficient_sum());
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.add_term(detail::checked_mul(e, factor), c);
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator-(const LaurentPoly& a)
    {
        LaurentPoly out;
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(detail::checked_add(ea, eb), ca * cb);
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Ascending exponents, e.g. "q^-2 + 3 + q^2", "1 - q^2", "0".
    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            first = false;
            const bool unit = mag == 1;
            if (e == 0) {
                s += mag.str();
                continue;
            }
            if (!unit) s += mag.str() + "*";
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

private:
    const Terms& require_nonzero() const
    {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
        return terms_;
    }

    Terms terms_;
};

/// num / den with no remainder. Throws DivisibilityError otherwise.
///
/// Long division from the top term down. Any exact quotient has exponents in
/// [min(num) - min(den), max(num) - max(den)], so a leading remainder term that
/// would need a quotient exponent below that window proves inexactness.
inline LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den)
{
    if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (num.is_zero()) return {};
    const Exponent floor_exp = num.min_exponent() - den.min_exponent();
    const Exponent den_top = den.max_exponent();
    const BigInt& den_lead = den.terms().rbegin()->second;

    LaurentPoly quotient;
    LaurentPoly rem = num;
    while (!rem.is_zero()) {
        const Exponent e = rem.max_exponent() - den_top;
        const BigInt& lead = rem.terms().rbegin()->second;
        if (e < floor_exp || lead % den_lead != 0)
            throw DivisibilityError("exact_div: (" + num.str() + ") is not divisible by (" + den.str() + ")");
        const auto step = LaurentPoly::monomial(e, lead / den_lead);
        quotient += step;
        rem -= step * den;
    }
    return quotient;
}

} // namespace catbij
