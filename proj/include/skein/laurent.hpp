#pragma once

// Exact sparse Laurent polynomials in one variable t over the integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Exponent = std::int64_t;

class LaurentPoly {
public:
    using TermMap = std::map<Exponent, BigInt>;

    LaurentPoly() = default;

    // Integer constant.
    LaurentPoly(int c) : LaurentPoly(BigInt(c), 0) {}  // NOLINT(google-explicit-constructor)

    LaurentPoly(BigInt coeff, Exponent exp) {
        if (!coeff.is_zero()) terms_.emplace(exp, std::move(coeff));
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents accumulate.
    LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
        for (const auto& [e, c] : terms) add_term(e, BigInt(c));
    }

    static LaurentPoly monomial(BigInt coeff, Exponent exp) { return {std::move(coeff), exp}; }
    static LaurentPoly t_power(Exponent exp) { return {BigInt(1), exp}; }

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }

    [[nodiscard]] BigInt coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Callers must check is_zero() first.
    [[nodiscard]] Exponent min_exponent() const { return terms_.begin()->first; }
    [[nodiscard]] Exponent max_exponent() const { return terms_.rbegin()->first; }

    void add_term(Exponent e, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator-(LaurentPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        }
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplication by t^d.
    [[nodiscard]] LaurentPoly shifted(Exponent d) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + d, c);
        return r;
    }

    /// Substitution t -> t^{-1}.
    [[nodiscard]] LaurentPoly inverted() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    [[nodiscard]] bool is_symmetric() const { return inverted() == *this; }

    [[nodiscard]] BigRational evaluate(const BigRational& t) const {
        BigRational sum = 0;
        for (const auto& [e, c] : terms_) {
            BigRational p = 1;
            const BigRational base = e >= 0 ? t : BigRational(1) / t;
            for (Exponent i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
            sum += BigRational(c) * p;
        }
        return sum;
    }

private:
    TermMap terms_;
};

/// Exact quotient by t^2 - t^{-2}. Throws std::domain_error if the remainder is nonzero.
inline LaurentPoly div_t2_minus_tm2(const LaurentPoly& num) {
    LaurentPoly rem = num;
    LaurentPoly quot;
    const LaurentPoly divisor{{2, 1}, {-2, -1}};
    while (!rem.is_zero()) {
        const Exponent top = rem.max_exponent();
        // The divisor spans four exponent units; anything narrower is a remainder.
        if (top - rem.min_exponent() < 4) {
            throw std::domain_error("div_t2_minus_tm2: nonzero remainder");
        }
        LaurentPoly q = LaurentPoly::monomial(rem.coefficient(top), top - 2);
        quot += q;
        rem -= q * divisor;
    }
    return quot;
}

// ---- rendering -------------------------------------------------------------

namespace detail {

inline std::string exp_text(Exponent e) { return e == 1 ? "t" : "t^" + std::to_string(e); }
inline std::string exp_latex(Exponent e) {
    return e == 1 ? "t" : "t^{" + std::to_string(e) + "}";
}

// Renders terms in descending exponent order. `mul` separates coefficient and t-power.
template <class ExpFn>
std::string render_poly(const LaurentPoly& p, ExpFn exp_fn, std::string_view plus,
                        std::string_view minus, std::string_view mul) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? minus : plus;
        }
        first = false;
        if (e == 0) {
            out += mag.str();
        } else if (mag == 1) {
            out += exp_fn(e);
        } else {
            out += mag.str();
            out += mul;
            out += exp_fn(e);
        }
    }
    return out;
}

}  // namespace detail

/// Plain text, descending exponents: "t^4 + 1 + t^-4", "2*t^2 - t".
inline std::string to_text(const LaurentPoly& p) {
    return detail::render_poly(p, detail::exp_text, " + ", " - ", "*");
}

inline std::string to_latex(const LaurentPoly& p) {
    return detail::render_poly(p, detail::exp_latex, "+", "-", "");
}

/// {"4":"1","0":"1","-4":"1"}; keys appear in descending exponent order.
inline nlohmann::ordered_json to_json(const LaurentPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        j[std::to_string(it->first)] = it->second.str();
    }
    return j;
}

template <class Json>
LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("laurent JSON must be an object");
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Exponent e = std::stoll(it.key());
        const std::string c = it.value().template get<std::string>();
        p.add_term(e, BigInt(c));
    }
    return p;
}

/// Parses the text rendering back ("t^4 + 1 + t^-4", "2*t^-2 - 3", "-t"). Also accepts
/// juxtaposed coefficients such as "2t^2".
inline LaurentPoly parse_laurent(std::string_view s) {
    LaurentPoly out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string("parse_laurent: ") + what + " at offset " +
                                    std::to_string(i) + " in '" + std::string(s) + "'");
    };
    auto read_int = [&]() -> std::string {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected digits");
        return std::string(s.substr(start, i - start));
    };
    skip();
    if (i == s.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        BigInt coeff = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = BigInt(read_int());
            have_coeff = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        Exponent e = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    esign = s[i] == '-' ? -1 : 1;
                    ++i;
                }
                e = esign * std::stoll(read_int());
            }
        } else if (!have_coeff) {
            fail("expected a term");
        }
        out.add_term(e, sign * coeff);
    }
    return out;
}

}  // namespace skein
