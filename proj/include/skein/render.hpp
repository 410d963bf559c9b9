#pragma once

// Text, LaTeX and JSON renderings of SkeinElement, plus the JSON reader.
//
// Terms appear in TermKey order: eta degree ascending, then the unit, then primitives
// in descending (p,q), then thread degree. Curves print as their labelled vector, so
// T_2((2,3)) is "(4,6)" in text and "(4,6)_T" in LaTeX.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "element.hpp"
#include "laurent.hpp"

namespace skein {

enum class Format { Text, Json, Latex };

/// T0 keeps the unit implicit (2 prints as "2"); Tprime names it T'(0,0).
enum class Normalization { T0, Tprime };

inline Format parse_format(std::string_view s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

inline Normalization parse_normalization(std::string_view s) {
    if (s == "T0" || s == "t0") return Normalization::T0;
    if (s == "Tprime" || s == "tprime" || s == "T'") return Normalization::Tprime;
    throw std::invalid_argument("unknown normalization '" + std::string(s) + "'");
}

namespace detail {

struct RenderedTerm {
    bool negative = false;
    std::string body;
};

inline LaurentPoly abs_monomial(const LaurentPoly& c) {
    const auto& [e, v] = *c.terms().begin();
    return LaurentPoly::monomial(v < 0 ? BigInt(-v) : v, e);
}

inline bool monomial_negative(const LaurentPoly& c) { return c.terms().begin()->second < 0; }

inline bool is_plus_minus_one(const LaurentPoly& c) {
    return c.is_monomial() && c.min_exponent() == 0 && abs(c.terms().begin()->second) == 1;
}

inline std::string text_key(const BasisKey& k, Normalization norm) {
    if (!k.is_unit()) return to_string(k.full());
    return norm == Normalization::Tprime ? "T'(0,0)" : "";
}

inline RenderedTerm text_term(const TermKey& tk, const LaurentPoly& c, Normalization norm,
                              bool sole_term) {
    std::vector<std::string> factors;
    const std::string key = text_key(tk.key, norm);
    if (!key.empty()) factors.push_back(key);
    if (tk.eta == 1) factors.emplace_back("eta");
    if (tk.eta > 1) factors.push_back("eta^" + std::to_string(tk.eta));

    RenderedTerm r;
    std::string coeff;
    if (c.is_monomial()) {
        r.negative = monomial_negative(c);
        if (!(is_plus_minus_one(c) && !factors.empty())) coeff = to_text(abs_monomial(c));
    } else if (factors.empty() && sole_term) {
        coeff = to_text(c);
    } else {
        coeff = "(" + to_text(c) + ")";
    }
    if (!coeff.empty()) factors.insert(factors.begin(), coeff);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) r.body += "*";
        r.body += factors[i];
    }
    return r;
}

// `flat_unit` splices a multi-term unit coefficient without parentheses (inside an eta group).
inline RenderedTerm latex_term(const BasisKey& k, const LaurentPoly& c, Normalization norm,
                               bool flat_unit) {
    RenderedTerm r;
    const bool implicit_unit = k.is_unit() && norm == Normalization::T0;
    const std::string key =
        implicit_unit ? "" : (k.is_unit() ? "T'(0,0)" : to_string(k.full()) + "_T");
    if (c.is_monomial()) {
        r.negative = monomial_negative(c);
        const bool drop_one = is_plus_minus_one(c) && !key.empty();
        r.body = (drop_one ? "" : to_latex(abs_monomial(c))) + key;
    } else if (implicit_unit && flat_unit) {
        r.body = to_latex(c);
    } else {
        r.body = "(" + to_latex(c) + ")" + key;
    }
    return r;
}

inline void append_signed(std::string& out, const RenderedTerm& t, std::string_view plus,
                          std::string_view minus) {
    if (out.empty()) {
        if (t.negative) out += "-";
    } else {
        out += t.negative ? minus : plus;
    }
    out += t.body;
}

}  // namespace detail

/// Parseable text: "t^-2*(2,2) + t^2*(0,2) + eta".
inline std::string to_text(const SkeinElement& e, Normalization norm = Normalization::T0) {
    if (e.is_zero()) return "0";
    std::string out;
    const bool sole = e.size() == 1;
    for (const auto& [tk, c] : e.terms()) {
        detail::append_signed(out, detail::text_term(tk, c, norm, sole), " + ", " - ");
    }
    return out;
}

/// "t^{-6}(4,6)_T + t^{6}(2,6)_T + (t^{4}+1+t^{-4}+(2,4)_T)\eta".
inline std::string to_latex(const SkeinElement& e, Normalization norm = Normalization::T0) {
    if (e.is_zero()) return "0";
    std::string out;
    const Int top = e.max_eta_degree();
    for (Int d = 0; d <= top; ++d) {
        const SkeinElement group = e.eta_component(d);
        if (group.is_zero()) continue;
        if (d == 0) {
            for (const auto& [tk, c] : group.terms()) {
                detail::append_signed(out, detail::latex_term(tk.key, c, norm, false), " + ",
                                      " - ");
            }
            continue;
        }
        const std::string eta = d == 1 ? "\\eta" : "\\eta^{" + std::to_string(d) + "}";
        detail::RenderedTerm g;
        const auto& [tk0, c0] = *group.terms().begin();
        if (group.size() == 1 && c0.is_monomial()) {
            g = detail::latex_term(tk0.key, c0, norm, false);
            // A bare "1" before eta is dropped.
            if (g.body == "1") g.body.clear();
            g.body += eta;
        } else {
            std::string inner;
            for (const auto& [tk, c] : group.terms()) {
                detail::append_signed(inner, detail::latex_term(tk.key, c, norm, true), "+", "-");
            }
            g.body = "(" + inner + ")" + eta;
        }
        detail::append_signed(out, g, " + ", " - ");
    }
    return out;
}

inline nlohmann::ordered_json to_json(const BasisKey& k) {
    nlohmann::ordered_json j;
    if (k.is_unit()) {
        j["unit"] = true;
    } else {
        j["mu"] = {k.mu().p(), k.mu().q()};
        j["k"] = k.k();
    }
    return j;
}

inline nlohmann::ordered_json to_json(const SkeinElement& e) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [tk, c] : e.terms()) {
        nlohmann::ordered_json t;
        t["eta"] = tk.eta;
        t["key"] = to_json(tk.key);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

template <class Json>
BasisKey basis_key_from_json(const Json& j) {
    if (j.contains("unit")) {
        if (!j.at("unit").template get<bool>()) {
            throw std::invalid_argument("key: \"unit\" must be true when present");
        }
        return BasisKey::unit();
    }
    const auto& mu = j.at("mu");
    if (!mu.is_array() || mu.size() != 2) throw std::invalid_argument("key: mu must be [p,q]");
    const Int p = mu.at(0).template get<Int>();
    const Int q = mu.at(1).template get<Int>();
    return BasisKey::threaded(CurveVector::primitive(p, q), j.at("k").template get<Int>());
}

template <class Json>
SkeinElement element_from_json(const Json& j) {
    SkeinElement e;
    for (const auto& t : j.at("terms")) {
        e.add_term(t.at("eta").template get<Int>(), basis_key_from_json(t.at("key")),
                   laurent_from_json(t.at("coeff")));
    }
    return e;
}

inline std::string render(const SkeinElement& e, Format f,
                          Normalization norm = Normalization::T0) {
    switch (f) {
        case Format::Text: return to_text(e, norm);
        case Format::Latex: return to_latex(e, norm);
        case Format::Json: return to_json(e).dump(2);
    }
    return {};
}

}  // namespace skein
