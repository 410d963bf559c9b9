#pragma once

// Independent checks for the closed-form engine.
//
// The oracle multiplies with the rules that carry no threaded closed form (parallel
// curves, |det| = 1, and the |det| = 2 simple/composite rules) and refuses the rest.
// brute_force_pn and decompose_multiply are built on it alone.

#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebyshev.hpp"
#include "curves.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "product.hpp"
#include "render.hpp"

namespace skein {

inline SkeinElement restricted_multiply_basis(const BasisKey& a, const BasisKey& b) {
    if (a.is_unit() || b.is_unit()) return multiply_basis(a, b);
    const ProductCase c = classify(a, b);
    switch (c) {
        case ProductCase::Parallel:
        case ProductCase::Det1:
        case ProductCase::Det2BothSimple:
        case ProductCase::Det2WithComposite:
            return multiply_basis(a, b);
        default:
            break;
    }
    throw UnsupportedProduct(detail::key_label(a), detail::key_label(b), to_string(c),
                             "outside the rules available to the oracle");
}

inline SkeinElement restricted_multiply(const SkeinElement& a, const SkeinElement& b) {
    return multiply_with(a, b, restricted_multiply_basis);
}

// ---- term tables -------------------------------------------------------------

/// One row of an embedded element: eta degree, labelled vector ((0,0) is the unit),
/// coefficient in the text rendering.
struct TermRow {
    Int eta;
    Int p;
    Int q;
    const char* coeff;
};

inline SkeinElement basis_or_unit(Vec2 v) {
    if (v.p == 0 && v.q == 0) return SkeinElement::scalar(1);
    return SkeinElement::from_raw(v);
}

inline SkeinElement element_from_rows(std::initializer_list<TermRow> rows) {
    SkeinElement e;
    for (const auto& r : rows) {
        e += (parse_laurent(r.coeff) * basis_or_unit({r.p, r.q})).eta_shift(r.eta);
    }
    return e;
}

/// A coefficient printed as t^{shift} * numerator / (t^2 - t^{-2}), optionally with the
/// denominator written as -(t^2 - t^{-2}). T'(0,0) rows use (0,0).
struct RatioRow {
    Int eta;
    Int p;
    Int q;
    const char* numerator;
    Exponent shift = 0;
    bool negated_denominator = false;
};

inline LaurentPoly ratio_coefficient(const RatioRow& r) {
    LaurentPoly num = parse_laurent(r.numerator);
    if (r.negated_denominator) num = -num;
    return div_t2_minus_tm2(num).shifted(r.shift);
}

// ---- P_n recurrence ------------------------------------------------------------

namespace detail {

inline SkeinElement seed_p1() {
    return element_from_rows({{0, 2, 2, "t^-2"}, {0, 0, 2, "t^2"}, {1, 0, 0, "1"}});
}

inline SkeinElement seed_p2() {
    return element_from_rows({{0, 3, 4, "t^-4"}, {0, 1, 4, "t^4"}, {1, 1, 2, "1"}});
}

}  // namespace detail

/// (n,2n)_T * (1,0)_T from P_{n+1} = (1,2) P_n - P_{n-1}, seeded with P_1 and P_2.
inline SkeinElement brute_force_pn(int n) {
    if (n < 1) throw std::invalid_argument("brute_force_pn: n must be >= 1");
    SkeinElement prev = detail::seed_p1();
    if (n == 1) return prev;
    SkeinElement cur = detail::seed_p2();
    const SkeinElement step = se_from_raw(1, 2);
    for (int i = 2; i < n; ++i) {
        SkeinElement next = restricted_multiply(step, cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---- decomposition method ------------------------------------------------------

/// a * b with each threaded factor T_k(mu) expanded as the polynomial cheb_T(k) in mu.
/// Powers are accumulated one simple factor at a time, always multiplying a simple
/// curve against the running element: a threaded left factor is peeled from the right
/// end of its word, a threaded right factor from the left end.
inline SkeinElement decompose_multiply(Vec2 a, Vec2 b) {
    const Canonical ca = canonicalize(a);
    const Canonical cb = canonicalize(b);
    if (ca.thread == 0 || cb.thread == 0) {
        return multiply(SkeinElement::from_raw(a), SkeinElement::from_raw(b));
    }
    const SkeinElement mu = SkeinElement::basis(BasisKey::simple(ca.curve));
    const SkeinElement nu = SkeinElement::basis(BasisKey::simple(cb.curve));
    const IntPoly left_poly = cheb_T(static_cast<int>(ca.thread));
    const IntPoly right_poly = cheb_T(static_cast<int>(cb.thread));

    // words[j] = nu^j, built by Parallel steps only.
    std::vector<SkeinElement> right_powers{SkeinElement::scalar(1)};
    for (int j = 1; j <= right_poly.degree(); ++j) {
        right_powers.push_back(restricted_multiply(nu, right_powers.back()));
    }

    SkeinElement total;
    if (ca.thread == 1) {
        // mu * nu^j as ((mu*nu)*nu)*...: the running element always sits on the left.
        SkeinElement running = mu;
        for (int j = 0; j <= right_poly.degree(); ++j) {
            if (j > 0) running = restricted_multiply(running, nu);
            const BigInt& c = right_poly.coefficients()[static_cast<std::size_t>(j)];
            if (!c.is_zero()) total += LaurentPoly(c, 0) * running;
        }
        return total;
    }
    for (int j = 0; j <= right_poly.degree(); ++j) {
        const BigInt& d = right_poly.coefficients()[static_cast<std::size_t>(j)];
        if (d.is_zero()) continue;
        // mu^i * nu^j as mu*(mu*(...*nu^j)).
        SkeinElement running = right_powers[static_cast<std::size_t>(j)];
        for (int i = 0; i <= left_poly.degree(); ++i) {
            if (i > 0) running = restricted_multiply(mu, running);
            const BigInt& c = left_poly.coefficients()[static_cast<std::size_t>(i)];
            if (!c.is_zero()) total += LaurentPoly(c * d, 0) * running;
        }
    }
    return total;
}

// ---- fixtures ------------------------------------------------------------------

struct Fixture {
    enum class Kind { Product, Correction, ElementProduct };

    std::string name;
    Kind kind = Kind::Product;
    Vec2 left{};                 // Product
    Vec2 right{};                // Product
    int n = 0;                   // Correction: epsilon_n
    SkeinElement left_element;   // ElementProduct
    SkeinElement right_element;  // ElementProduct
    SkeinElement expected;
    std::string source;
};

inline const char* to_string(Fixture::Kind k) {
    switch (k) {
        case Fixture::Kind::Product: return "product";
        case Fixture::Kind::Correction: return "correction";
        case Fixture::Kind::ElementProduct: return "element_product";
    }
    return "?";
}

namespace detail {

inline Fixture product_fixture(std::string name, Vec2 l, Vec2 r, SkeinElement expected,
                               std::string source) {
    Fixture f;
    f.name = std::move(name);
    f.kind = Fixture::Kind::Product;
    f.left = l;
    f.right = r;
    f.expected = std::move(expected);
    f.source = std::move(source);
    return f;
}

inline Fixture correction_fixture(std::string name, int n, SkeinElement expected,
                                  std::string source) {
    Fixture f;
    f.name = std::move(name);
    f.kind = Fixture::Kind::Correction;
    f.n = n;
    f.expected = std::move(expected);
    f.source = std::move(source);
    return f;
}

inline SkeinElement element_from_ratio_rows(std::initializer_list<TermRow> plain,
                                            std::initializer_list<RatioRow> ratios) {
    SkeinElement e = element_from_rows(plain);
    for (const auto& r : ratios) {
        e += (ratio_coefficient(r) * basis_or_unit({r.p, r.q})).eta_shift(r.eta);
    }
    return e;
}

}  // namespace detail

/// The golden suite, in report order.
inline std::vector<Fixture> default_fixtures() {
    using detail::correction_fixture;
    using detail::product_fixture;
    std::vector<Fixture> fx;

    fx.push_back(product_fixture("P1", {1, 2}, {1, 0},
                                 element_from_rows({{0, 2, 2, "t^-2"},
                                                    {0, 0, 2, "t^2"},
                                                    {1, 0, 0, "1"}}),
                                 "P_n base case n=1"));
    fx.push_back(product_fixture("P2", {2, 4}, {1, 0},
                                 element_from_rows({{0, 3, 4, "t^-4"},
                                                    {0, 1, 4, "t^4"},
                                                    {1, 1, 2, "1"}}),
                                 "P_n base case n=2"));
    fx.push_back(product_fixture("P3", {3, 6}, {1, 0},
                                 element_from_rows({{0, 4, 6, "t^-6"},
                                                    {0, 2, 6, "t^6"},
                                                    {1, 0, 0, "t^4 + 1 + t^-4"},
                                                    {1, 2, 4, "1"}}),
                                 "hand expansion of P_3 by the recurrence"));
    fx.push_back(product_fixture("P4", {4, 8}, {1, 0},
                                 element_from_rows({{0, 5, 8, "t^-8"},
                                                    {0, 3, 8, "t^8"},
                                                    {1, 1, 2, "t^4 + 1 + t^-4"},
                                                    {1, 3, 6, "1"}}),
                                 "hand expansion of P_4 by the recurrence"));
    fx.push_back(product_fixture("P5", {5, 10}, {1, 0},
                                 element_from_rows({{0, 6, 10, "t^-10"},
                                                    {0, 4, 10, "t^10"},
                                                    {1, 0, 0, "t^8 + t^4 + 1 + t^-4 + t^-8"},
                                                    {1, 2, 4, "t^4 + 1 + t^-4"},
                                                    {1, 4, 8, "1"}}),
                                 "hand expansion of P_5 by the recurrence"));

    fx.push_back(correction_fixture(
        "eps3", 3, element_from_rows({{1, 0, 0, "t^4 + 1 + t^-4"}, {1, 2, 4, "1"}}),
        "correction of P_3"));
    fx.push_back(correction_fixture(
        "eps4", 4, element_from_rows({{1, 1, 2, "t^4 + 1 + t^-4"}, {1, 3, 6, "1"}}),
        "correction of P_4"));
    fx.push_back(correction_fixture(
        "eps5", 5,
        element_from_rows({{1, 0, 0, "t^8 + t^4 + 1 + t^-4 + t^-8"},
                           {1, 2, 4, "t^4 + 1 + t^-4"},
                           {1, 4, 8, "1"}}),
        "correction of P_5"));

    {
        Fixture f;
        f.name = "(1,2)*eps4";
        f.kind = Fixture::Kind::ElementProduct;
        f.left_element = se_from_raw(1, 2);
        f.right_element = element_from_rows({{1, 1, 2, "t^4 + 1 + t^-4"}, {1, 3, 6, "1"}});
        f.expected = element_from_rows({{1, 2, 4, "t^4 + 2 + t^-4"},
                                        {1, 0, 0, "2*t^4 + 2 + 2*t^-4"},
                                        {1, 4, 8, "1"}});
        f.source = "intermediate step of the P_5 expansion";
        fx.push_back(std::move(f));
    }

    fx.push_back(product_fixture("(4,3)*(0,1)", {4, 3}, {0, 1},
                                 element_from_rows({{0, 4, 2, "t^-4"},
                                                    {0, 4, 4, "t^4"},
                                                    {1, 2, 2, "t^2"},
                                                    {1, 0, 0, "t^2 + t^-2"}}),
                                 "maximal thread, n=4, plus summand"));
    fx.push_back(product_fixture("(2,1)*(3,4)", {2, 1}, {3, 4},
                                 element_from_rows({{0, 5, 5, "t^5"},
                                                    {0, -1, -3, "t^-5"},
                                                    {1, 3, 3, "t^3"},
                                                    {1, 1, 1, "t^3 + t^-1"}}),
                                 "maximal thread, n=5, plus summand"));
    fx.push_back(product_fixture("(11,67)*(3,19)", {11, 67}, {3, 19},
                                 element_from_rows({{0, 14, 86, "t^8"},
                                                    {0, 8, 48, "t^-8"},
                                                    {1, 6, 36, "t^-6"},
                                                    {1, 4, 24, "t^-2 + t^-6"},
                                                    {1, 2, 12, "t^2 + t^-2 + t^-6"},
                                                    {1, 0, 0, "t^6 + t^2 + t^-2 + t^-6"}}),
                                 "maximal thread, n=8, minus summand"));

    // The same three products written in the other normalization, where
    // T'(0,0) is the unit and coefficients are quotients by t^2 - t^-2.
    fx.push_back(product_fixture(
        "(4,3)*(0,1) T'", {4, 3}, {0, 1},
        detail::element_from_ratio_rows({{0, 4, 2, "t^-4"}, {0, 4, 4, "t^4"}, {1, 2, 2, "t^2"}},
                                        {{1, 0, 0, "-t^4 + t^-4", 0, true}}),
        "quotient form, T'(0,0) = 1"));
    fx.push_back(product_fixture(
        "(2,1)*(3,4) T'", {2, 1}, {3, 4},
        detail::element_from_ratio_rows({{0, 5, 5, "t^5"}, {0, -1, -3, "t^-5"}, {1, 3, 3, "t^3"}},
                                        {{1, 1, 1, "t^4 - t^-4", 1, false}}),
        "quotient form, T'(0,0) = 1"));
    fx.push_back(product_fixture(
        "(11,67)*(3,19) T'", {11, 67}, {3, 19},
        detail::element_from_ratio_rows({{0, 14, 86, "t^8"}, {0, 8, 48, "t^-8"}, {1, 6, 36, "t^-6"}},
                                        {{1, 0, 0, "t^8 - t^-8", 0, false},
                                         {1, 2, 12, "t^6 - t^-6", -2, false},
                                         {1, 4, 24, "t^4 - t^-4", -4, false}}),
        "quotient form, T'(0,0) = 1"));
    return fx;
}

// ---- running -------------------------------------------------------------------

struct EngineCheck {
    std::string engine;
    bool applicable = true;
    bool passed = false;
    SkeinElement actual;
    std::string error;
};

struct FixtureResult {
    std::string name;
    std::string source;
    SkeinElement expected;
    std::vector<EngineCheck> checks;

    [[nodiscard]] bool passed() const {
        for (const auto& c : checks) {
            if (c.applicable && !c.passed) return false;
        }
        return true;
    }
};

/// One line per term whose coefficient differs, in term order.
inline std::vector<std::string> term_diff(const SkeinElement& expected,
                                          const SkeinElement& actual) {
    std::map<TermKey, std::pair<LaurentPoly, LaurentPoly>> merged;
    for (const auto& [tk, c] : expected.terms()) merged[tk].first = c;
    for (const auto& [tk, c] : actual.terms()) merged[tk].second = c;
    std::vector<std::string> out;
    for (const auto& [tk, pair] : merged) {
        if (pair.first == pair.second) continue;
        std::string key = to_string(tk.key);
        if (tk.eta > 0) key += tk.eta == 1 ? " eta" : " eta^" + std::to_string(tk.eta);
        out.push_back(key + ": expected " + to_text(pair.first) + ", got " +
                      to_text(pair.second));
    }
    return out;
}

namespace detail {

inline EngineCheck run_engine(const std::string& name, const SkeinElement& expected,
                              const std::function<SkeinElement()>& fn) {
    EngineCheck c;
    c.engine = name;
    try {
        c.actual = fn();
        c.passed = c.actual == expected;
    } catch (const UnsupportedProduct& e) {
        c.applicable = false;
        c.error = e.what();
    } catch (const std::exception& e) {
        c.passed = false;
        c.error = e.what();
    }
    return c;
}

}  // namespace detail

inline FixtureResult run_fixture(const Fixture& f) {
    FixtureResult r;
    r.name = f.name;
    r.source = f.source;
    r.expected = f.expected;
    auto add = [&](const std::string& engine, const std::function<SkeinElement()>& fn,
                   bool required) {
        EngineCheck c = detail::run_engine(engine, f.expected, fn);
        // The closed-form engine must always produce an answer.
        if (required && !c.applicable) {
            c.applicable = true;
            c.passed = false;
        }
        r.checks.push_back(std::move(c));
    };
    switch (f.kind) {
        case Fixture::Kind::Product: {
            const Vec2 l = f.left;
            const Vec2 rv = f.right;
            add("closed", [&] { return multiply(se_from_raw(l), se_from_raw(rv)); }, true);
            const Canonical cl = canonicalize(l);
            if (cl.thread >= 1 && cl.curve == CurveVector::primitive(1, 2) && rv == Vec2{1, 0}) {
                const int n = static_cast<int>(cl.thread);
                add("brute_force_pn", [n] { return brute_force_pn(n); }, false);
            }
            add("decompose", [&] { return decompose_multiply(l, rv); }, false);
            break;
        }
        case Fixture::Kind::Correction: {
            const int n = f.n;
            add("closed", [n] { return epsilon_n(n); }, true);
            add("brute_force_pn", [n] { return brute_force_pn(n).eta_part(); }, false);
            break;
        }
        case Fixture::Kind::ElementProduct:
            add("closed", [&] { return multiply(f.left_element, f.right_element); }, true);
            add("restricted", [&] { return restricted_multiply(f.left_element, f.right_element); },
                false);
            break;
    }
    return r;
}

struct FixtureReport {
    std::vector<FixtureResult> results;

    [[nodiscard]] bool passed() const {
        for (const auto& r : results) {
            if (!r.passed()) return false;
        }
        return true;
    }
};

inline FixtureReport run_fixtures(const std::vector<Fixture>& fixtures) {
    FixtureReport rep;
    for (const auto& f : fixtures) rep.results.push_back(run_fixture(f));
    return rep;
}

inline FixtureReport run_fixtures() { return run_fixtures(default_fixtures()); }

inline std::string to_text(const FixtureReport& rep) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : rep.results) {
        const bool ok = r.passed();
        if (!ok) ++failed;
        os << (ok ? "PASS " : "FAIL ") << r.name << " [";
        bool first = true;
        for (const auto& c : r.checks) {
            if (!c.applicable) continue;
            os << (first ? "" : ", ") << c.engine << (c.passed ? "" : " (mismatch)");
            first = false;
        }
        os << "]\n";
        for (const auto& c : r.checks) {
            if (!c.applicable || c.passed) continue;
            if (!c.error.empty()) os << "    " << c.engine << ": " << c.error << "\n";
            for (const auto& line : term_diff(r.expected, c.actual)) {
                os << "    " << c.engine << ": " << line << "\n";
            }
        }
    }
    os << (rep.results.size() - failed) << "/" << rep.results.size() << " fixtures passed\n";
    return os.str();
}

inline nlohmann::ordered_json to_json(const FixtureReport& rep) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["status"] = r.passed() ? "pass" : "fail";
        nlohmann::ordered_json engines = nlohmann::ordered_json::object();
        for (const auto& c : r.checks) {
            engines[c.engine] = !c.applicable ? "n/a" : (c.passed ? "pass" : "fail");
        }
        j["engines"] = std::move(engines);
        if (!r.passed()) {
            j["expected"] = to_json(r.expected);
            nlohmann::ordered_json actual = nlohmann::ordered_json::object();
            nlohmann::ordered_json diff = nlohmann::ordered_json::object();
            for (const auto& c : r.checks) {
                if (!c.applicable || c.passed) continue;
                actual[c.engine] = to_json(c.actual);
                diff[c.engine] = term_diff(r.expected, c.actual);
            }
            j["actual"] = std::move(actual);
            j["diff"] = std::move(diff);
        }
        out.push_back(std::move(j));
    }
    return out;
}

// ---- fixture files -------------------------------------------------------------

inline nlohmann::ordered_json to_json(const Fixture& f) {
    nlohmann::ordered_json j;
    j["name"] = f.name;
    j["kind"] = to_string(f.kind);
    switch (f.kind) {
        case Fixture::Kind::Product:
            j["left"] = {f.left.p, f.left.q};
            j["right"] = {f.right.p, f.right.q};
            break;
        case Fixture::Kind::Correction:
            j["n"] = f.n;
            break;
        case Fixture::Kind::ElementProduct:
            j["left_element"] = to_json(f.left_element);
            j["right_element"] = to_json(f.right_element);
            break;
    }
    j["expected"] = to_json(f.expected);
    j["source"] = f.source;
    return j;
}

inline nlohmann::ordered_json fixtures_to_json(const std::vector<Fixture>& fx) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : fx) arr.push_back(to_json(f));
    nlohmann::ordered_json j;
    j["fixtures"] = std::move(arr);
    return j;
}

template <class Json>
Fixture fixture_from_json(const Json& j) {
    auto vec = [](const Json& a) {
        if (!a.is_array() || a.size() != 2) throw std::invalid_argument("expected [p,q]");
        return Vec2{a.at(0).template get<Int>(), a.at(1).template get<Int>()};
    };
    Fixture f;
    f.name = j.at("name").template get<std::string>();
    const auto kind = j.at("kind").template get<std::string>();
    if (kind == "product") {
        f.kind = Fixture::Kind::Product;
        f.left = vec(j.at("left"));
        f.right = vec(j.at("right"));
    } else if (kind == "correction") {
        f.kind = Fixture::Kind::Correction;
        f.n = j.at("n").template get<int>();
    } else if (kind == "element_product") {
        f.kind = Fixture::Kind::ElementProduct;
        f.left_element = element_from_json(j.at("left_element"));
        f.right_element = element_from_json(j.at("right_element"));
    } else {
        throw std::invalid_argument("unknown fixture kind '" + kind + "'");
    }
    f.expected = element_from_json(j.at("expected"));
    if (j.contains("source")) f.source = j.at("source").template get<std::string>();
    return f;
}

template <class Json>
std::vector<Fixture> fixtures_from_json(const Json& j) {
    std::vector<Fixture> out;
    for (const auto& f : j.at("fixtures")) out.push_back(fixture_from_json(f));
    return out;
}

}  // namespace skein
