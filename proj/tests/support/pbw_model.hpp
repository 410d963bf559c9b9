#pragma once

// A presentation of the punctured-torus skein algebra used only by the tests.
//
// Generators x = (1,0), y = (0,1), z = (1,1); every element is a Z[t^+-1]-combination
// of ordered monomials x^a y^b z^c, with the reordering rules
//     y x = t^2 x y - (t^3 - t^-1) z
//     z y = t^2 y z - (t^3 - t^-1) x
//     z x = t^-2 x z + (t - t^-3) y
// Other simple curves are reached through |det| = 1 products of smaller curves, and
// eta is read off from (1,0)*(1,2). Nothing here calls the engine's product rules.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "skein/skein.hpp"

namespace pbw {

using skein::LaurentPoly;
using Monomial = std::array<int, 3>;

class Element {
public:
    using Map = std::map<Monomial, LaurentPoly>;

    Element() = default;
    static Element constant(const LaurentPoly& c) {
        Element e;
        e.add({0, 0, 0}, c);
        return e;
    }
    static Element monomial(Monomial m, const LaurentPoly& c = 1) {
        Element e;
        e.add(m, c);
        return e;
    }

    void add(const Monomial& m, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const Map& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const LaurentPoly& c, const Element& e) {
        Element r;
        for (const auto& [m, v] : e.terms_) r.add(m, c * v);
        return r;
    }
    friend bool operator==(const Element&, const Element&) = default;

private:
    Map terms_;
};

enum Letter { X = 0, Y = 1, Z = 2 };

class Model {
public:
    Model() {
        x_ = Element::monomial({1, 0, 0});
        y_ = Element::monomial({0, 1, 0});
        z_ = Element::monomial({0, 0, 1});
        eta_ = multiply(curve(1, 0), curve(1, 2)) - LaurentPoly::t_power(2) * threaded(2, 2) -
               LaurentPoly::t_power(-2) * threaded(0, 2);
    }

    [[nodiscard]] const Element& eta() const { return eta_; }

    Element multiply(const Element& a, const Element& b) {
        Element r;
        for (const auto& [m, c] : b.terms()) {
            Element part = a;
            for (int i = 0; i < m[0]; ++i) part = times_letter(part, X);
            for (int i = 0; i < m[1]; ++i) part = times_letter(part, Y);
            for (int i = 0; i < m[2]; ++i) part = times_letter(part, Z);
            r += c * part;
        }
        return r;
    }

    /// The simple closed curve of a primitive class.
    const Element& curve(skein::Int p, skein::Int q) {
        if (p < 0 || (p == 0 && q < 0)) {
            p = -p;
            q = -q;
        }
        if (std::gcd(p, q) != 1) throw std::invalid_argument("pbw::curve: not primitive");
        const auto key = std::make_pair(p, q);
        if (auto it = curves_.find(key); it != curves_.end()) return it->second;
        Element e;
        if (key == std::pair<skein::Int, skein::Int>{1, 0}) {
            e = x_;
        } else if (key == std::pair<skein::Int, skein::Int>{0, 1}) {
            e = y_;
        } else if (key == std::pair<skein::Int, skein::Int>{1, 1}) {
            e = z_;
        } else if (key == std::pair<skein::Int, skein::Int>{1, -1}) {
            // x y = t z + t^-1 (1,-1)
            e = LaurentPoly::t_power(1) * (multiply(x_, y_) - LaurentPoly::t_power(1) * z_);
        } else {
            e = from_split(p, q);
        }
        return curves_.emplace(key, std::move(e)).first->second;
    }

    /// T_k of the primitive class of v, with T_0 = 2.
    Element threaded(skein::Int p, skein::Int q) {
        const skein::Int k = std::gcd(p, q);
        if (k == 0) return Element::constant(2);
        const Element c = curve(p / k, q / k);
        Element prev = Element::constant(2);
        Element cur = c;
        for (skein::Int i = 1; i < k; ++i) {
            Element next = multiply(c, cur) - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }

    Element eta_power(skein::Int d) {
        Element r = Element::constant(1);
        for (skein::Int i = 0; i < d; ++i) r = multiply(r, eta_);
        return r;
    }

    Element from_engine(const skein::SkeinElement& e) {
        Element r;
        for (const auto& [tk, c] : e.terms()) {
            const skein::Vec2 v = tk.key.full();
            Element basis = tk.key.is_unit() ? Element::constant(1) : threaded(v.p, v.q);
            if (tk.eta > 0) basis = multiply(basis, eta_power(tk.eta));
            r += c * basis;
        }
        return r;
    }

private:
    // (p,q) = g + d with det(g,d) = 1 and both pieces smaller; then
    // g d = t (p,q) + t^-1 (g - d).
    Element from_split(skein::Int p, skein::Int q) {
        const skein::Int ap = p < 0 ? -p : p;
        const skein::Int aq = q < 0 ? -q : q;
        bool found = false;
        skein::Int best = 0;
        skein::Vec2 g{};
        for (skein::Int r = -ap - 1; r <= ap + 1; ++r) {
            for (skein::Int s = -aq - 1; s <= aq + 1; ++s) {
                if (p * s - q * r != 1) continue;
                const skein::Vec2 d{p - r, q - s};
                const skein::Int size = std::max(std::abs(r) + std::abs(s),
                                                 std::abs(d.p) + std::abs(d.q));
                if (!found || size < best) {
                    found = true;
                    best = size;
                    g = {r, s};
                }
            }
        }
        if (!found) throw std::logic_error("pbw: no unimodular split");
        const skein::Vec2 d{p - g.p, q - g.q};
        const skein::Int e = g.p * d.q - g.q * d.p;
        const Element gd = multiply(curve(g.p, g.q), curve(d.p, d.q));
        const Element rest = LaurentPoly::t_power(-e) * curve(g.p - d.p, g.q - d.q);
        return LaurentPoly::t_power(-e) * (gd - rest);
    }

    Element times_letter(const Element& a, Letter l) {
        Element r;
        for (const auto& [m, c] : a.terms()) r += c * monomial_times(m, l);
        return r;
    }

    const Element& monomial_times(const Monomial& m, Letter l) {
        const auto key = std::make_pair(m, static_cast<int>(l));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Element r;
        const LaurentPoly t2 = LaurentPoly::t_power(2);
        const LaurentPoly tm2 = LaurentPoly::t_power(-2);
        const LaurentPoly k_yx{{3, 1}, {-1, -1}};  // t^3 - t^-1
        const LaurentPoly k_zx{{1, 1}, {-3, -1}};  // t - t^-3
        auto dec = [](Monomial v, int i) {
            --v[static_cast<std::size_t>(i)];
            return v;
        };
        if (l == Z) {
            r = Element::monomial({m[0], m[1], m[2] + 1});
        } else if (l == Y) {
            if (m[2] == 0) {
                r = Element::monomial({m[0], m[1] + 1, 0});
            } else {
                // (w z) y = t^2 (w y) z - (t^3 - t^-1) w x
                const Monomial w = dec(m, 2);
                r = t2 * times_letter(monomial_times(w, Y), Z) - k_yx * monomial_times(w, X);
            }
        } else {
            if (m[2] > 0) {
                // (w z) x = t^-2 (w x) z + (t - t^-3) w y
                const Monomial w = dec(m, 2);
                r = tm2 * times_letter(monomial_times(w, X), Z) + k_zx * monomial_times(w, Y);
            } else if (m[1] > 0) {
                // (w y) x = t^2 (w x) y - (t^3 - t^-1) w z
                const Monomial w = dec(m, 1);
                r = t2 * times_letter(monomial_times(w, X), Y) - k_yx * monomial_times(w, Z);
            } else {
                r = Element::monomial({m[0] + 1, 0, 0});
            }
        }
        return memo_.emplace(key, std::move(r)).first->second;
    }

    Element x_, y_, z_, eta_;
    std::map<std::pair<skein::Int, skein::Int>, Element> curves_;
    std::map<std::pair<Monomial, int>, Element> memo_;
};

}  // namespace pbw
