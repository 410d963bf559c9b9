#pragma once

// eta-graded linear combinations of T-basis elements over Z[t, t^{-1}].

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "curves.hpp"
#include "laurent.hpp"

namespace skein {

/// Either the unit, or T_k(mu) with mu primitive and canonically signed, k >= 1.
/// T_0 never appears as a key: it is stored as 2 * unit.
class BasisKey {
public:
    static BasisKey unit() { return BasisKey(); }

    static BasisKey threaded(CurveVector mu, Int k) {
        if (k < 1) throw std::invalid_argument("BasisKey: thread degree must be >= 1");
        if (!is_primitive(mu.vec())) {
            throw NonPrimitiveInput("BasisKey: " + to_string(mu) + " is not primitive");
        }
        return BasisKey(mu, k);
    }

    static BasisKey simple(CurveVector mu) { return threaded(mu, 1); }

    [[nodiscard]] bool is_unit() const { return k_ == 0; }
    [[nodiscard]] bool is_simple() const { return k_ == 1; }
    [[nodiscard]] CurveVector mu() const { return mu_; }
    [[nodiscard]] Int k() const { return k_; }

    /// The labelled vector k*mu ("(kp,kq)_T"); (0,0) for the unit.
    [[nodiscard]] Vec2 full() const { return k_ * mu_.vec(); }

    friend bool operator==(const BasisKey&, const BasisKey&) = default;

    // Display order: unit first, then primitives in descending (p,q), then thread degree.
    friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
        if (a.is_unit() || b.is_unit()) return b.is_unit() <=> a.is_unit();
        if (auto c = b.mu_ <=> a.mu_; c != 0) return c;
        return a.k_ <=> b.k_;
    }

private:
    BasisKey() = default;
    BasisKey(CurveVector mu, Int k) : mu_(mu), k_(k) {}

    CurveVector mu_{};
    Int k_ = 0;
};

/// "(kp,kq)" for threaded keys, "1" for the unit.
inline std::string to_string(const BasisKey& k) {
    return k.is_unit() ? std::string("1") : to_string(k.full());
}

struct TermKey {
    Int eta = 0;
    BasisKey key = BasisKey::unit();

    friend bool operator==(const TermKey&, const TermKey&) = default;
    friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
        if (auto c = a.eta <=> b.eta; c != 0) return c;
        return a.key <=> b.key;
    }
};

class SkeinElement {
public:
    using TermMap = std::map<TermKey, LaurentPoly>;

    SkeinElement() = default;

    static SkeinElement scalar(LaurentPoly c) {
        SkeinElement e;
        e.add_term(0, BasisKey::unit(), std::move(c));
        return e;
    }

    static SkeinElement basis(const BasisKey& k, LaurentPoly c = 1) {
        SkeinElement e;
        e.add_term(0, k, std::move(c));
        return e;
    }

    static SkeinElement eta(Int degree = 1) {
        SkeinElement e;
        e.add_term(degree, BasisKey::unit(), 1);
        return e;
    }

    /// Curve with homology class v: T_gcd(v)(v / gcd(v)); (0,0) gives T_0 = 2.
    static SkeinElement from_raw(Vec2 v) {
        const auto [mu, k] = canonicalize(v);
        if (k == 0) return scalar(2);
        return basis(BasisKey::threaded(mu, k));
    }

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] LaurentPoly coefficient(Int eta, const BasisKey& k) const {
        auto it = terms_.find(TermKey{eta, k});
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    void add_term(Int eta, const BasisKey& k, const LaurentPoly& c) {
        if (eta < 0) throw std::invalid_argument("SkeinElement: negative eta degree");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(TermKey{eta, k}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SkeinElement& operator+=(const SkeinElement& o) {
        for (const auto& [tk, c] : o.terms_) add_term(tk.eta, tk.key, c);
        return *this;
    }

    SkeinElement& operator-=(const SkeinElement& o) {
        for (const auto& [tk, c] : o.terms_) add_term(tk.eta, tk.key, -c);
        return *this;
    }

    friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
    friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }

    friend SkeinElement operator-(SkeinElement a) {
        for (auto& [tk, c] : a.terms_) c = -c;
        return a;
    }

    /// Scalar action of Z[t, t^{-1}].
    friend SkeinElement operator*(const LaurentPoly& c, const SkeinElement& e) {
        SkeinElement r;
        if (c.is_zero()) return r;
        for (const auto& [tk, v] : e.terms_) r.add_term(tk.eta, tk.key, c * v);
        return r;
    }

    friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

    /// Multiplication by eta^d (eta is central).
    [[nodiscard]] SkeinElement eta_shift(Int d) const {
        if (d < 0) throw std::invalid_argument("eta_shift: negative degree");
        SkeinElement r;
        for (const auto& [tk, c] : terms_) r.terms_.emplace(TermKey{tk.eta + d, tk.key}, c);
        return r;
    }

    /// Relabels every T_k(mu) as T_k(M mu); unit, coefficients and eta degrees are fixed.
    [[nodiscard]] SkeinElement sl2_apply(const SL2Matrix& m) const {
        SkeinElement r;
        for (const auto& [tk, c] : terms_) {
            const BasisKey k =
                tk.key.is_unit() ? tk.key
                                 : BasisKey::threaded(sl2_apply_curve(m, tk.key.mu()), tk.key.k());
            r.add_term(tk.eta, k, c);
        }
        return r;
    }

    /// Substitutes t -> t^{-1} in every coefficient.
    [[nodiscard]] SkeinElement t_inverted() const {
        SkeinElement r;
        for (const auto& [tk, c] : terms_) r.terms_.emplace(tk, c.inverted());
        return r;
    }

    [[nodiscard]] Int max_eta_degree() const {
        Int m = 0;
        for (const auto& [tk, c] : terms_) m = std::max(m, tk.eta);
        return m;
    }

    /// Terms with exactly the given eta degree, as an eta-free element.
    [[nodiscard]] SkeinElement eta_component(Int d) const {
        SkeinElement r;
        for (const auto& [tk, c] : terms_) {
            if (tk.eta == d) r.terms_.emplace(TermKey{0, tk.key}, c);
        }
        return r;
    }

    /// Terms with eta degree >= 1.
    [[nodiscard]] SkeinElement eta_part() const {
        SkeinElement r;
        for (const auto& [tk, c] : terms_) {
            if (tk.eta >= 1) r.terms_.emplace(tk, c);
        }
        return r;
    }

private:
    TermMap terms_;
};

inline SkeinElement se_from_raw(Vec2 v) { return SkeinElement::from_raw(v); }
inline SkeinElement se_from_raw(Int p, Int q) { return SkeinElement::from_raw({p, q}); }

}  // namespace skein
