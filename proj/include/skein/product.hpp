#pragma once

// Multiplication in the skein algebra of the once-punctured torus.
//
// A basis product a*b always splits as the Frohman-Gelca main part
//     t^D (u+v)_T + t^{-D} (u-v)_T,     D = det(u, v),
// (u, v the labelled vectors of a, b) plus a correction in the ideal (eta). The
// correction is known in closed form for the cases enumerated by ProductCase; any
// other pair raises UnsupportedProduct.

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "chebyshev.hpp"
#include "curves.hpp"
#include "element.hpp"
#include "errors.hpp"

namespace skein {

enum class ProductCase {
    Parallel,
    Det1,
    Det2BothSimple,
    Det2WithComposite,
    Det2ThreadedFamily,
    MaxThread,
    Unsupported,
};

inline const char* to_string(ProductCase c) {
    switch (c) {
        case ProductCase::Parallel: return "Parallel";
        case ProductCase::Det1: return "Det1";
        case ProductCase::Det2BothSimple: return "Det2BothSimple";
        case ProductCase::Det2WithComposite: return "Det2WithComposite";
        case ProductCase::Det2ThreadedFamily: return "Det2ThreadedFamily";
        case ProductCase::MaxThread: return "MaxThread";
        case ProductCase::Unsupported: return "Unsupported";
    }
    return "?";
}

/// Neither key may be the unit.
inline ProductCase classify(const BasisKey& a, const BasisKey& b) {
    if (a.is_unit() || b.is_unit()) {
        throw std::invalid_argument("classify: unit keys are scalars");
    }
    if (a.mu() == b.mu()) return ProductCase::Parallel;
    const Int full_det = abs_int(det_pair(a.full(), b.full()));
    const Int prim_det = abs_int(det_pair(a.mu(), b.mu()));
    const bool both_simple = a.is_simple() && b.is_simple();
    if (full_det == 1) return ProductCase::Det1;
    if (full_det == 2) {
        return both_simple ? ProductCase::Det2BothSimple : ProductCase::Det2WithComposite;
    }
    if (prim_det == 2 && (a.is_simple() != b.is_simple())) {
        return ProductCase::Det2ThreadedFamily;
    }
    if (both_simple && prim_det >= 2 &&
        analyze_pair(a.mu(), b.mu()).maximal_summand != Summand::None) {
        return ProductCase::MaxThread;
    }
    return ProductCase::Unsupported;
}

/// t^D (u+v)_T + t^{-D} (u-v)_T on the labelled vectors; (0,0) legs become 2.
inline SkeinElement fg_main_terms(const BasisKey& a, const BasisKey& b) {
    if (a.is_unit() || b.is_unit()) {
        throw std::invalid_argument("fg_main_terms: unit keys are scalars");
    }
    const Vec2 u = a.full();
    const Vec2 v = b.full();
    const Int d = det_pair(u, v);
    return LaurentPoly::t_power(d) * SkeinElement::from_raw(u + v) +
           LaurentPoly::t_power(-d) * SkeinElement::from_raw(u - v);
}

/// floor(min(|p|+|r|, |q|+|s|) / 2): the largest eta power a correction may carry.
inline Int eta_degree_bound(const BasisKey& a, const BasisKey& b) {
    const Vec2 u = a.full();
    const Vec2 v = b.full();
    return std::min(abs_int(u.p) + abs_int(v.p), abs_int(u.q) + abs_int(v.q)) / 2;
}

// T_m(mu) - delta_{m,0}: the unit when m = 0.
inline SkeinElement threaded_minus_delta(CurveVector mu, Int m) {
    if (m == 0) return SkeinElement::scalar(1);
    return SkeinElement::basis(BasisKey::threaded(mu, m));
}

/// eta * sum_{k=0}^{floor((n-1)/2)} (T_{n-1-2k}((1,2)) - delta) L_k.
inline SkeinElement epsilon_n(int n) {
    if (n < 1) throw std::invalid_argument("epsilon_n: n must be >= 1");
    const CurveVector c12 = CurveVector::primitive(1, 2);
    SkeinElement sum;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        sum += big_L(k) * threaded_minus_delta(c12, n - 1 - 2 * k);
    }
    return sum.eta_shift(1);
}

/// P_n = (n,2n)_T * (1,0)_T.
inline SkeinElement p_n_closed(int n) {
    if (n < 1) throw std::invalid_argument("p_n_closed: n must be >= 1");
    const auto t = LaurentPoly::t_power;
    if (n == 1) {
        return t(-2) * se_from_raw(2, 2) + t(2) * se_from_raw(0, 2) + SkeinElement::eta();
    }
    if (n == 2) {
        return t(-4) * se_from_raw(3, 4) + t(4) * se_from_raw(1, 4) +
               se_from_raw(1, 2).eta_shift(1);
    }
    return t(-2 * n) * se_from_raw(n + 1, 2 * n) + t(2 * n) * se_from_raw(n - 1, 2 * n) +
           epsilon_n(n);
}

/// G_n = sum_{j=0}^{floor((n-2)/2)} t^{eps(n-2-2j)} (T_{n-2-2j}(mu) - delta) S_j(t^2+t^-2).
/// Empty (zero) for n < 2; G_2 is the unit.
inline SkeinElement cascade_G(int n, int eps, CurveVector mu) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("cascade_G: eps must be +-1");
    if (!is_primitive(mu.vec())) throw NonPrimitiveInput("cascade_G: mu must be primitive");
    SkeinElement g;
    for (int j = 0; 2 * j <= n - 2; ++j) {
        const int m = n - 2 - 2 * j;
        g += (LaurentPoly::t_power(eps * m) * cheb_S_laurent(j)) * threaded_minus_delta(mu, m);
    }
    return g;
}

/// alpha * beta for primitive curves whose sum or difference is |n| times a primitive.
inline SkeinElement max_thread_product(CurveVector alpha, CurveVector beta) {
    const CurvePair cp = analyze_pair(alpha, beta);
    const Int n = abs_int(cp.n);
    if (n < 2 || cp.maximal_summand == Summand::None) {
        throw NotMaxThread("max_thread_product: " + to_string(alpha) + "*" + to_string(beta) +
                           " is not in the maximal-thread regime");
    }
    const CurveVector mu_star = canonicalize(cp.maximal_vector()).curve;
    const SkeinElement main =
        fg_main_terms(BasisKey::simple(alpha), BasisKey::simple(beta));
    return main + cascade_G(static_cast<int>(n), cp.cascade_sign(), mu_star).eta_shift(1);
}

namespace detail {

// T_k(mu_t) against a simple mu_s with |det(mu_s, mu_t)| = 2: move to the frame
// mu_s -> (1,0), mu_t -> (1,2), read off P_k there, and move back.
inline SkeinElement threaded_family_product(const BasisKey& a, const BasisKey& b) {
    const bool threaded_first = !a.is_simple();
    const BasisKey& th = threaded_first ? a : b;
    const BasisKey& si = threaded_first ? b : a;
    const SL2Matrix m = det2_standardize(si.mu().vec(), th.mu().vec());
    SkeinElement frame = p_n_closed(static_cast<int>(th.k()));
    // Reversing the stacking order inverts t and fixes curves and eta.
    if (!threaded_first) frame = frame.t_inverted();
    return frame.sl2_apply(m.inverse());
}

inline std::string key_label(const BasisKey& k) {
    return k.is_unit() ? std::string("1") : to_string(k.full()) + "_T";
}

}  // namespace detail

inline SkeinElement multiply_basis(const BasisKey& a, const BasisKey& b) {
    if (a.is_unit()) return SkeinElement::basis(b);
    if (b.is_unit()) return SkeinElement::basis(a);
    const ProductCase c = classify(a, b);
    // Corrections vanish outright when the eta degree bound is zero.
    const bool eta_free_by_bound = eta_degree_bound(a, b) == 0;
    switch (c) {
        case ProductCase::Parallel:
        case ProductCase::Det1:
        case ProductCase::Det2WithComposite:
            return fg_main_terms(a, b);
        case ProductCase::Det2BothSimple:
            if (eta_free_by_bound) return fg_main_terms(a, b);
            return fg_main_terms(a, b) + SkeinElement::eta();
        case ProductCase::Det2ThreadedFamily:
            if (eta_free_by_bound) return fg_main_terms(a, b);
            return detail::threaded_family_product(a, b);
        case ProductCase::MaxThread:
            if (eta_free_by_bound) return fg_main_terms(a, b);
            return max_thread_product(a.mu(), b.mu());
        case ProductCase::Unsupported:
            break;
    }
    const Int full_det = det_pair(a.full(), b.full());
    throw UnsupportedProduct(detail::key_label(a), detail::key_label(b), to_string(c),
                             "det " + std::to_string(full_det) + " of labelled vectors, det " +
                                 std::to_string(det_pair(a.mu(), b.mu())) +
                                 " of primitives; no closed form for this pair");
}

/// Bilinear extension of `basis_product` over coefficients and eta degrees.
/// Basis products are evaluated once per distinct key pair.
template <class BasisProduct>
SkeinElement multiply_with(const SkeinElement& a, const SkeinElement& b,
                           BasisProduct&& basis_product) {
    std::map<std::pair<BasisKey, BasisKey>, SkeinElement> cache;
    SkeinElement r;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            auto key = std::make_pair(ta.key, tb.key);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, basis_product(ta.key, tb.key)).first;
            r += (ca * cb) * it->second.eta_shift(ta.eta + tb.eta);
        }
    }
    return r;
}

inline SkeinElement multiply(const SkeinElement& a, const SkeinElement& b) {
    return multiply_with(a, b, [](const BasisKey& x, const BasisKey& y) {
        return multiply_basis(x, y);
    });
}

inline SkeinElement operator*(const SkeinElement& a, const SkeinElement& b) {
    return multiply(a, b);
}

}  // namespace skein
