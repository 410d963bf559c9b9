#pragma once

// Integer homology vectors on the once-punctured torus and the SL2(Z) machinery
// used to normalize pairs of curves.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "errors.hpp"

namespace skein {

using Int = std::int64_t;

/// A raw integer vector (p, q). No sign or gcd normalization.
struct Vec2 {
    Int p = 0;
    Int q = 0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.p + b.p, a.q + b.q}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.p - b.p, a.q - b.q}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.p, -a.q}; }
    friend constexpr Vec2 operator*(Int k, Vec2 a) { return {k * a.p, k * a.q}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;
    friend constexpr auto operator<=>(Vec2, Vec2) = default;
};

inline std::string to_string(Vec2 v) {
    return "(" + std::to_string(v.p) + "," + std::to_string(v.q) + ")";
}

inline Int abs_int(Int x) { return x < 0 ? -x : x; }

/// gcd of the coordinates; gcd(0,0) = 0.
inline Int thread_degree(Vec2 v) { return std::gcd(abs_int(v.p), abs_int(v.q)); }

inline bool is_primitive(Vec2 v) { return thread_degree(v) == 1; }

/// Unoriented class representative: p > 0, or p = 0 and q >= 0.
class CurveVector {
public:
    constexpr CurveVector() = default;

    static constexpr CurveVector canonical_sign(Vec2 v) {
        if (v.p < 0 || (v.p == 0 && v.q < 0)) v = -v;
        return CurveVector(v);
    }

    /// Throws NonPrimitiveInput unless gcd(p,q) = 1.
    static CurveVector primitive(Int p, Int q) {
        const Vec2 v{p, q};
        if (!is_primitive(v)) {
            throw NonPrimitiveInput("curve " + to_string(v) + " is not primitive");
        }
        return canonical_sign(v);
    }

    [[nodiscard]] constexpr Int p() const { return v_.p; }
    [[nodiscard]] constexpr Int q() const { return v_.q; }
    [[nodiscard]] constexpr Vec2 vec() const { return v_; }
    [[nodiscard]] bool is_zero() const { return v_.p == 0 && v_.q == 0; }

    friend constexpr bool operator==(CurveVector, CurveVector) = default;
    friend constexpr auto operator<=>(CurveVector, CurveVector) = default;

private:
    constexpr explicit CurveVector(Vec2 v) : v_(v) {}
    Vec2 v_{};
};

inline std::string to_string(CurveVector c) { return to_string(c.vec()); }

struct Canonical {
    CurveVector curve;
    Int thread = 0;
};

/// Splits v = thread * curve with curve primitive and canonically signed.
/// (0,0) maps to ((0,0), 0).
inline Canonical canonicalize(Vec2 v) {
    const Int k = thread_degree(v);
    if (k == 0) return {CurveVector{}, 0};
    return {CurveVector::canonical_sign({v.p / k, v.q / k}), k};
}

/// p*s - q*r for u = (p,q), v = (r,s).
constexpr Int det_pair(Vec2 u, Vec2 v) { return u.p * v.q - u.q * v.p; }

inline Int det_pair(CurveVector u, CurveVector v) { return det_pair(u.vec(), v.vec()); }

// ---------------------------------------------------------------------------

/// Row-major [[a,b],[c,d]] with ad - bc = 1, acting on column vectors.
class SL2Matrix {
public:
    constexpr SL2Matrix() = default;

    SL2Matrix(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
        if (a * d - b * c != 1) {
            throw std::invalid_argument("SL2Matrix: determinant must be 1");
        }
    }

    static constexpr SL2Matrix identity() { return {}; }
    static SL2Matrix rotation() { return {0, -1, 1, 0}; }
    static SL2Matrix upper_shear(Int k) { return {1, k, 0, 1}; }
    static SL2Matrix lower_shear(Int k) { return {1, 0, k, 1}; }

    [[nodiscard]] constexpr Int a() const { return a_; }
    [[nodiscard]] constexpr Int b() const { return b_; }
    [[nodiscard]] constexpr Int c() const { return c_; }
    [[nodiscard]] constexpr Int d() const { return d_; }

    [[nodiscard]] constexpr Vec2 apply(Vec2 v) const {
        return {a_ * v.p + b_ * v.q, c_ * v.p + d_ * v.q};
    }

    [[nodiscard]] SL2Matrix inverse() const { return {d_, -b_, -c_, a_}; }

    friend SL2Matrix operator*(const SL2Matrix& m, const SL2Matrix& n) {
        return {m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_};
    }

    friend constexpr bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

private:
    Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

inline std::string to_string(const SL2Matrix& m) {
    return "[[" + std::to_string(m.a()) + "," + std::to_string(m.b()) + "],[" +
           std::to_string(m.c()) + "," + std::to_string(m.d()) + "]]";
}

/// Linear action followed by sign canonicalization.
inline CurveVector sl2_apply_curve(const SL2Matrix& m, CurveVector v) {
    return CurveVector::canonical_sign(m.apply(v.vec()));
}

// ---------------------------------------------------------------------------

namespace detail {

// Returns (x, y) with a*x + b*y = gcd(a, b) >= 0.
inline std::pair<Int, Int> bezout(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_s, -old_t};
    return {old_s, old_t};
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_pos(Int a, Int n) {
    const Int r = a % n;
    return r < 0 ? r + n : r;
}

inline void require_primitive(Vec2 v, const char* who) {
    if (!is_primitive(v)) {
        throw NonPrimitiveInput(std::string(who) + ": " + to_string(v) + " is not primitive");
    }
}

}  // namespace detail

/// Some M in SL2(Z) with M*u = (1,0). u must be primitive.
inline SL2Matrix sl2_send_to_x_axis(Vec2 u) {
    detail::require_primitive(u, "sl2_send_to_x_axis");
    const auto [x, y] = detail::bezout(u.p, u.q);
    return {x, y, -u.q, u.p};
}

struct NormalForm {
    SL2Matrix m;
    Int a = 0;
};

/// M*u = (1,0), M*v = (a,n) with 0 <= a < n, for primitive u, v with n = det(u,v) >= 2.
inline NormalForm sl2_normal_form(Vec2 u, Vec2 v) {
    detail::require_primitive(u, "sl2_normal_form");
    detail::require_primitive(v, "sl2_normal_form");
    const Int n = det_pair(u, v);
    if (n == 0) throw ZeroDeterminant("sl2_normal_form: parallel curves");
    if (n < 2) {
        throw std::invalid_argument("sl2_normal_form: determinant " + std::to_string(n) +
                                    " must be >= 2");
    }
    const SL2Matrix m0 = sl2_send_to_x_axis(u);
    const Vec2 w = m0.apply(v);  // (a', n)
    const Int shift = -detail::floor_div(w.p, n);
    const SL2Matrix m = SL2Matrix::upper_shear(shift) * m0;
    return {m, m.apply(v).p};
}

enum class Summand { Plus, Minus, None };

inline const char* to_string(Summand s) {
    switch (s) {
        case Summand::Plus: return "plus";
        case Summand::Minus: return "minus";
        case Summand::None: return "none";
    }
    return "?";
}

struct CurvePair {
    CurveVector alpha;
    CurveVector beta;
    Int n = 0;
    Vec2 c_plus;
    Vec2 c_minus;
    Int d_plus = 0;
    Int d_minus = 0;
    int eps = 0;  // sgn(n)
    Summand maximal_summand = Summand::None;

    /// Sign of the Frohman-Gelca exponent carried by the maximal summand:
    /// eps for C+, -eps for C-. Drives t^{sign*(n-2-2j)} in the cascade.
    [[nodiscard]] int cascade_sign() const {
        return maximal_summand == Summand::Minus ? -eps : eps;
    }

    [[nodiscard]] Vec2 maximal_vector() const {
        return maximal_summand == Summand::Minus ? c_minus : c_plus;
    }
};

inline CurvePair analyze_pair(CurveVector alpha, CurveVector beta) {
    detail::require_primitive(alpha.vec(), "analyze_pair");
    detail::require_primitive(beta.vec(), "analyze_pair");
    CurvePair cp;
    cp.alpha = alpha;
    cp.beta = beta;
    cp.n = det_pair(alpha, beta);
    if (cp.n == 0) throw ZeroDeterminant("analyze_pair: parallel curves");
    cp.c_plus = alpha.vec() + beta.vec();
    cp.c_minus = alpha.vec() - beta.vec();
    cp.d_plus = thread_degree(cp.c_plus);
    cp.d_minus = thread_degree(cp.c_minus);
    cp.eps = cp.n > 0 ? 1 : -1;
    const Int abs_n = abs_int(cp.n);
    // d_plus always divides n, so d_plus == |n| iff C+ = 0 mod |n|.
    if (cp.d_plus == abs_n) {
        cp.maximal_summand = Summand::Plus;
    } else if (cp.d_minus == abs_n) {
        cp.maximal_summand = Summand::Minus;
    }
    return cp;
}

/// M with M*c1 = (1,0) and M*c2 = +-(1,2), for primitive c1, c2 with |det| = 2.
inline SL2Matrix det2_standardize(Vec2 c1, Vec2 c2) {
    detail::require_primitive(c1, "det2_standardize");
    detail::require_primitive(c2, "det2_standardize");
    const Int n = det_pair(c1, c2);
    if (abs_int(n) != 2) {
        throw NotDetTwo("det2_standardize: |det" + to_string(c1) + to_string(c2) +
                        "| = " + std::to_string(abs_int(n)));
    }
    const SL2Matrix m0 = sl2_send_to_x_axis(c1);
    const Vec2 w = m0.apply(c2);  // (a', +-2), a' odd
    // Target (1,2) when the second row is 2, else (-1,-2) which is the same curve.
    const Int target = n > 0 ? 1 : -1;
    const Int shift = (target - w.p) / w.q;
    return SL2Matrix::upper_shear(shift) * m0;
}

inline CurveVector sl2_apply_curve(const SL2Matrix& m, Vec2 v) {
    return CurveVector::canonical_sign(m.apply(v));
}

}  // namespace skein
