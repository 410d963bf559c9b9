#pragma once

// Chebyshev families used by the product rules. T uses the T_0 = 2 normalization
// throughout; T' (T'_0 = 1) exists only for display and comparison.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace skein {

/// Polynomial in an abstract variable x, dense by degree. Trailing zeros are trimmed.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(BigInt c) { return IntPoly({std::move(c)}); }
    static IntPoly x() { return IntPoly({0, 1}); }

    [[nodiscard]] const std::vector<BigInt>& coefficients() const { return c_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }

    [[nodiscard]] BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(r));
    }

    /// Multiplication by x.
    [[nodiscard]] IntPoly times_x() const {
        if (is_zero()) return {};
        std::vector<BigInt> r;
        r.reserve(c_.size() + 1);
        r.emplace_back(0);
        r.insert(r.end(), c_.begin(), c_.end());
        return IntPoly(std::move(r));
    }

    /// Horner evaluation at a Laurent polynomial.
    [[nodiscard]] LaurentPoly evaluate(const LaurentPoly& at) const {
        LaurentPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + LaurentPoly(*it, 0);
        }
        return acc;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

inline std::string to_text(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const BigInt c = p[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        const std::string xs = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
        if (d == 0) out += mag.str();
        else if (mag == 1) out += xs;
        else out += mag.str() + xs;
    }
    return out;
}

/// T_0 = 2, T_1 = x, T_k = x T_{k-1} - T_{k-2}.
inline IntPoly cheb_T(int k) {
    if (k < 0) throw std::invalid_argument("cheb_T: negative index");
    IntPoly prev = IntPoly::constant(2);
    if (k == 0) return prev;
    IntPoly cur = IntPoly::x();
    for (int i = 1; i < k; ++i) {
        IntPoly next = cur.times_x() - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// T'_0 = 1; T'_k = T_k for k >= 1.
inline IntPoly cheb_T_prime(int k) { return k == 0 ? IntPoly::constant(1) : cheb_T(k); }

/// S_0 = 1, S_1 = x, S_{j+1} = x S_j - S_{j-1}.
inline IntPoly cheb_S(int j) {
    if (j < 0) throw std::invalid_argument("cheb_S: negative index");
    IntPoly prev = IntPoly::constant(1);
    if (j == 0) return prev;
    IntPoly cur = IntPoly::x();
    for (int i = 1; i < j; ++i) {
        IntPoly next = cur.times_x() - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// t^2 + t^{-2}.
inline LaurentPoly quantum_x() { return LaurentPoly{{2, 1}, {-2, 1}}; }

/// S_j(t^2 + t^{-2}), by the three-term recurrence in Laurent arithmetic.
inline LaurentPoly cheb_S_laurent(int j) {
    if (j < 0) throw std::invalid_argument("cheb_S_laurent: negative index");
    const LaurentPoly x = quantum_x();
    LaurentPoly prev = 1;
    if (j == 0) return prev;
    LaurentPoly cur = x;
    for (int i = 1; i < j; ++i) {
        LaurentPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// L_k = sum_{l=-k}^{k} t^{4l}.
inline LaurentPoly big_L(int k) {
    if (k < 0) throw std::invalid_argument("big_L: negative index");
    LaurentPoly r;
    for (Exponent l = -k; l <= k; ++l) r.add_term(4 * l, 1);
    return r;
}

/// sum_{l=0}^{k} S_{2l}(t^2 + t^{-2}). Since S_{2l} = L_l this is L_0 + ... + L_k, which
/// differs from L_k once k >= 1.
inline LaurentPoly big_L_via_S(int k) {
    if (k < 0) throw std::invalid_argument("big_L_via_S: negative index");
    LaurentPoly r;
    for (int l = 0; l <= k; ++l) r += cheb_S_laurent(2 * l);
    return r;
}

}  // namespace skein
