#pragma once

// Property checks over the engine. Each returns a CheckResult; the CLI `verify`
// command and the acceptance suite run them with their own sample sizes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chebyshev.hpp"
#include "curves.hpp"
#include "element.hpp"
#include "expression.hpp"
#include "oracle.hpp"
#include "product.hpp"
#include "render.hpp"

namespace skein {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> failures;  // first few only

    void fail(std::string what) {
        passed = false;
        if (failures.size() < 8) failures.push_back(std::move(what));
    }
};

inline std::string to_text(const CheckResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
    for (const auto& f : r.failures) os << "    " << f << "\n";
    return os.str();
}

// ---- random inputs ---------------------------------------------------------------

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

/// Primitive vector with coordinates in [-bound, bound], canonically signed.
inline CurveVector random_primitive(Rng& rng, Int bound) {
    while (true) {
        const Vec2 v{uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
        if (is_primitive(v)) return CurveVector::canonical_sign(v);
    }
}

/// Product of `factors` elementary shears with entries in [-2, 2].
inline SL2Matrix random_sl2(Rng& rng, int factors = 3) {
    SL2Matrix m;
    for (int i = 0; i < factors; ++i) {
        const Int k = uniform(rng, -2, 2);
        m = (uniform(rng, 0, 1) ? SL2Matrix::upper_shear(k) : SL2Matrix::lower_shear(k)) * m;
    }
    return m;
}

/// Some w with det(u, w) = 1.
inline Vec2 unimodular_partner(Vec2 u) {
    const auto [x, y] = detail::bezout(u.p, u.q);
    // p*x + q*y = 1, so det((p,q), (-y, x)) = p*x + q*y.
    return {-y, x};
}

/// Primitive (u, v) with |det(u, v)| = 2, in random order and orientation.
inline std::pair<CurveVector, CurveVector> random_det2_pair(Rng& rng, Int bound) {
    const CurveVector u = random_primitive(rng, bound);
    const Vec2 w = unimodular_partner(u.vec());
    const Int a = 2 * uniform(rng, -3, 3) + 1;
    CurveVector v = CurveVector::canonical_sign(a * u.vec() + 2 * w);
    if (uniform(rng, 0, 1)) return {v, u};
    return {u, v};
}

/// Primitive (u, v) in the maximal-thread regime with |det| = n.
inline std::pair<CurveVector, CurveVector> random_max_thread_pair(Rng& rng, Int bound, Int n) {
    const CurveVector u = random_primitive(rng, bound);
    const Vec2 w = unimodular_partner(u.vec());
    const Int sign = uniform(rng, 0, 1) ? 1 : -1;
    const Vec2 v = sign * u.vec() + n * w;
    const CurveVector cv = CurveVector::canonical_sign(v);
    if (uniform(rng, 0, 1)) return {cv, u};
    return {u, cv};
}

// ---- P_n -----------------------------------------------------------------------

/// p_n_closed(n) = brute_force_pn(n) = decompose_multiply((n,2n),(1,0)).
inline CheckResult check_pn_cross_engine(int max_n) {
    CheckResult r{"P_n closed form = recurrence oracle = decomposition, n <= " +
                  std::to_string(max_n)};
    for (int n = 1; n <= max_n; ++n) {
        ++r.cases;
        const SkeinElement closed = p_n_closed(n);
        if (closed != brute_force_pn(n)) r.fail("n=" + std::to_string(n) + ": recurrence differs");
        if (closed != decompose_multiply({n, 2 * n}, {1, 0})) {
            r.fail("n=" + std::to_string(n) + ": decomposition differs");
        }
    }
    return r;
}

/// P_{n+1} = (1,2) P_n - P_{n-1} with the right side multiplied by the oracle rules.
inline CheckResult check_pn_recurrence(int max_n) {
    CheckResult r{"P_{n+1} = (1,2)*P_n - P_{n-1}, 2 <= n <= " + std::to_string(max_n)};
    const SkeinElement step = se_from_raw(1, 2);
    for (int n = 2; n <= max_n; ++n) {
        ++r.cases;
        const SkeinElement rhs = restricted_multiply(step, p_n_closed(n)) - p_n_closed(n - 1);
        if (rhs != p_n_closed(n + 1)) r.fail("n=" + std::to_string(n));
    }
    return r;
}

/// eps_{n+1} - ((1,2) eps_n - eps_{n-1}) is (t^{2n} + t^{-2n}) eta for even n and 0 for odd n.
inline CheckResult check_new_eta_parity(int max_n) {
    CheckResult r{"new eta in the recurrence appears exactly for even n, 2 <= n <= " +
                  std::to_string(max_n)};
    const SkeinElement step = se_from_raw(1, 2);
    for (int n = 2; n <= max_n; ++n) {
        ++r.cases;
        const SkeinElement created =
            epsilon_n(n + 1) - (restricted_multiply(step, epsilon_n(n)) - epsilon_n(n - 1));
        const SkeinElement want =
            n % 2 == 0 ? (LaurentPoly::t_power(2 * n) + LaurentPoly::t_power(-2 * n)) *
                             SkeinElement::eta()
                       : SkeinElement{};
        if (created != want) r.fail("n=" + std::to_string(n) + ": got " + to_text(created));
    }
    return r;
}

/// gcd(n+1, 2n) is 1 for even n and 2 for odd n; det((1,2),(n+-1,2n)) = -+2.
inline CheckResult check_gcd_parity(Int max_n) {
    CheckResult r{"gcd(n+1,2n) parity and constant determinant, n <= " + std::to_string(max_n)};
    for (Int n = 1; n <= max_n; ++n) {
        ++r.cases;
        const Int g = thread_degree({n + 1, 2 * n});
        if (g != (n % 2 == 0 ? 1 : 2)) r.fail("gcd at n=" + std::to_string(n));
        if (det_pair(Vec2{1, 2}, Vec2{n + 1, 2 * n}) != -2 ||
            det_pair(Vec2{1, 2}, Vec2{n - 1, 2 * n}) != 2) {
            r.fail("determinant at n=" + std::to_string(n));
        }
    }
    return r;
}

// ---- cascade ---------------------------------------------------------------------

/// mu * G_n - (t^eps G_{n-1} + t^-eps G_{n+1} - t^{-eps n}), mu = (0,1).
inline SkeinElement cascade_residual(int n, int eps) {
    const CurveVector mu = CurveVector::primitive(0, 1);
    const SkeinElement lhs = multiply(SkeinElement::basis(BasisKey::simple(mu)),
                                      cascade_G(n, eps, mu));
    const SkeinElement rhs = LaurentPoly::t_power(eps) * cascade_G(n - 1, eps, mu) +
                             LaurentPoly::t_power(-eps) * cascade_G(n + 1, eps, mu) -
                             SkeinElement::scalar(LaurentPoly::t_power(-eps * n));
    return lhs - rhs;
}

/// The cascade identity with its constant term present only for odd n. For even n
/// the residual against the uncorrected identity is exactly t^{-eps n}.
inline CheckResult check_cascade_identity(int max_n) {
    CheckResult r{"mu*G_n = t^e G_{n-1} + t^-e G_{n+1} - [n odd] t^{-e n}, 2 <= n <= " +
                  std::to_string(max_n)};
    for (int eps : {1, -1}) {
        for (int n = 2; n <= max_n; ++n) {
            ++r.cases;
            const SkeinElement res = cascade_residual(n, eps);
            const SkeinElement want =
                n % 2 == 0 ? SkeinElement::scalar(LaurentPoly::t_power(-eps * n)) : SkeinElement{};
            if (res != want) {
                r.fail("n=" + std::to_string(n) + " eps=" + std::to_string(eps) +
                       ": residual " + to_text(res));
            }
        }
    }
    return r;
}

// ---- coefficients ----------------------------------------------------------------

/// S_j (t^2 - t^-2) = t^{2(j+1)} - t^{-2(j+1)} for j <= max_j, and L_k = S_{2k} for
/// k <= max_k (so the running sum of S_{2l} is L_0 + ... + L_k).
inline CheckResult check_coefficient_dictionary(int max_j, int max_k) {
    CheckResult r{"S_j (t^2 - t^-2) = t^{2(j+1)} - t^{-2(j+1)}, j <= " + std::to_string(max_j) +
                  "; L_k = S_{2k}, k <= " + std::to_string(max_k)};
    const LaurentPoly d{{2, 1}, {-2, -1}};
    for (int j = 0; j <= max_j; ++j) {
        ++r.cases;
        const LaurentPoly want =
            LaurentPoly::t_power(2 * (j + 1)) - LaurentPoly::t_power(-2 * (j + 1));
        if (cheb_S_laurent(j) * d != want) r.fail("S_" + std::to_string(j));
        if (cheb_S(j).evaluate(quantum_x()) != cheb_S_laurent(j)) {
            r.fail("S_" + std::to_string(j) + " power basis");
        }
    }
    LaurentPoly running;
    for (int k = 0; k <= max_k; ++k) {
        ++r.cases;
        running += big_L(k);
        if (big_L(k) != cheb_S_laurent(2 * k)) r.fail("L_" + std::to_string(k) + " vs S_2k");
        if (big_L_via_S(k) != running) r.fail("sum of S_2l at k=" + std::to_string(k));
    }
    return r;
}

// ---- products --------------------------------------------------------------------

/// Random basis key: primitive entries in [-bound, bound], thread degree 1..max_k.
inline BasisKey random_key(Rng& rng, Int bound, Int max_k) {
    return BasisKey::threaded(random_primitive(rng, bound), uniform(rng, 1, max_k));
}

namespace detail {

// Random ordered key pairs, biased toward the supported regimes.
inline std::pair<BasisKey, BasisKey> random_supported_candidate(Rng& rng) {
    switch (uniform(rng, 0, 3)) {
        case 0: return {random_key(rng, 6, 4), random_key(rng, 6, 4)};
        case 1: {
            const auto [u, v] = random_det2_pair(rng, 5);
            const bool left = uniform(rng, 0, 1);
            const Int k = uniform(rng, 1, 5);
            return left ? std::pair{BasisKey::threaded(u, k), BasisKey::simple(v)}
                        : std::pair{BasisKey::simple(u), BasisKey::threaded(v, k)};
        }
        case 2: {
            const auto [u, v] = random_max_thread_pair(rng, 4, uniform(rng, 2, 7));
            return {BasisKey::simple(u), BasisKey::simple(v)};
        }
        default: {
            const CurveVector mu = random_primitive(rng, 6);
            return {BasisKey::threaded(mu, uniform(rng, 1, 5)),
                    BasisKey::threaded(mu, uniform(rng, 1, 5))};
        }
    }
}

}  // namespace detail

/// eps = a*b - main terms lies in (eta), has eta degree <= floor(min(|p|+|r|,|q|+|s|)/2),
/// and vanishes when that minimum is below 2.
inline CheckResult check_eta_bounds(std::size_t samples, std::uint64_t seed) {
    CheckResult r{"eta-degree bound and eta-bound rule on " + std::to_string(samples) +
                  " random supported products"};
    Rng rng(seed);
    std::size_t attempts = 0;
    while (r.cases < samples && attempts < 100 * samples) {
        ++attempts;
        const auto [a, b] = detail::random_supported_candidate(rng);
        SkeinElement prod;
        try {
            prod = multiply_basis(a, b);
        } catch (const UnsupportedProduct&) {
            continue;
        }
        ++r.cases;
        const SkeinElement eps = prod - fg_main_terms(a, b);
        const std::string label = to_string(a) + "*" + to_string(b);
        if (!eps.eta_component(0).is_zero()) r.fail(label + ": correction has eta-free terms");
        const Vec2 u = a.full();
        const Vec2 v = b.full();
        const Int m = std::min(abs_int(u.p) + abs_int(v.p), abs_int(u.q) + abs_int(v.q));
        if (eps.max_eta_degree() > m / 2) r.fail(label + ": eta degree above bound");
        if (m < 2 && !eps.is_zero()) r.fail(label + ": nonzero correction below the bound");
    }
    if (r.cases < samples) r.fail("only " + std::to_string(r.cases) + " supported samples");
    return r;
}

/// Three equivalent descriptions of the maximal-thread regime, the co-thread degree
/// gcd(n,2), and the normal-form formulas d+- = gcd(1 +- a, n).
inline CheckResult check_regime_characterizations(std::size_t samples, Int max_entry,
                                                  std::uint64_t seed) {
    CheckResult r{"maximal-thread characterizations agree on " + std::to_string(samples) +
                  " random pairs, entries <= " + std::to_string(max_entry)};
    Rng rng(seed);
    std::size_t in_regime = 0;
    while (r.cases < samples) {
        CurveVector u;
        CurveVector v;
        // Every third sample is drawn from the regime so both outcomes are exercised.
        if (r.cases % 3 == 2) {
            const CurveVector base = random_primitive(rng, 40);
            const Vec2 w = unimodular_partner(base.vec());
            const Int n = uniform(rng, 2, 5);
            const Vec2 cand = (uniform(rng, 0, 1) ? 1 : -1) * base.vec() + n * w;
            if (abs_int(cand.p) > max_entry || abs_int(cand.q) > max_entry) continue;
            u = base;
            v = CurveVector::canonical_sign(cand);
        } else {
            u = random_primitive(rng, max_entry);
            v = random_primitive(rng, max_entry);
        }
        const Int n = det_pair(u, v);
        if (abs_int(n) < 2) continue;
        ++r.cases;
        const CurvePair cp = analyze_pair(u, v);
        const Int an = abs_int(n);
        const std::string label = to_string(u) + "," + to_string(v);

        const bool by_degrees = std::max(cp.d_plus, cp.d_minus) == an &&
                                std::min(cp.d_plus, cp.d_minus) <= 2;
        // Normal form needs det >= 2; -v is the same unoriented curve.
        const Vec2 vv = n > 0 ? v.vec() : -v.vec();
        const NormalForm nf = sl2_normal_form(u.vec(), vv);
        if (nf.m.apply(u.vec()) != Vec2{1, 0} || nf.m.apply(vv) != Vec2{nf.a, an} ||
            nf.a < 0 || nf.a >= an) {
            r.fail(label + ": normal form postcondition");
        }
        const Int dp = std::gcd(1 + nf.a, an);
        const Int dm = std::gcd(1 - nf.a, an);
        const Int want_plus = n > 0 ? cp.d_plus : cp.d_minus;
        const Int want_minus = n > 0 ? cp.d_minus : cp.d_plus;
        if (dp != want_plus || dm != want_minus) r.fail(label + ": d+- from normal form");
        const bool by_normal_form =
            detail::mod_pos(nf.a - 1, an) == 0 || detail::mod_pos(nf.a + 1, an) == 0;
        auto congruent = [an](Vec2 x, Vec2 y) {
            return detail::mod_pos(x.p - y.p, an) == 0 && detail::mod_pos(x.q - y.q, an) == 0;
        };
        const bool by_congruence = congruent(u.vec(), v.vec()) || congruent(u.vec(), -v.vec());
        if (by_degrees != by_normal_form || by_degrees != by_congruence) {
            r.fail(label + ": characterizations disagree");
        }
        if ((cp.maximal_summand != Summand::None) != by_degrees) {
            r.fail(label + ": analyze_pair disagrees");
        }
        if (by_degrees) {
            ++in_regime;
            if (std::min(cp.d_plus, cp.d_minus) != std::gcd(an, Int{2})) {
                r.fail(label + ": co-thread degree is not gcd(n,2)");
            }
        }
    }
    if (in_regime == 0) r.fail("no sample landed in the regime");
    return r;
}

/// det2_standardize postconditions, and the transported T_k product against the
/// decomposition oracle in both orders.
inline CheckResult check_det2_transport(std::size_t samples, Int max_k, std::uint64_t seed) {
    CheckResult r{"|det|=2 transport agrees with decomposition on " + std::to_string(samples) +
                  " pairs, k <= " + std::to_string(max_k)};
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto [c1, c2] = random_det2_pair(rng, 6);
        ++r.cases;
        const std::string label = to_string(c1) + "," + to_string(c2);
        const SL2Matrix m = det2_standardize(c1.vec(), c2.vec());
        const Vec2 img = m.apply(c2.vec());
        if (m.apply(c1.vec()) != Vec2{1, 0} || (img != Vec2{1, 2} && img != Vec2{-1, -2})) {
            r.fail(label + ": standardization postcondition");
            continue;
        }
        for (Int k = 1; k <= max_k; ++k) {
            const BasisKey th = BasisKey::threaded(c2, k);
            const BasisKey si = BasisKey::simple(c1);
            if (k > 1 && classify(th, si) != ProductCase::Det2ThreadedFamily) {
                r.fail(label + ": not classified as threaded family");
            }
            if (multiply_basis(th, si) != decompose_multiply(th.full(), si.full())) {
                r.fail(label + " k=" + std::to_string(k) + ": threaded*simple");
            }
            if (multiply_basis(si, th) != decompose_multiply(si.full(), th.full())) {
                r.fail(label + " k=" + std::to_string(k) + ": simple*threaded");
            }
        }
    }
    return r;
}

namespace detail {

inline std::pair<BasisKey, BasisKey> random_transport_pair(Rng& rng) {
    if (uniform(rng, 0, 1)) {
        const auto [u, v] = random_det2_pair(rng, 4);
        const Int k = uniform(rng, 1, 4);
        return uniform(rng, 0, 1) ? std::pair{BasisKey::threaded(u, k), BasisKey::simple(v)}
                                  : std::pair{BasisKey::simple(u), BasisKey::threaded(v, k)};
    }
    const auto [u, v] = random_max_thread_pair(rng, 3, uniform(rng, 2, 6));
    return {BasisKey::simple(u), BasisKey::simple(v)};
}

inline SkeinElement key_element(const BasisKey& k) { return SkeinElement::basis(k); }

}  // namespace detail

/// M(a*b) = (Ma)*(Mb) for random M and |det|=2 or maximal-thread pairs.
inline CheckResult check_sl2_equivariance(std::size_t samples, std::uint64_t seed) {
    CheckResult r{"SL2 equivariance on " + std::to_string(samples) + " supported pairs"};
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto [a, b] = detail::random_transport_pair(rng);
        const SL2Matrix m = random_sl2(rng);
        const SkeinElement ea = detail::key_element(a);
        const SkeinElement eb = detail::key_element(b);
        SkeinElement lhs;
        SkeinElement rhs;
        try {
            lhs = multiply(ea, eb).sl2_apply(m);
            rhs = multiply(ea.sl2_apply(m), eb.sl2_apply(m));
        } catch (const UnsupportedProduct&) {
            continue;
        }
        ++r.cases;
        if (lhs != rhs) {
            r.fail(to_string(a) + "*" + to_string(b) + " under " + to_string(m));
        }
    }
    return r;
}

/// b*a is a*b with t inverted.
inline CheckResult check_orientation_coherence(std::size_t samples, std::uint64_t seed) {
    CheckResult r{"b*a = (a*b)|t->1/t on " + std::to_string(samples) + " supported pairs"};
    Rng rng(seed);
    std::size_t attempts = 0;
    while (r.cases < samples && attempts < 100 * samples) {
        ++attempts;
        const auto [a, b] = detail::random_supported_candidate(rng);
        SkeinElement ab;
        try {
            ab = multiply_basis(a, b);
        } catch (const UnsupportedProduct&) {
            continue;
        }
        ++r.cases;
        if (multiply_basis(b, a) != ab.t_inverted()) {
            r.fail(to_string(a) + "*" + to_string(b));
        }
    }
    return r;
}

/// parse(render(e, text)) evaluates to e, in both normalizations; JSON likewise.
inline CheckResult check_fixture_round_trip(const std::vector<Fixture>& fixtures) {
    CheckResult r{"text and JSON rendering round-trip on fixture elements"};
    for (const auto& f : fixtures) {
        for (const SkeinElement* e : {&f.expected, &f.left_element, &f.right_element}) {
            if (e->is_zero()) continue;
            ++r.cases;
            for (Normalization norm : {Normalization::T0, Normalization::Tprime}) {
                const std::string text = to_text(*e, norm);
                SkeinElement back;
                try {
                    back = evaluate(text);
                } catch (const std::exception& ex) {
                    r.fail(f.name + ": '" + text + "' does not parse: " + ex.what());
                    continue;
                }
                if (back != *e) r.fail(f.name + ": text round-trip of '" + text + "'");
            }
            if (element_from_json(to_json(*e)) != *e) r.fail(f.name + ": JSON round-trip");
        }
    }
    return r;
}

struct SuiteSizes {
    int pn_max = 30;
    int cascade_max = 50;
    int dictionary_j = 200;
    int dictionary_k = 100;
    std::size_t random_products = 1000;
    std::size_t random_pairs = 1000;
    Int max_entry = 200;
    Int parity_max = 1000;
    std::size_t transport_pairs = 200;
    Int transport_k = 6;
    std::uint64_t seed = 20240611;
};

/// Every property check, in a fixed order.
inline std::vector<CheckResult> run_property_suite(const SuiteSizes& z = {}) {
    std::vector<CheckResult> out;
    out.push_back(check_pn_cross_engine(z.pn_max));
    out.push_back(check_pn_recurrence(z.pn_max));
    out.push_back(check_new_eta_parity(z.pn_max));
    out.push_back(check_gcd_parity(z.parity_max));
    out.push_back(check_cascade_identity(z.cascade_max));
    out.push_back(check_coefficient_dictionary(z.dictionary_j, z.dictionary_k));
    out.push_back(check_eta_bounds(z.random_products, z.seed));
    out.push_back(check_regime_characterizations(z.random_pairs, z.max_entry, z.seed + 1));
    out.push_back(check_det2_transport(z.transport_pairs, z.transport_k, z.seed + 2));
    out.push_back(check_sl2_equivariance(z.random_products / 4, z.seed + 3));
    out.push_back(check_orientation_coherence(z.random_products / 4, z.seed + 4));
    out.push_back(check_fixture_round_trip(default_fixtures()));
    return out;
}

}  // namespace skein
