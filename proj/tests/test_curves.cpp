#include <random>

#include <gtest/gtest.h>

#include "skein/curves.hpp"

using namespace skein;

TEST(Curves, CanonicalSign) {
    EXPECT_EQ(CurveVector::canonical_sign({-1, 2}).vec(), (Vec2{1, -2}));
    EXPECT_EQ(CurveVector::canonical_sign({0, -1}).vec(), (Vec2{0, 1}));
    EXPECT_EQ(CurveVector::canonical_sign({3, -5}).vec(), (Vec2{3, -5}));
    EXPECT_EQ(CurveVector::primitive(-2, -3), CurveVector::primitive(2, 3));
    EXPECT_THROW(CurveVector::primitive(2, 4), NonPrimitiveInput);
    EXPECT_THROW(CurveVector::primitive(0, 0), NonPrimitiveInput);
}

TEST(Curves, Canonicalize) {
    const Canonical c = canonicalize({-4, -6});
    EXPECT_EQ(c.thread, 2);
    EXPECT_EQ(c.curve.vec(), (Vec2{2, 3}));
    EXPECT_EQ(canonicalize({0, 0}).thread, 0);
    EXPECT_EQ(canonicalize({0, -5}).curve.vec(), (Vec2{0, 1}));
    EXPECT_EQ(canonicalize({0, -5}).thread, 5);
}

TEST(Curves, Determinant) {
    EXPECT_EQ(det_pair(Vec2{1, 0}, Vec2{0, 1}), 1);
    EXPECT_EQ(det_pair(Vec2{1, 2}, Vec2{1, 0}), -2);
    EXPECT_EQ(det_pair(Vec2{11, 67}, Vec2{3, 19}), 8);
}

TEST(Curves, MatrixAlgebra) {
    const SL2Matrix s = SL2Matrix::upper_shear(2);
    const SL2Matrix r = SL2Matrix::rotation();
    EXPECT_EQ(s.apply({1, 1}), (Vec2{3, 1}));
    EXPECT_EQ(r.apply({1, 0}), (Vec2{0, 1}));
    EXPECT_EQ(s * s.inverse(), SL2Matrix::identity());
    EXPECT_EQ((r * s).apply({2, 5}), r.apply(s.apply({2, 5})));
    EXPECT_EQ(SL2Matrix::lower_shear(1).apply({1, 0}), (Vec2{1, 1}));
}

TEST(Curves, SendToXAxis) {
    for (const Vec2 u : {Vec2{1, 0}, Vec2{0, 1}, Vec2{3, 5}, Vec2{-7, 4}, Vec2{11, 67}}) {
        EXPECT_EQ(sl2_send_to_x_axis(u).apply(u), (Vec2{1, 0})) << to_string(u);
    }
    EXPECT_THROW(sl2_send_to_x_axis({2, 2}), NonPrimitiveInput);
}

TEST(Curves, NormalFormExamples) {
    const NormalForm nf = sl2_normal_form({11, 67}, {3, 19});
    EXPECT_EQ(nf.m.apply({11, 67}), (Vec2{1, 0}));
    EXPECT_EQ(nf.m.apply({3, 19}), (Vec2{nf.a, 8}));
    EXPECT_GE(nf.a, 0);
    EXPECT_LT(nf.a, 8);

    const NormalForm nf2 = sl2_normal_form({4, 3}, {0, 1});
    EXPECT_EQ(nf2.m.apply({0, 1}).q, 4);
    EXPECT_THROW(sl2_normal_form({1, 0}, {2, 0}), NonPrimitiveInput);
    EXPECT_THROW(sl2_normal_form({1, 0}, {1, 0}), ZeroDeterminant);
    EXPECT_THROW(sl2_normal_form({1, 0}, {0, 1}), std::invalid_argument);
    EXPECT_THROW(sl2_normal_form({0, 1}, {1, 0}), std::invalid_argument);
}

TEST(Curves, NormalFormRandom) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> d(-40, 40);
    int tested = 0;
    while (tested < 500) {
        const Vec2 u{d(rng), d(rng)};
        const Vec2 v{d(rng), d(rng)};
        if (!is_primitive(u) || !is_primitive(v) || det_pair(u, v) < 2) continue;
        const NormalForm nf = sl2_normal_form(u, v);
        const Int n = det_pair(u, v);
        ASSERT_EQ(nf.m.apply(u), (Vec2{1, 0}));
        ASSERT_EQ(nf.m.apply(v), (Vec2{nf.a, n}));
        ASSERT_TRUE(0 <= nf.a && nf.a < n);
        ASSERT_EQ(nf.m.a() * nf.m.d() - nf.m.b() * nf.m.c(), 1);
        ++tested;
    }
}

TEST(Curves, Det2Standardize) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Int> d(-30, 30);
    int tested = 0;
    while (tested < 500) {
        const Vec2 u{d(rng), d(rng)};
        const Vec2 v{d(rng), d(rng)};
        if (!is_primitive(u) || !is_primitive(v) || abs_int(det_pair(u, v)) != 2) continue;
        const SL2Matrix m = det2_standardize(u, v);
        ASSERT_EQ(m.apply(u), (Vec2{1, 0}));
        ASSERT_EQ(sl2_apply_curve(m, v), CurveVector::primitive(1, 2));
        ++tested;
    }
    EXPECT_THROW(det2_standardize({1, 0}, {1, 3}), NotDetTwo);
    EXPECT_THROW(det2_standardize({2, 0}, {1, 2}), NonPrimitiveInput);
}

TEST(Curves, AnalyzePair) {
    const CurvePair a = analyze_pair(CurveVector::primitive(4, 3), CurveVector::primitive(0, 1));
    EXPECT_EQ(a.n, 4);
    EXPECT_EQ(a.c_plus, (Vec2{4, 4}));
    EXPECT_EQ(a.d_plus, 4);
    EXPECT_EQ(a.d_minus, 2);
    EXPECT_EQ(a.maximal_summand, Summand::Plus);
    EXPECT_EQ(a.cascade_sign(), 1);

    const CurvePair b = analyze_pair(CurveVector::primitive(1, 0), CurveVector::primitive(1, 5));
    EXPECT_EQ(b.maximal_summand, Summand::Minus);
    EXPECT_EQ(b.maximal_vector(), (Vec2{0, -5}));
    EXPECT_EQ(b.cascade_sign(), -1);

    const CurvePair c = analyze_pair(CurveVector::primitive(2, 3), CurveVector::primitive(4, 1));
    EXPECT_EQ(c.n, -10);
    EXPECT_EQ(c.maximal_summand, Summand::None);

    EXPECT_THROW(analyze_pair(CurveVector::primitive(1, 1), CurveVector::primitive(1, 1)),
                 ZeroDeterminant);
}

TEST(Curves, DetPlusDividesDet) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<Int> d(-50, 50);
    for (int i = 0; i < 2000; ++i) {
        const Vec2 u{d(rng), d(rng)};
        const Vec2 v{d(rng), d(rng)};
        if (!is_primitive(u) || !is_primitive(v) || det_pair(u, v) == 0) continue;
        const CurvePair cp = analyze_pair(CurveVector::canonical_sign(u),
                                          CurveVector::canonical_sign(v));
        ASSERT_EQ(abs_int(cp.n) % cp.d_plus, 0);
        ASSERT_EQ(abs_int(cp.n) % cp.d_minus, 0);
        // d+ and d- share at most a factor of 2.
        ASSERT_LE(std::gcd(cp.d_plus, cp.d_minus), 2);
    }
}
