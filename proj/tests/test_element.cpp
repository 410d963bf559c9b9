#include <gtest/gtest.h>

#include "skein/element.hpp"

using namespace skein;

namespace {
const CurveVector c12 = CurveVector::primitive(1, 2);
}

TEST(BasisKey, Construction) {
    const BasisKey u = BasisKey::unit();
    EXPECT_TRUE(u.is_unit());
    EXPECT_FALSE(u.is_simple());
    const BasisKey k = BasisKey::threaded(c12, 3);
    EXPECT_EQ(k.full(), (Vec2{3, 6}));
    EXPECT_FALSE(k.is_simple());
    EXPECT_TRUE(BasisKey::simple(c12).is_simple());
    EXPECT_THROW(BasisKey::threaded(c12, 0), std::invalid_argument);
}

TEST(BasisKey, OrderPutsUnitFirst) {
    EXPECT_LT(BasisKey::unit(), BasisKey::simple(CurveVector::primitive(0, 1)));
    EXPECT_LT(BasisKey::threaded(c12, 1), BasisKey::threaded(c12, 2));
}

TEST(SkeinElement, FromRaw) {
    EXPECT_EQ(SkeinElement::from_raw({0, 0}), SkeinElement::scalar(2));
    EXPECT_EQ(SkeinElement::from_raw({-2, -4}), SkeinElement::basis(BasisKey::threaded(c12, 2)));
    EXPECT_EQ(se_from_raw(3, 6).terms().begin()->first.key.k(), 3);
}

TEST(SkeinElement, LinearStructure) {
    const SkeinElement a = se_from_raw(1, 0);
    const SkeinElement b = se_from_raw(0, 1);
    const SkeinElement s = a + b;
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE((s - a - b).is_zero());
    EXPECT_EQ(-(-s), s);
    EXPECT_EQ(LaurentPoly(2) * a, a + a);
    EXPECT_TRUE((LaurentPoly() * s).is_zero());
    EXPECT_EQ(s.coefficient(0, BasisKey::simple(CurveVector::primitive(1, 0))), LaurentPoly(1));
    EXPECT_TRUE(s.coefficient(1, BasisKey::unit()).is_zero());
}

TEST(SkeinElement, EtaGrading) {
    const SkeinElement e = se_from_raw(1, 2).eta_shift(2) + SkeinElement::eta() + se_from_raw(1, 0);
    EXPECT_EQ(e.max_eta_degree(), 2);
    EXPECT_EQ(e.eta_component(2), se_from_raw(1, 2));
    EXPECT_EQ(e.eta_component(1), SkeinElement::scalar(1));
    EXPECT_EQ(e.eta_part(), e - se_from_raw(1, 0));
    EXPECT_EQ(SkeinElement::eta(3), SkeinElement::scalar(1).eta_shift(3));
    EXPECT_THROW(se_from_raw(1, 0).eta_shift(-1), std::invalid_argument);
}

TEST(SkeinElement, Sl2AndInversion) {
    const SkeinElement e = LaurentPoly::t_power(3) * se_from_raw(2, 4) + SkeinElement::eta();
    const SkeinElement moved = e.sl2_apply(SL2Matrix::rotation());
    EXPECT_EQ(moved, LaurentPoly::t_power(3) * se_from_raw(-4, 2) + SkeinElement::eta());
    EXPECT_EQ(moved.sl2_apply(SL2Matrix::rotation().inverse()), e);
    EXPECT_EQ(e.t_inverted(), LaurentPoly::t_power(-3) * se_from_raw(2, 4) + SkeinElement::eta());
}
