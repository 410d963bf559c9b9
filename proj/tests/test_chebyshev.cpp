#include <gtest/gtest.h>

#include "skein/chebyshev.hpp"

using namespace skein;

TEST(Chebyshev, FirstKindWithTwoAtZero) {
    EXPECT_EQ(cheb_T(0), IntPoly::constant(2));
    EXPECT_EQ(cheb_T(1), IntPoly::x());
    EXPECT_EQ(cheb_T(2), IntPoly({-2, 0, 1}));
    EXPECT_EQ(cheb_T(3), IntPoly({0, -3, 0, 1}));
    EXPECT_EQ(cheb_T(4), IntPoly({2, 0, -4, 0, 1}));
    EXPECT_EQ(cheb_T_prime(0), IntPoly::constant(1));
    EXPECT_EQ(cheb_T_prime(3), cheb_T(3));
}

TEST(Chebyshev, FirstKindProductRule) {
    // T_m T_n = T_{m+n} + T_{|m-n|}
    for (int m = 0; m <= 12; ++m) {
        for (int n = 0; n <= 12; ++n) {
            ASSERT_EQ(cheb_T(m) * cheb_T(n), cheb_T(m + n) + cheb_T(std::abs(m - n)))
                << m << "," << n;
        }
    }
}

TEST(Chebyshev, FirstKindAtQuantumX) {
    // T_k(t^2 + t^-2) = t^{2k} + t^{-2k}
    for (int k = 1; k <= 20; ++k) {
        const LaurentPoly want = LaurentPoly::t_power(2 * k) + LaurentPoly::t_power(-2 * k);
        ASSERT_EQ(cheb_T(k).evaluate(quantum_x()), want);
    }
}

TEST(Chebyshev, SecondKind) {
    EXPECT_EQ(cheb_S(0), IntPoly::constant(1));
    EXPECT_EQ(cheb_S(1), IntPoly::x());
    EXPECT_EQ(cheb_S(2), IntPoly({-1, 0, 1}));
    EXPECT_EQ(cheb_S_laurent(3), (LaurentPoly{{6, 1}, {2, 1}, {-2, 1}, {-6, 1}}));
    EXPECT_EQ(cheb_S_laurent(0), LaurentPoly(1));
    for (int j = 0; j <= 40; ++j) ASSERT_EQ(cheb_S(j).evaluate(quantum_x()), cheb_S_laurent(j));
}

TEST(Chebyshev, QuantumIntegers) {
    const LaurentPoly d{{2, 1}, {-2, -1}};
    for (int j = 0; j <= 60; ++j) {
        ASSERT_EQ(cheb_S_laurent(j) * d,
                  LaurentPoly::t_power(2 * (j + 1)) - LaurentPoly::t_power(-2 * (j + 1)));
    }
}

TEST(Chebyshev, BigL) {
    EXPECT_EQ(big_L(0), LaurentPoly(1));
    EXPECT_EQ(big_L(2), (LaurentPoly{{8, 1}, {4, 1}, {0, 1}, {-4, 1}, {-8, 1}}));
    for (int k = 0; k <= 30; ++k) ASSERT_EQ(big_L(k), cheb_S_laurent(2 * k));
}

TEST(Chebyshev, SumOfEvenSecondKind) {
    EXPECT_EQ(big_L_via_S(0), big_L(0));
    EXPECT_EQ(big_L_via_S(1), big_L(0) + big_L(1));
    EXPECT_NE(big_L_via_S(1), big_L(1));
}

TEST(Chebyshev, NegativeIndicesThrow) {
    EXPECT_THROW(cheb_T(-1), std::invalid_argument);
    EXPECT_THROW(cheb_S(-1), std::invalid_argument);
    EXPECT_THROW(cheb_S_laurent(-1), std::invalid_argument);
    EXPECT_THROW(big_L(-1), std::invalid_argument);
}

TEST(Chebyshev, Text) { EXPECT_FALSE(to_text(cheb_T(3)).empty()); }
