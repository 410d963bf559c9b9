#include <gtest/gtest.h>

#include "skein/oracle.hpp"

using namespace skein;

TEST(Oracle, RestrictedRefusesClosedFormCases) {
    EXPECT_NO_THROW(restricted_multiply(se_from_raw(1, 2), se_from_raw(1, 0)));
    EXPECT_NO_THROW(restricted_multiply(se_from_raw(2, 0), se_from_raw(0, 1)));
    EXPECT_THROW(restricted_multiply(se_from_raw(2, 4), se_from_raw(1, 0)), UnsupportedProduct);
    EXPECT_THROW(restricted_multiply(se_from_raw(4, 3), se_from_raw(0, 1)), UnsupportedProduct);
}

TEST(Oracle, SeedsMatchTheFirstTwoProducts) {
    EXPECT_EQ(brute_force_pn(1), p_n_closed(1));
    EXPECT_EQ(brute_force_pn(2), p_n_closed(2));
    EXPECT_THROW(brute_force_pn(0), std::invalid_argument);
}

TEST(Oracle, RecurrenceAgreesWithClosedForm) {
    for (int n = 1; n <= 12; ++n) ASSERT_EQ(brute_force_pn(n), p_n_closed(n)) << "n=" << n;
}

TEST(Oracle, DecompositionAgreesWithClosedForm) {
    for (int n = 1; n <= 8; ++n) {
        ASSERT_EQ(decompose_multiply({n, 2 * n}, {1, 0}), p_n_closed(n)) << "n=" << n;
        ASSERT_EQ(decompose_multiply({1, 0}, {n, 2 * n}), p_n_closed(n).t_inverted()) << "n=" << n;
    }
    EXPECT_EQ(decompose_multiply({3, 0}, {1, 2}), se_from_raw(3, 0) * se_from_raw(1, 2));
    EXPECT_EQ(decompose_multiply({0, 0}, {1, 2}), LaurentPoly(2) * se_from_raw(1, 2));
}

TEST(Oracle, DefaultFixturesPass) {
    const FixtureReport rep = run_fixtures();
    EXPECT_EQ(rep.results.size(), default_fixtures().size());
    for (const auto& r : rep.results) {
        EXPECT_TRUE(r.passed()) << r.name;
        ASSERT_FALSE(r.checks.empty());
        EXPECT_EQ(r.checks.front().engine, "closed");
    }
    EXPECT_TRUE(rep.passed());
    const std::string text = to_text(rep);
    EXPECT_NE(text.find("fixtures passed"), std::string::npos);
}

TEST(Oracle, CorruptedFixtureReportsDiff) {
    std::vector<Fixture> fx = default_fixtures();
    Fixture& f = fx.front();
    const TermKey first = f.expected.terms().begin()->first;
    f.expected.add_term(first.eta, first.key, 1);
    const FixtureReport rep = run_fixtures(fx);
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.results.front().passed());
    const auto diff = term_diff(f.expected, p_n_closed(1));
    ASSERT_EQ(diff.size(), 1u);
    EXPECT_NE(to_text(rep).find("expected"), std::string::npos);
}

TEST(Oracle, TermDiff) {
    EXPECT_TRUE(term_diff(p_n_closed(2), p_n_closed(2)).empty());
    const auto d = term_diff(SkeinElement::eta(), SkeinElement());
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0], "1 eta: expected 1, got 0");
}

TEST(Oracle, FixtureJsonRoundTrip) {
    const std::vector<Fixture> fx = default_fixtures();
    const auto j = fixtures_to_json(fx);
    const std::vector<Fixture> back = fixtures_from_json(nlohmann::json::parse(j.dump()));
    ASSERT_EQ(back.size(), fx.size());
    for (std::size_t i = 0; i < fx.size(); ++i) {
        EXPECT_EQ(back[i].name, fx[i].name);
        EXPECT_EQ(back[i].kind, fx[i].kind);
        EXPECT_EQ(back[i].expected, fx[i].expected);
        EXPECT_EQ(back[i].left, fx[i].left);
        EXPECT_EQ(back[i].right, fx[i].right);
        EXPECT_EQ(back[i].n, fx[i].n);
        EXPECT_EQ(back[i].left_element, fx[i].left_element);
        EXPECT_EQ(back[i].right_element, fx[i].right_element);
    }
    EXPECT_THROW(fixture_from_json(nlohmann::json::parse(R"({"name":"x","kind":"bogus"})")),
                 std::invalid_argument);
}

TEST(Oracle, RatioCoefficient) {
    // (t^6 - t^-6) / (t^2 - t^-2) = t^4 + 1 + t^-4
    EXPECT_EQ(ratio_coefficient({0, 0, 0, "t^6 - t^-6"}), (LaurentPoly{{4, 1}, {0, 1}, {-4, 1}}));
    EXPECT_EQ(ratio_coefficient({0, 0, 0, "t^6 - t^-6", 1, true}),
              (LaurentPoly{{5, -1}, {1, -1}, {-3, -1}}));
}
