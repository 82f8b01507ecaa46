#include <gtest/gtest.h>

#include <random>

#include "knotadj.hpp"
#include "oracles.hpp"

using namespace knotadj;

namespace {

LaurentPoly P(const char* s) { return parse_laurent(s); }

}  // namespace

TEST(Laurent, DifferenceOfSquares) { EXPECT_EQ(P("t - 1") * P("t + 1"), P("t^2 - 1")); }

TEST(Laurent, MultiplyByZero) {
    EXPECT_TRUE((P("1 - t + t^2") * LaurentPoly{}).is_zero());
    EXPECT_TRUE((LaurentPoly{} * P("3*t^-2")).is_zero());
}

TEST(Laurent, TrefoilSquaredMatchesConvolution) {
    const LaurentPoly d = P("1 - t + t^2");
    const LaurentPoly expected = P("1 - 2*t + 3*t^2 - 2*t^3 + t^4");
    EXPECT_EQ(d * d, expected);
    EXPECT_EQ(oracle::from_dense(oracle::convolve(oracle::to_dense(d), oracle::to_dense(d))), expected);
}

TEST(Laurent, RandomProductsMatchConvolution) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9), len(1, 7), off(-4, 4);
    for (int trial = 0; trial < 300; ++trial) {
        oracle::Dense a{off(rng), {}}, b{off(rng), {}};
        for (int i = len(rng); i > 0; --i) a.c.push_back(coeff(rng));
        for (int i = len(rng); i > 0; --i) b.c.push_back(coeff(rng));
        EXPECT_EQ(oracle::from_dense(a) * oracle::from_dense(b), oracle::from_dense(oracle::convolve(a, b)));
    }
}

TEST(Laurent, NoZeroCoefficientsStored) {
    LaurentPoly p = P("1 + t");
    p += P("-t");
    EXPECT_EQ(p.term_count(), 1u);
    EXPECT_EQ(p, LaurentPoly(1));
    p -= LaurentPoly(1);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
    EXPECT_EQ(P("t - t"), LaurentPoly{});
}

TEST(Laurent, Negation) {
    EXPECT_EQ(-P("1 - t"), P("-1 + t"));
    EXPECT_TRUE((-LaurentPoly{}).is_zero());
}

TEST(Normalize, UnitShift) { EXPECT_EQ(normalize(P("-t^3 + t^4")), P("1 - t")); }

TEST(Normalize, AlreadyNormal) { EXPECT_EQ(normalize(P("1 - t + t^2")), P("1 - t + t^2")); }

TEST(Normalize, NegativeExponents) { EXPECT_EQ(normalize(P("t^-2 - 3*t^-1 + 1")), P("1 - 3*t + t^2")); }

TEST(Normalize, NegativeConstantFlipsSign) { EXPECT_EQ(normalize(P("-2 + 3*t - 2*t^2")), P("2 - 3*t + 2*t^2")); }

TEST(Normalize, ZeroIsAnError) {
    try {
        normalize(LaurentPoly{});
        FAIL() << "expected an error";
    } catch (const input_error& e) {
        EXPECT_STREQ(e.what(), "no unit normalization");
    }
}

TEST(SpanMonic, Examples) {
    EXPECT_EQ(span_monic(P("1 - t + t^2")), (SpanMonic{2, true}));
    EXPECT_EQ(span_monic(P("2 - 3*t + 2*t^2")), (SpanMonic{2, false}));
    EXPECT_EQ(span_monic(LaurentPoly(1)), (SpanMonic{0, true}));
}

TEST(SpanMonic, UsesNormalizedLeadingCoefficient) {
    EXPECT_EQ(span_monic(P("-t^-1 + 3 - t")), (SpanMonic{2, true}));
    EXPECT_EQ(span_monic(P("-2*t^5")), (SpanMonic{0, false}));
}

TEST(SpanMonic, ZeroIsAnError) { EXPECT_THROW(span_monic(LaurentPoly{}), input_error); }

TEST(LaurentText, RoundTrip) {
    for (const char* s : {"1 - t + t^2", "-t^-3 + 4*t^2", "0", "7", "-1", "12*t^-1 - t^9"}) {
        const LaurentPoly p = std::string(s) == "0" ? LaurentPoly{} : P(s);
        EXPECT_EQ(to_string(p), s);
        if (!p.is_zero()) EXPECT_EQ(parse_laurent(to_string(p)), p);
    }
}

TEST(LaurentText, AcceptsVariants) {
    EXPECT_EQ(P("t^(-2) + 2 t"), LaurentPoly::monomial(1, -2) + LaurentPoly::monomial(2, 1));
    EXPECT_EQ(P("t + t"), LaurentPoly::monomial(2, 1));
    EXPECT_EQ(P("  -  t  "), LaurentPoly::monomial(-1, 1));
    EXPECT_EQ(parse_laurent("A^-4 - A^4", 'A'), LaurentPoly::monomial(1, -4) - LaurentPoly::monomial(1, 4));
}

TEST(LaurentText, Errors) {
    EXPECT_THROW(P(""), input_error);
    EXPECT_THROW(P("1 +"), input_error);
    EXPECT_THROW(P("x^2"), input_error);
    EXPECT_THROW(P("2*"), input_error);
    EXPECT_THROW(P("t^(2"), input_error);
    EXPECT_THROW(P("1 2"), input_error);
}

TEST(LaurentText, BigCoefficients) {
    const LaurentPoly p = P("123456789012345678901234567890*t^3");
    EXPECT_EQ(p.coefficient(3), Integer("123456789012345678901234567890"));
    EXPECT_EQ(to_string(p), "123456789012345678901234567890*t^3");
}

TEST(LaurentJson, RoundTrip) {
    const LaurentPoly p = P("-t^-2 + 3 + 99999999999999999999*t^4");
    const auto j = json::from_poly(p);
    EXPECT_EQ(j.dump(), R"([[-2,-1],[0,3],[4,"99999999999999999999"]])");
    EXPECT_EQ(json::to_poly(j, "p"), p);
    EXPECT_EQ(json::to_poly(json::Json::parse("[]"), "p"), LaurentPoly{});
    EXPECT_THROW(json::to_poly(json::Json::parse("[[1]]"), "p"), input_error);
    EXPECT_THROW(json::to_poly(json::Json::parse("[[1, \"x\"]]"), "p"), input_error);
}

TEST(Laurent, Evaluate) {
    EXPECT_EQ(P("1 - t + t^2").evaluate(-1), 3);
    EXPECT_EQ(P("1 - t + t^2").evaluate(2), 3);
    EXPECT_EQ(P("t^-1 + t").evaluate(-1), -2);
    EXPECT_THROW(P("t^-1").evaluate(2), input_error);
}

TEST(Laurent, ShiftReflectSubstitute) {
    const LaurentPoly p = P("1 - 2*t");
    EXPECT_EQ(p.shifted(3), P("t^3 - 2*t^4"));
    EXPECT_EQ(p.reflected(), P("1 - 2*t^-1"));
    EXPECT_EQ(p.substitute_power(-2), P("1 - 2*t^-2"));
}

TEST(Laurent, DivideExact) {
    const LaurentPoly a = P("1 - t + t^2"), b = P("2 - t^3");
    EXPECT_EQ((a * b).divide_exact(a), b);
    EXPECT_EQ((a * b).shifted(-5).divide_exact(b.shifted(2)), a.shifted(-7));
    EXPECT_FALSE(P("1 + t").divide_exact(P("2")).has_value());
    EXPECT_FALSE(P("1 + t^2").divide_exact(P("1 + t")).has_value());
    EXPECT_FALSE(a.divide_exact(LaurentPoly{}).has_value());
    EXPECT_EQ(LaurentPoly{}.divide_exact(a), LaurentPoly{});
    EXPECT_THROW(exact_quotient(P("1 + t"), P("2")), invariant_violation);
}

TEST(Laurent, ZeroPolynomialAccessorsThrow) {
    EXPECT_THROW(LaurentPoly{}.min_exponent(), input_error);
    EXPECT_THROW(LaurentPoly{}.leading_coefficient(), input_error);
}
