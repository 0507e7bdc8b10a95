#include <gtest/gtest.h>

#include <random>

#include "sjp/field.hpp"
#include "sjp/zpoly.hpp"

using namespace sjp;

TEST(Field, MakeField) {
    EXPECT_EQ(make_field(FieldKind::Rationals).characteristic(), 0u);
    EXPECT_EQ(make_field(FieldKind::PrimeField, 5).characteristic(), 5u);
    try {
        make_field(FieldKind::PrimeField, 2);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("characteristic 2 excluded"), std::string::npos);
    }
    EXPECT_THROW(make_field(FieldKind::PrimeField, 9), std::invalid_argument);
    EXPECT_THROW(make_field(FieldKind::PrimeField), std::invalid_argument);
    EXPECT_EQ(parse_field("fp:7").name(), "fp:7");
    EXPECT_EQ(parse_field("q").name(), "q");
    EXPECT_THROW(parse_field("fp:"), std::invalid_argument);
    EXPECT_THROW(parse_field("r"), std::invalid_argument);
}

TEST(Field, Examples) {
    const auto Q = FieldSpec::rationals();
    const auto F5 = FieldSpec::prime(5);
    EXPECT_EQ((FieldElement::parse(Q, "1/2") + FieldElement::parse(Q, "1/3")).to_string(), "5/6");
    EXPECT_EQ(FieldElement(F5, 2).inv().to_string(), "3");
    EXPECT_THROW(FieldElement::zero(Q).inv(), std::domain_error);
    EXPECT_THROW(FieldElement::zero(F5).inv(), std::domain_error);
    EXPECT_THROW(FieldElement(Q, 1) + FieldElement(F5, 1), std::invalid_argument);
    EXPECT_EQ(FieldElement(F5, -1).to_string(), "4");
    EXPECT_EQ(FieldElement::parse(Q, "-6/4").to_string(), "-3/2");
    EXPECT_EQ(FieldElement::parse(F5, "1/2").to_string(), "3");
    EXPECT_THROW(FieldElement::parse(Q, "1/0"), std::domain_error);
    EXPECT_THROW(FieldElement::parse(Q, "a"), std::invalid_argument);
}

TEST(Field, TwoInvertible) {
    for (std::uint64_t p : {3u, 5u, 7u, 101u, 65537u}) {
        const auto F = FieldSpec::prime(p);
        EXPECT_TRUE((FieldElement(F, 2) * FieldElement(F, 2).inv()).is_one());
    }
}

TEST(Field, LargePrimeArithmetic) {
    const auto F = FieldSpec::prime(4611686018427387847ull);  // below 2^62
    const FieldElement a(F, 123456789), b(F, 987654321);
    EXPECT_EQ(a * b * b.inv(), a);
    EXPECT_EQ(a.pow(4) * a.inv().pow(4), FieldElement::one(F));
}

class FieldAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(FieldAxioms, RandomTriples) {
    const auto F = parse_field(GetParam());
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    auto draw = [&] { return FieldElement::from_fraction(F, num(rng), F.is_rational() ? den(rng) : 1); };
    for (int i = 0; i < 300; ++i) {
        const auto a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) { EXPECT_TRUE((a * a.inv()).is_one()); }
        if (!b.is_zero()) { EXPECT_EQ(a / b * b, a); }
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values("q", "fp:5", "fp:3", "fp:1000003"));

TEST(ZPoly, Basics) {
    const auto Q = FieldSpec::rationals();
    const ZPoly z = ZPoly::monomial(Q, 1);
    const ZPoly one = ZPoly::constant(FieldElement::one(Q));
    EXPECT_EQ((z * z + one).to_string("z"), "1 + z^2");
    EXPECT_EQ((z * z * z).euler(), (z * z * z).scaled(FieldElement(Q, 3)));
    EXPECT_TRUE(one.euler().is_zero());
    EXPECT_TRUE((z * z * z).rescaled_argument(FieldElement(Q, 2)) == (z * z * z).scaled(FieldElement(Q, 8)));
    const auto F3 = FieldSpec::prime(3);
    EXPECT_TRUE(ZPoly::monomial(F3, 3).euler().is_zero());
    EXPECT_EQ(ZPoly::monomial(Q, 1, FieldElement::parse(Q, "1/2")).to_string("z"), "(1/2)*z");
}
