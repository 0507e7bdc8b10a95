#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace sjp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

Element P(const char* s, const FieldSpec& spec = Q) { return parse_element(s, spec); }
JordanElement J(const char* s, const FieldSpec& spec = Q) { return JordanElement(P(s, spec)); }

}  // namespace

TEST(Jordan, Membership) {
    EXPECT_TRUE(is_jordan(P("z*y^2 + 3")));
    EXPECT_FALSE(is_jordan(P("y")));
    EXPECT_FALSE(is_jordan(P("x*y")));
    EXPECT_THROW(J("x"), std::invalid_argument);
    const JordanElement f = J("1 + 2*z*y^4 - z^3");
    const auto a = f.coefficients();
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(JordanElement::from_coefficients(Q, a), f);
}

TEST(Jordan, ClosedUnderProduct) {
    Sampler r(Q, 21);
    for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_jordan((r.jordan(8) * r.jordan(8)).value()));
}

TEST(Jordan, Y2MinusZShortcut) {
    for (const auto& spec : {Q, F3}) {
        const Element base = Element::monomial(spec, {0, 0, 2}) - Element::z(spec);
        for (unsigned i = 0; i <= 10; ++i) EXPECT_EQ(y2_minus_z_power(spec, i).value(), oracle::naive_power(base, i)) << i;
    }
}

TEST(Jordan, Embedding) {
    const AbstractJordan X = AbstractJordan::X(Q), Y = AbstractJordan::Y(Q);
    const AbstractJordan rel = Y * X - X * Y + X * X * FieldElement::parse(Q, "1/2");
    EXPECT_TRUE(rel.terms().empty());
    EXPECT_EQ(jordan_embed(X).value(), P("z"));
    EXPECT_EQ(to_string(jordan_embed(Y * Y)), oracle::frozen::embed_Y2);
    const Element minus_half_y2 = P("-(1/2)*y^2");
    EXPECT_EQ(jordan_embed(Y * Y).value(), oracle::rewritten(minus_half_y2, minus_half_y2));
}

TEST(Jordan, EmbeddingIsMultiplicative) {
    for (const auto& spec : {Q, F5}) {
        Sampler r(spec, 4);
        auto rand_aj = [&] {
            AbstractJordan u(spec);
            for (int k = 0; k < 3; ++k)
                u.add_term({static_cast<std::uint32_t>(r.uniform(0, 3)), static_cast<std::uint32_t>(r.uniform(0, 3))}, r.scalar());
            return u;
        };
        for (int i = 0; i < 40; ++i) {
            const AbstractJordan u = rand_aj(), v = rand_aj();
            EXPECT_EQ(jordan_embed(u * v).value(), jordan_embed(u).value() * jordan_embed(v).value());
        }
    }
}

TEST(Jordan, Eta) {
    EXPECT_EQ(eta(J("y^2")).value(), P("y^2 - z"));
    EXPECT_EQ(eta(J("z")).value(), P("z"));
    EXPECT_EQ(to_string(eta(J("y^4"))), oracle::frozen::eta_y4);
    EXPECT_EQ(eta(J("y^4")).value(), oracle::naive_power(P("y^2 - z"), 2));
    EXPECT_EQ(eta_inv(J("y^2 - z")).value(), P("y^2"));
    EXPECT_EQ(eta_inv(J("z")).value(), P("z"));
    EXPECT_EQ(eta_inv(J("1")).value(), P("1"));
}

TEST(Jordan, EtaProperties) {
    for (const auto& spec : {Q, F3, F5}) {
        Sampler r(spec, 8);
        const Element x = Element::x(spec), z = Element::z(spec), xy = x * Element::y(spec);
        for (int i = 0; i < 40; ++i) {
            const JordanElement f = r.jordan(10), g = r.jordan(10);
            EXPECT_EQ(eta(f * g), eta(f) * eta(g));
            EXPECT_EQ(eta(eta_inv(f)), f);
            EXPECT_EQ(eta_inv(eta(f)), f);
            EXPECT_EQ(x * f.value(), eta(f).value() * x);
            EXPECT_EQ(z * f.value(), eta(f).value() * z);
            EXPECT_EQ(xy * f.value(), eta(f).value() * xy);
        }
    }
}

TEST(Jordan, EtaFixedSet) {
    for (const auto& spec : {Q, F3}) {
        const unsigned N = 12;
        std::vector<Monomial> basis;
        for (std::uint32_t b = 0; 2 * b <= N; ++b)
            for (std::uint32_t c = 0; 2 * b + c <= N; c += 2) basis.push_back({0, b, c});
        std::vector<std::map<Monomial, FieldElement>> cols;
        for (const auto& m : basis) {
            const JordanElement f(Element::monomial(spec, m));
            const Element d = eta(f).value() - f.value();
            cols.emplace_back(d.terms().begin(), d.terms().end());
        }
        const unsigned p = static_cast<unsigned>(spec.characteristic());
        std::size_t expect = 0;
        for (const auto& m : basis)
            if (p == 0 ? m.c == 0 : m.c % (2 * p) == 0) ++expect;
        EXPECT_EQ(nullspace(spec, cols).size(), expect) << spec.name();
    }
}

TEST(Jordan, Nabla) {
    EXPECT_EQ(nabla(J("z")).value(), P("z"));
    EXPECT_TRUE(nabla(J("y^2")).is_zero());
    EXPECT_EQ(to_string(nabla(J("z*y^2"))), oracle::frozen::nabla_zy2);
    const Element f = P("z*y^2");
    EXPECT_EQ(oracle::rewritten(P("y"), f) - oracle::rewritten(f, P("y")), oracle::rewritten(nabla(J("z*y^2")).value(), P("x")));
}

TEST(Jordan, NablaProperties) {
    for (const auto& spec : {Q, F3, F5}) {
        Sampler r(spec, 12);
        const Element x = Element::x(spec), y = Element::y(spec), z = Element::z(spec), y2 = y * y;
        for (int i = 0; i < 40; ++i) {
            const JordanElement f = r.jordan(10), g = r.jordan(10);
            EXPECT_EQ(nabla(f * g), f * nabla(g) + nabla(f) * eta(g));
            EXPECT_EQ(y * f.value(), f.value() * y + nabla(f).value() * x);
            EXPECT_EQ(y2 * f.value(), f.value() * y2 + nabla(f).value() * z);
            const ZPoly p = r.zpoly(5);
            EXPECT_EQ(nabla(JordanElement(Element::from_zpoly(p))).value(), Element::from_zpoly(euler_D(p)));
        }
    }
}

TEST(Jordan, CommutatorWithY2) {
    Sampler r(Q, 2);
    const Element y2 = P("y^2");
    for (int i = 0; i < 40; ++i) {
        Element f(Q);
        for (int k = 0; k < 3; ++k)
            f.add_term({static_cast<std::uint32_t>(r.uniform(0, 1)), static_cast<std::uint32_t>(r.uniform(0, 4)), 0}, r.scalar());
        EXPECT_EQ(y2 * f - f * y2, dmap(dmap(f)));
    }
}

TEST(Jordan, DecomposeExamples) {
    const auto a = decompose_super(P("x*y"));
    EXPECT_TRUE(a.p.is_zero() && a.r.is_zero() && a.s.is_zero());
    EXPECT_EQ(a.q.value(), P("1"));
    const auto b = decompose_super(P("x*z"));
    EXPECT_EQ(b.r.value(), P("z"));
    EXPECT_TRUE(b.p.is_zero() && b.q.is_zero() && b.s.is_zero());
    const auto c = decompose_super(P("x*y^2"));
    EXPECT_EQ(to_string(c.r), oracle::frozen::xy2_decomp_r);
    EXPECT_TRUE(c.p.is_zero() && c.q.is_zero() && c.s.is_zero());
}

TEST(Jordan, DecomposeRoundTrip) {
    for (const auto& spec : {Q, F3}) {
        Sampler r(spec, 31);
        for (int i = 0; i < 80; ++i) {
            const Element b = r.element(8, 6);
            const auto d = decompose_super(b);
            EXPECT_EQ(d.recompose(), b);
            const Element xy = Element::x(spec) * Element::y(spec);
            EXPECT_EQ(d.p.value() + d.q.value() * xy + d.r.value() * Element::x(spec) + d.s.value() * Element::y(spec), b);
        }
    }
}

TEST(Jordan, HomogProductExamples) {
    const JordanElement zero = JordanElement::zero(Q), one = JordanElement::one(Q), z = JordanElement::z(Q);
    EXPECT_TRUE(homog_product(HomogKind::EvenEven, {zero, one}, {z, -one}).is_zero());
    EXPECT_TRUE(homog_product(HomogKind::OddOdd, {one, zero}, {one, zero}).is_zero());
    EXPECT_EQ(homog_product(HomogKind::OddOdd, {zero, one}, {zero, one}), P("y^2"));
}

TEST(Jordan, HomogProductFormulas) {
    for (const auto& spec : {Q, F5}) {
        Sampler r(spec, 17);
        for (int i = 0; i < 200; ++i) {
            const HomogParts f{r.jordan(6), r.jordan(6)}, g{r.jordan(6), r.jordan(6)};
            const Element fe = even_from_parts(f), fo = odd_from_parts(f);
            const Element ge = even_from_parts(g), go = odd_from_parts(g);
            EXPECT_EQ(homog_product(HomogKind::EvenEven, f, g), fe * ge);
            EXPECT_EQ(homog_product(HomogKind::OddOdd, f, g), fo * go);
            EXPECT_EQ(homog_product(HomogKind::EvenOdd, f, g), fe * go);
            EXPECT_EQ(homog_product(HomogKind::OddEven, f, g), fo * ge);
        }
    }
}
