#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace sjp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

Element P(const char* s, const FieldSpec& spec = Q) { return parse_element(s, spec); }
ZPoly S(const char* s, const FieldSpec& spec = Q) { return parse_zpoly(s, spec); }
FieldElement C(long long v, const FieldSpec& spec = Q) { return FieldElement(spec, v); }

SuperAut random_aut(Sampler& r) { return SuperAut(r.nonzero_scalar(), r.zpoly(3)); }

}  // namespace

TEST(SuperAut, Examples) {
    const SuperAut s0(C(3), S("0"));
    EXPECT_EQ(apply_aut(s0, P("z")), P("9*z"));
    const SuperAut s(C(2), S("1 + z"));
    EXPECT_EQ(apply_aut(s, P("x*y")), P("4*x*y"));
    EXPECT_EQ(apply_aut(s, P("y^2")), P("4*y^2 + 2*z*(1 + z)"));
    EXPECT_THROW(SuperAut(C(0), S("z")), std::invalid_argument);
}

TEST(SuperAut, PreservesRelations) {
    for (const auto& spec : {Q, F5}) {
        Sampler r(spec, 1);
        for (int i = 0; i < 50; ++i) {
            const SuperAut sigma = random_aut(r);
            const Element x = apply_aut(sigma, Element::x(spec)), y = apply_aut(sigma, Element::y(spec));
            const Element z = apply_aut(sigma, Element::z(spec));
            EXPECT_TRUE((x * x).is_zero());
            EXPECT_TRUE((y * z - z * y - x * z).is_zero());
            EXPECT_EQ(x * y + y * x, z);
        }
    }
}

TEST(SuperAut, IsAlgebraMap) {
    Sampler r(Q, 2);
    for (int i = 0; i < 30; ++i) {
        const SuperAut sigma = random_aut(r);
        const Element u = r.element(5), v = r.element(5);
        EXPECT_EQ(apply_aut(sigma, u * v), apply_aut(sigma, u) * apply_aut(sigma, v));
        EXPECT_EQ(apply_aut(sigma, u), oracle::substitute(sigma, u));
    }
}

TEST(SuperAut, Compose) {
    const SuperAut sigma(C(2), S("z")), tau1(C(3), S("1"));
    const SuperAut expect(C(6), S("3*z + 2"));
    EXPECT_EQ(compose_aut(sigma, tau1), expect);
    for (const char* g : {"x", "y"})
        EXPECT_EQ(apply_aut(sigma, apply_aut(tau1, P(g))), apply_aut(expect, P(g)));
    const SuperAut s(C(5), S("1 - z^2"));
    EXPECT_EQ(compose_aut(s, SuperAut::identity(Q)), s);
    EXPECT_EQ(compose_aut(SuperAut::identity(Q), s), s);
    EXPECT_EQ(compose_aut(s, inverse_aut(s)), SuperAut::identity(Q));
    EXPECT_EQ(compose_aut(inverse_aut(s), s), SuperAut::identity(Q));
    EXPECT_THROW(compose_aut(s, SuperAut::identity(F5)), std::invalid_argument);
}

TEST(SuperAut, CompositionLaw) {
    for (const auto& spec : {Q, F5}) {
        Sampler r(spec, 3);
        for (int i = 0; i < 100; ++i) {
            const SuperAut a = random_aut(r), b = random_aut(r);
            const SuperAut ab = compose_aut(a, b);
            for (const auto& g : {Element::x(spec), Element::y(spec)})
                EXPECT_EQ(apply_aut(ab, g), apply_aut(a, apply_aut(b, g)));
            EXPECT_EQ(restrict_to_jordan(ab), compose_jordan_aut(restrict_to_jordan(a), restrict_to_jordan(b)));
        }
    }
}

TEST(JordanAut, Restriction) {
    EXPECT_EQ(restrict_to_jordan(SuperAut(C(-1), S("0"))), JordanAut(C(1), S("0")));
    EXPECT_EQ(restrict_to_jordan(SuperAut(C(1), S("1"))), JordanAut(C(1), S("z")));
    EXPECT_EQ(restrict_to_jordan(SuperAut(C(2), S("0"))), JordanAut(C(4), S("0")));
    Sampler r(Q, 4);
    for (int i = 0; i < 30; ++i) {
        const SuperAut sigma = random_aut(r);
        const JordanAut t = restrict_to_jordan(sigma);
        for (const char* g : {"z", "y^2"}) {
            const JordanElement f(P(g));
            EXPECT_EQ(apply_jordan_aut(t, f).value(), apply_aut(sigma, f.value()));
        }
        const JordanElement f = r.jordan(6);
        EXPECT_EQ(apply_jordan_aut(t, f).value(), apply_aut(sigma, f.value()));
    }
}

TEST(Omega, Examples) {
    EXPECT_EQ(apply_omega(P("x*y")), P("z - x*y"));
    EXPECT_EQ(apply_omega(P("z")), P("z"));
    EXPECT_EQ(apply_omega(P("y^2")), P("y^2"));
    EXPECT_EQ(apply_omega(P("z*x*y")), P("(z - x*y)^2"));
    EXPECT_EQ(apply_omega(P("x*y") * P("x*y")), apply_omega(P("x*y")) * apply_omega(P("x*y")));
    EXPECT_THROW(apply_omega(P("x")), std::invalid_argument);
}

TEST(Omega, InvolutiveAndMultiplicative) {
    for (const auto& spec : {Q, F3}) {
        Sampler r(spec, 5);
        for (int i = 0; i < 100; ++i) {
            const Element u = r.parity_homogeneous(0, 6), v = r.parity_homogeneous(0, 6);
            EXPECT_EQ(apply_omega(apply_omega(u)), u);
            EXPECT_EQ(apply_omega(u * v), apply_omega(u) * apply_omega(v));
        }
    }
}

TEST(Derivation, Examples) {
    const GenDerivation c = GenDerivation::c(Q);
    EXPECT_TRUE(apply_derivation(c, P("z")).is_zero());
    EXPECT_TRUE(apply_derivation(c, P("x*y")).is_zero());
    EXPECT_EQ(apply_derivation(c, P("y^2")), P("z"));
    EXPECT_TRUE(apply_derivation(c, P("x")).is_zero());
    EXPECT_THROW(GenDerivation(P("y"), P("0")), std::invalid_argument);
}

TEST(Derivation, LeibnizAndDegree) {
    Sampler r(Q, 6);
    for (int i = 0; i < 40; ++i) {
        const GenDerivation d = GenDerivation::scaled_c(r.zpoly(3));
        const Element u = r.element(6), v = r.element(6);
        EXPECT_EQ(apply_derivation(d, u * v), apply_derivation(d, u) * v + u * apply_derivation(d, v));
        const Element cu = apply_derivation(GenDerivation::c(Q), u);
        if (!cu.is_zero()) { EXPECT_LE(y_degree(cu), y_degree(u) - 1); }
    }
}

TEST(Derivation, Exponential) {
    const ZPoly s = S("2 - z");
    EXPECT_EQ(exp_derivation(s, P("y")), P("y + (2 - z)*x"));
    EXPECT_EQ(exp_derivation(s, P("x")), P("x"));
    EXPECT_EQ(exp_derivation(s, P("y^2")), P("y^2 + z*(2 - z)"));
    Sampler r(Q, 7);
    for (int i = 0; i < 50; ++i) {
        const ZPoly si = r.zpoly(3);
        const Element u = r.element(6);
        EXPECT_EQ(exp_derivation(si, u), apply_aut(SuperAut(C(1), si), u));
    }
    try {
        exp_derivation(S("z", F3), P("y", F3));
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("characteristic 0"), std::string::npos);
    }
}
