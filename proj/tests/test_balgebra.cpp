#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace sjp;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

Element P(const char* s, const FieldSpec& spec = Q) { return parse_element(s, spec); }

PolyAz random_az(Sampler& r, unsigned deg) {
    Element e(r.spec());
    for (int i = 0; i < 3; ++i) {
        Monomial m{static_cast<std::uint32_t>(r.uniform(0, 1)), static_cast<std::uint32_t>(r.uniform(0, static_cast<int>(deg))), 0};
        e.add_term(m, r.scalar());
    }
    return PolyAz::from_element(e);
}

PolyAz d_power(PolyAz f, unsigned k) {
    for (unsigned i = 0; i < k; ++i) f = dmap(f);
    return f;
}

}  // namespace

TEST(Monomial, DegreeParityOrder) {
    const Monomial m{1, 2, 3};
    EXPECT_EQ(m.degree(), 8u);
    EXPECT_EQ(m.parity(), 0u);
    EXPECT_LT((Monomial{0, 0, 1}), (Monomial{1, 0, 0}));
    EXPECT_LT((Monomial{1, 0, 0}), (Monomial{0, 1, 0}));
    const auto b = basis_of_degree(4);
    ASSERT_EQ(b.size(), 5u);
    EXPECT_EQ(to_string(b.front()), "y^4");
    EXPECT_EQ(to_string(b.back()), "x*z*y");
}

TEST(PBW, DimensionCount) {
    EXPECT_EQ(basis_of_degree(0).size(), 1u);
    for (unsigned n = 1; n <= 20; ++n) {
        EXPECT_EQ(basis_of_degree(n).size(), n + 1);
        EXPECT_EQ(oracle::pbw_count(n), n + 1);
    }
}

TEST(Element, Ops) {
    EXPECT_TRUE((P("x") + P("-x")).is_zero());
    EXPECT_EQ(P("x*y + y*x"), P("z"));
    EXPECT_EQ(to_string(scale(P("y"), FieldElement::parse(Q, "1/2"))), "(1/2)*y");
    EXPECT_THROW(P("x") + P("x", F5), std::invalid_argument);
    EXPECT_TRUE((P("y") * FieldElement::zero(Q)).terms().empty());
}

TEST(Element, GradeAndParity) {
    const auto g = grade(P("z + y"));
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.at(2), P("z"));
    EXPECT_EQ(g.at(1), P("y"));
    const auto [ev, od] = parity_split(P("x + x*y"));
    EXPECT_EQ(ev, P("x*y"));
    EXPECT_EQ(od, P("x"));
    const auto [e0, o0] = parity_split(Element(Q));
    EXPECT_TRUE(e0.is_zero() && o0.is_zero());
}

TEST(Ore, TauAndD) {
    EXPECT_EQ(tau(P("x")), P("-x"));
    EXPECT_EQ(tau(P("z")), P("z"));
    EXPECT_EQ(to_string(tau(P("1 + x*z^2"))), oracle::frozen::tau_1_xz2);
    EXPECT_EQ(dmap(P("x")), P("z"));
    EXPECT_EQ(dmap(P("z")), P("x*z"));
    EXPECT_EQ(to_string(dmap(P("z^2"))), oracle::frozen::d_z2);
    EXPECT_EQ(oracle::d_via_commutation(P("z^2")), dmap(P("z^2")));
    EXPECT_EQ(oracle::d_via_commutation(P("1 + x*z^2")), dmap(P("1 + x*z^2")));
    EXPECT_THROW(tau(P("y")), std::invalid_argument);
    EXPECT_THROW(dmap(P("x*y")), std::invalid_argument);
}

TEST(Ore, EulerD) {
    const ZPoly z3 = ZPoly::monomial(Q, 3);
    EXPECT_EQ(euler_D(z3), z3.scaled(FieldElement(Q, 3)));
    EXPECT_TRUE(euler_D(ZPoly::constant(FieldElement::one(Q))).is_zero());
    EXPECT_TRUE(euler_D(ZPoly::monomial(F3, 3)).is_zero());
}

TEST(Ore, Commute) {
    EXPECT_EQ(ore_commute(1, P("z")), P("z*y + x*z"));
    EXPECT_EQ(to_string(ore_commute(2, P("z"))), oracle::frozen::y2_z);
    EXPECT_EQ(ore_commute(1, P("x")), P("z - x*y"));
    for (unsigned c = 0; c <= 5; ++c)
        for (const char* f : {"x", "z", "x*z^2 + 3*z", "1"})
            EXPECT_EQ(ore_commute(c, P(f)), oracle::rewritten(power(P("y"), c), P(f))) << c << " " << f;
}

TEST(Ore, Laws) {
    for (const auto& spec : {Q, F3, F5}) {
        Sampler r(spec, 11);
        for (int i = 0; i < 100; ++i) {
            const PolyAz f = random_az(r, 5), g = random_az(r, 5);
            EXPECT_EQ(tau(tau(f)), f);
            EXPECT_EQ(tau(dmap(f)), PolyAz(ZPoly(spec), ZPoly(spec)) - dmap(tau(f)));
            EXPECT_EQ(dmap(f * g), tau(f) * dmap(g) + dmap(f) * g);
            EXPECT_EQ(tau(f * g), tau(f) * tau(g));
            const PolyAz d2 = d_power(f * g, 2);
            EXPECT_EQ(d2, d_power(f, 2) * g + f * d_power(g, 2));
        }
    }
}

TEST(Ore, KernelOfDAndFixedRingOfTau) {
    for (const auto& spec : {Q, F3, F5}) {
        const unsigned N = 12;
        std::vector<Monomial> basis;
        for (std::uint32_t a = 0; a <= 1; ++a)
            for (std::uint32_t b = 0; b <= N; ++b) basis.push_back({a, b, 0});
        auto solve = [&](auto op) {
            std::vector<std::map<Monomial, FieldElement>> cols;
            for (const auto& m : basis) {
                const Element img = op(Element::monomial(spec, m));
                cols.emplace_back(img.terms().begin(), img.terms().end());
            }
            std::vector<Monomial> out;
            for (const auto& v : nullspace(spec, cols)) {
                std::size_t nz = 0;
                Monomial last;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (!v[i].is_zero()) ++nz, last = basis[i];
                EXPECT_EQ(nz, 1u);
                out.push_back(last);
            }
            return out;
        };
        const auto ker = solve([](const Element& e) { return dmap(e); });
        std::vector<Monomial> expect;
        const unsigned p = static_cast<unsigned>(spec.characteristic());
        for (std::uint32_t b = 0; b <= N; ++b)
            if (p == 0 ? b == 0 : b % p == 0) expect.push_back({0, b, 0});
        EXPECT_EQ(ker, expect) << spec.name();
        const auto fixed = solve([](const Element& e) { return tau(e) - e; });
        std::vector<Monomial> kz;
        for (std::uint32_t b = 0; b <= N; ++b) kz.push_back({0, b, 0});
        EXPECT_EQ(fixed, kz) << spec.name();
    }
}

TEST(NormalMul, Examples) {
    EXPECT_EQ(P("y") * P("x"), P("z - x*y"));
    EXPECT_TRUE((P("x") * P("x")).is_zero());
    EXPECT_EQ(P("x*y") * P("x*y"), P("z*x*y"));
    EXPECT_THROW(P("x") * P("x", F5), std::invalid_argument);
}

TEST(NormalMul, DefiningRelations) {
    for (const auto& spec : {Q, F3, F5}) {
        const Element x = Element::x(spec), y = Element::y(spec), z = Element::z(spec);
        EXPECT_TRUE((x * x).is_zero());
        EXPECT_TRUE((y * z - z * y - x * z).is_zero());
        EXPECT_TRUE((x * z - z * x).is_zero());
        EXPECT_EQ(x * y + y * x, z);
        const Element xy = x * y;
        for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(power(xy, n + 1), power(z, n) * xy);
        EXPECT_TRUE(((z - xy) * xy).is_zero());
        EXPECT_TRUE((xy * (z - xy)).is_zero());
    }
}

TEST(NormalMul, AgreesWithRewriter) {
    for (const auto& m1 : basis_up_to(5))
        for (const auto& m2 : basis_up_to(5)) {
            const Element a = Element::monomial(Q, m1), b = Element::monomial(Q, m2);
            ASSERT_EQ(a * b, rewrite_product(Q, m1, m2)) << to_string(m1) << " * " << to_string(m2);
        }
}

TEST(NormalMul, Associativity) {
    for (const auto& spec : {Q, F5}) {
        Sampler r(spec, 3);
        for (int i = 0; i < 60; ++i) {
            const Element u = r.element(6), v = r.element(6), w = r.element(6);
            EXPECT_EQ((u * v) * w, u * (v * w));
            EXPECT_EQ(u * (v + w), u * v + u * w);
        }
    }
}

TEST(NormalMul, RespectsGrading) {
    Sampler r(Q, 5);
    for (int i = 0; i < 50; ++i) {
        const unsigned m = static_cast<unsigned>(r.uniform(0, 6)), n = static_cast<unsigned>(r.uniform(0, 6));
        const Element prod = r.graded(m) * r.graded(n);
        for (const auto& [mono, c] : prod.terms()) EXPECT_EQ(mono.degree(), m + n);
    }
}

TEST(NormalMul, EvenPowersOfYPastKz) {
    for (const auto& spec : {Q, F3}) {
        Sampler r(spec, 9);
        for (int t = 0; t < 10; ++t) {
            const Element f = Element::from_zpoly(r.zpoly(4));
            for (unsigned n = 0; n <= 6; ++n) {
                Element rhs(spec);
                for (unsigned i = 0; i <= n; ++i) {
                    Element dpow = f;
                    for (unsigned k = 0; k < 2 * n - 2 * i; ++k) dpow = dmap(dpow);
                    rhs += dpow * power(Element::y(spec), 2 * i) * FieldElement::from_fraction(spec, oracle::binomial(n, i), 1);
                }
                EXPECT_EQ(power(Element::y(spec), 2 * n) * f, rhs) << n;
            }
        }
    }
}

TEST(Rewrite, StepBudget) {
    EXPECT_THROW(rewrite_words(Q, {{"yyyyyxxxxx", FieldElement::one(Q)}}, 3), std::runtime_error);
    EXPECT_EQ(oracle::word(Q, "yx"), P("z - x*y"));
}
