#pragma once

/**
 * @file ore.hpp
 * @brief Normal-form multiplication through the Ore presentation A[z][y; tau, d].
 *
 * A = k[x]/(x^2). Every f in A[z] splits uniquely as f = f+ + x f- with
 * f+, f- in k[z]. The automorphism and tau-derivation are
 *
 *     tau(f) = f+ - x f-,        d(f) = x D(f+) + z f-,
 *
 * where D = z d/dz is the Euler derivative. Moving y to the right uses
 * y f = tau(f) y + d(f); products of basis monomials reduce to pushing y^c
 * through x^a' z^b' one power at a time.
 */

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "element.hpp"
#include "zpoly.hpp"

namespace sjp {

/// f = plus + x * minus in A[z].
struct PolyAz {
    ZPoly plus;
    ZPoly minus;

    explicit PolyAz(const FieldSpec& spec) : plus(spec), minus(spec) {}
    PolyAz(ZPoly p, ZPoly m) : plus(std::move(p)), minus(std::move(m)) {}

    const FieldSpec& spec() const noexcept { return plus.spec(); }
    bool is_zero() const noexcept { return plus.is_zero() && minus.is_zero(); }

    static PolyAz from_element(const Element& u) {
        if (!in_Az(u)) throw std::invalid_argument("element is not in A[z] (it contains y)");
        std::vector<FieldElement> p, m;
        for (const auto& [mono, c] : u.terms()) {
            auto& v = mono.a ? m : p;
            if (v.size() <= mono.b) v.resize(mono.b + 1, FieldElement::zero(u.spec()));
            v[mono.b] = c;
        }
        return {ZPoly(u.spec(), std::move(p)), ZPoly(u.spec(), std::move(m))};
    }

    /// Emits the terms of this polynomial times y^c into out.
    void emit(Element& out, std::uint32_t c, const FieldElement& scale) const {
        for (std::size_t i = 0; i < plus.coeffs().size(); ++i)
            out.add_term({0, static_cast<std::uint32_t>(i), c}, plus.coeffs()[i] * scale);
        for (std::size_t i = 0; i < minus.coeffs().size(); ++i)
            out.add_term({1, static_cast<std::uint32_t>(i), c}, minus.coeffs()[i] * scale);
    }

    Element to_element() const {
        Element e(spec());
        emit(e, 0, FieldElement::one(spec()));
        return e;
    }

    PolyAz& operator+=(const PolyAz& o) {
        plus += o.plus;
        minus += o.minus;
        return *this;
    }
    friend PolyAz operator+(PolyAz a, const PolyAz& b) { return a += b; }
    friend PolyAz operator-(const PolyAz& a, const PolyAz& b) { return {a.plus - b.plus, a.minus - b.minus}; }
    /// x^2 = 0 and xz = zx.
    friend PolyAz operator*(const PolyAz& f, const PolyAz& g) {
        return {f.plus * g.plus, f.plus * g.minus + f.minus * g.plus};
    }
    friend bool operator==(const PolyAz& a, const PolyAz& b) { return a.plus == b.plus && a.minus == b.minus; }
};

inline ZPoly euler_D(const ZPoly& f) { return f.euler(); }

inline PolyAz tau(const PolyAz& f) { return {f.plus, -f.minus}; }

inline PolyAz dmap(const PolyAz& f) { return {f.minus.shifted(1), euler_D(f.plus)}; }

inline Element tau(const Element& f) { return tau(PolyAz::from_element(f)).to_element(); }
inline Element dmap(const Element& f) { return dmap(PolyAz::from_element(f)).to_element(); }

namespace detail {

/// Coefficients h_k in A[z] with y^c f = sum_k h_k y^k.
inline std::vector<PolyAz> push_y_through(unsigned c, const PolyAz& f) {
    std::vector<PolyAz> cur{f};
    for (unsigned step = 0; step < c; ++step) {
        std::vector<PolyAz> next(cur.size() + 1, PolyAz(f.spec()));
        for (std::size_t k = 0; k < cur.size(); ++k) {
            if (cur[k].is_zero()) continue;
            next[k + 1] += tau(cur[k]);
            next[k] += dmap(cur[k]);
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

/// Normal form of y^c * f for f in A[z].
inline Element ore_commute(unsigned c, const PolyAz& f) {
    Element out(f.spec());
    auto h = detail::push_y_through(c, f);
    for (std::size_t k = 0; k < h.size(); ++k) h[k].emit(out, static_cast<std::uint32_t>(k), FieldElement::one(f.spec()));
    return out;
}

inline Element ore_commute(unsigned c, const Element& f) { return ore_commute(c, PolyAz::from_element(f)); }

/// Exact product in PBW normal form.
inline Element normal_mul(const Element& u, const Element& v) {
    if (!(u.spec() == v.spec())) throw std::invalid_argument("mixed fields: " + u.spec().name() + " and " + v.spec().name());
    const FieldSpec& spec = u.spec();
    Element out(spec);
    if (u.is_zero() || v.is_zero()) return out;

    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<PolyAz>> cache;
    for (const auto& [m1, c1] : u.terms()) {
        for (const auto& [m2, c2] : v.terms()) {
            const FieldElement coeff = c1 * c2;
            if (m1.c == 0) {
                // No y to move: merge inside A[z].
                if (m1.a + m2.a > 1) continue;
                out.add_term({m1.a + m2.a, m1.b + m2.b, m2.c}, coeff);
                continue;
            }
            auto key = std::make_tuple(m1.c, m2.a, m2.b);
            auto it = cache.find(key);
            if (it == cache.end()) {
                PolyAz f(spec);
                if (m2.a)
                    f.minus = ZPoly::monomial(spec, m2.b);
                else
                    f.plus = ZPoly::monomial(spec, m2.b);
                it = cache.emplace(key, detail::push_y_through(m1.c, f)).first;
            }
            const auto& h = it->second;
            for (std::size_t k = 0; k < h.size(); ++k) {
                if (h[k].is_zero()) continue;
                PolyAz left = m1.a ? PolyAz(ZPoly(spec), h[k].plus) : h[k];
                left.plus = left.plus.shifted(m1.b);
                left.minus = left.minus.shifted(m1.b);
                left.emit(out, static_cast<std::uint32_t>(k) + m2.c, coeff);
            }
        }
    }
    return out;
}

inline Element operator*(const Element& u, const Element& v) { return normal_mul(u, v); }

inline Element& operator*=(Element& u, const Element& v) {
    u = normal_mul(u, v);
    return u;
}

inline Element power(const Element& u, unsigned n) {
    Element r = Element::one(u.spec());
    Element b = u;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

inline Element commutator(const Element& u, const Element& v) { return u * v - v * u; }

}  // namespace sjp
