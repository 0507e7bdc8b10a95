#pragma once

/**
 * @file jordan.hpp
 * @brief The Jordan plane J = k[z][y^2; d^2] inside the super Jordan plane.
 *
 * J is spanned by z^b y^(2k). Every f in J is written f = sum_i a_i(z) y^(2i)
 * and the two operators used throughout the structure theory are
 *
 *     eta(f)   = sum_i a_i(z) (y^2 - z)^i
 *     nabla(f) = sum_i D(a_i(z)) (y^2 - z)^i
 *
 * with (y^2 - z)^i = y^(2i) - i z y^(2i-2). They encode the commutation rules
 * x f = eta(f) x and y f = f y + nabla(f) x for f in J.
 *
 * The abstract presentation X, Y with YX - XY = -X^2/2 is kept as its own
 * type; jordan_embed sends X -> z and Y -> -y^2/2.
 */

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "element.hpp"
#include "ore.hpp"

namespace sjp {

inline bool is_jordan(const Element& u) {
    for (const auto& [m, c] : u.terms())
        if (m.a != 0 || m.c % 2 != 0) return false;
    return true;
}

/// An Element known to lie in J (a = 0 and even y-degree on every monomial).
class JordanElement {
   public:
    explicit JordanElement(const FieldSpec& spec) : v_(spec) {}
    explicit JordanElement(Element v) : v_(std::move(v)) {
        if (!is_jordan(v_)) throw std::invalid_argument("element is not in the Jordan subalgebra k[z][y^2]");
    }

    static JordanElement zero(const FieldSpec& spec) { return JordanElement(spec); }
    static JordanElement one(const FieldSpec& spec) { return JordanElement(Element::one(spec)); }
    static JordanElement z(const FieldSpec& spec) { return JordanElement(Element::z(spec)); }
    static JordanElement y2(const FieldSpec& spec) { return JordanElement(Element::monomial(spec, {0, 0, 2})); }

    /// sum_i a_i(z) y^(2i) from the coefficient sequence.
    static JordanElement from_coefficients(const FieldSpec& spec, const std::vector<ZPoly>& a) {
        Element e(spec);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t b = 0; b < a[i].coeffs().size(); ++b)
                e.add_term({0, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(2 * i)}, a[i].coeffs()[b]);
        return JordanElement(std::move(e));
    }

    const Element& value() const noexcept { return v_; }
    const FieldSpec& spec() const noexcept { return v_.spec(); }
    bool is_zero() const noexcept { return v_.is_zero(); }

    /// (a_0(z), ..., a_n(z)) with f = sum_i a_i(z) y^(2i).
    std::vector<ZPoly> coefficients() const {
        std::vector<ZPoly> a;
        for (const auto& [m, c] : v_.terms()) {
            std::size_t i = m.c / 2;
            if (a.size() <= i) a.resize(i + 1, ZPoly(spec()));
            a[i] += ZPoly::monomial(spec(), m.b, c);
        }
        return a;
    }

    friend JordanElement operator+(const JordanElement& f, const JordanElement& g) { return JordanElement(f.v_ + g.v_); }
    friend JordanElement operator-(const JordanElement& f, const JordanElement& g) { return JordanElement(f.v_ - g.v_); }
    JordanElement operator-() const { return JordanElement(-v_); }
    friend JordanElement operator*(const JordanElement& f, const JordanElement& g) { return JordanElement(f.v_ * g.v_); }
    friend JordanElement operator*(const JordanElement& f, const FieldElement& s) { return JordanElement(f.v_ * s); }
    friend bool operator==(const JordanElement& f, const JordanElement& g) { return f.v_ == g.v_; }

   private:
    Element v_;
};

/// (y^2 - z)^i expanded as y^(2i) - i z y^(2i-2).
inline JordanElement y2_minus_z_power(const FieldSpec& spec, unsigned i) {
    Element e = Element::monomial(spec, {0, 0, 2 * i});
    if (i > 0) e.add_term({0, 1, 2 * (i - 1)}, -FieldElement(spec, i));
    return JordanElement(std::move(e));
}

namespace detail {

/// sum_i g(a_i(z)) (y^2 - z)^i, the common shape of eta and nabla.
template <class CoeffMap>
JordanElement twist_by_eta(const JordanElement& f, CoeffMap g) {
    const FieldSpec& spec = f.spec();
    Element out(spec);
    auto a = f.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
        ZPoly ai = g(a[i]);
        for (std::size_t b = 0; b < ai.coeffs().size(); ++b) {
            const FieldElement& c = ai.coeffs()[b];
            if (c.is_zero()) continue;
            out.add_term({0, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(2 * i)}, c);
            if (i > 0)
                out.add_term({0, static_cast<std::uint32_t>(b + 1), static_cast<std::uint32_t>(2 * (i - 1))},
                             -(c * FieldElement(spec, static_cast<long long>(i))));
        }
    }
    return JordanElement(std::move(out));
}

}  // namespace detail

/// The automorphism of J fixing z with eta(y^2) = y^2 - z.
inline JordanElement eta(const JordanElement& f) {
    return detail::twist_by_eta(f, [](const ZPoly& a) { return a; });
}

/// Inverse of eta, determined by y^2 -> y^2 + z.
inline JordanElement eta_inv(const JordanElement& f) {
    const FieldSpec& spec = f.spec();
    const Element shifted = Element::monomial(spec, {0, 0, 2}) + Element::z(spec);
    Element out(spec), pw = Element::one(spec);
    auto a = f.coefficients();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) pw = pw * shifted;
        if (!a[i].is_zero()) out += Element::from_zpoly(a[i]) * pw;
    }
    return JordanElement(std::move(out));
}

/// The twisted derivation with y f = f y + nabla(f) x; restricted to k[z] it is D.
inline JordanElement nabla(const JordanElement& f) {
    return detail::twist_by_eta(f, [](const ZPoly& a) { return euler_D(a); });
}

/// sum c_ij X^i Y^j in the presentation YX - XY = -X^2/2.
class AbstractJordan {
   public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    explicit AbstractJordan(const FieldSpec& spec) : spec_(spec) {}

    static AbstractJordan monomial(const FieldSpec& spec, std::uint32_t i, std::uint32_t j, const FieldElement& c) {
        AbstractJordan r(spec);
        r.add_term({i, j}, c);
        return r;
    }
    static AbstractJordan monomial(const FieldSpec& spec, std::uint32_t i, std::uint32_t j) {
        return monomial(spec, i, j, FieldElement::one(spec));
    }
    static AbstractJordan scalar(const FieldElement& c) { return monomial(c.spec(), 0, 0, c); }
    static AbstractJordan X(const FieldSpec& spec) { return monomial(spec, 1, 0); }
    static AbstractJordan Y(const FieldSpec& spec) { return monomial(spec, 0, 1); }

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::map<Key, FieldElement>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Key& k, const FieldElement& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AbstractJordan operator+(AbstractJordan a, const AbstractJordan& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k, c);
        return a;
    }
    friend AbstractJordan operator-(AbstractJordan a, const AbstractJordan& b) {
        for (const auto& [k, c] : b.terms_) a.add_term(k, -c);
        return a;
    }
    AbstractJordan operator-() const {
        AbstractJordan r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend AbstractJordan operator*(AbstractJordan a, const FieldElement& s) {
        AbstractJordan r(a.spec_);
        for (const auto& [k, c] : a.terms_) r.add_term(k, c * s);
        return r;
    }

    /// Y X^k = X^k Y - (k/2) X^(k+1), applied once per Y on the left.
    friend AbstractJordan operator*(const AbstractJordan& u, const AbstractJordan& v) {
        const FieldSpec& spec = u.spec_;
        const FieldElement half = FieldElement(spec, 1) / FieldElement(spec, 2);
        AbstractJordan out(spec);
        for (const auto& [k1, c1] : u.terms_) {
            AbstractJordan cur(spec);
            for (const auto& [k2, c2] : v.terms_) cur.add_term(k2, c2);
            for (std::uint32_t step = 0; step < k1.second; ++step) {
                AbstractJordan next(spec);
                for (const auto& [k, c] : cur.terms_) {
                    next.add_term({k.first, k.second + 1}, c);
                    next.add_term({k.first + 1, k.second}, -(c * half * FieldElement(spec, k.first)));
                }
                cur = std::move(next);
            }
            for (const auto& [k, c] : cur.terms_) out.add_term({k.first + k1.first, k.second}, c * c1);
        }
        return out;
    }

    friend bool operator==(const AbstractJordan& a, const AbstractJordan& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [k, c] : a.terms_) {
            if (k != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

   private:
    FieldSpec spec_;
    std::map<Key, FieldElement> terms_;
};

/// X -> z, Y -> -y^2/2. Since z^i y^(2j) is already a basis monomial the image is read off termwise.
inline JordanElement jordan_embed(const AbstractJordan& u) {
    const FieldSpec& spec = u.spec();
    const FieldElement minus_half = -(FieldElement(spec, 1) / FieldElement(spec, 2));
    Element out(spec);
    for (const auto& [k, c] : u.terms()) out.add_term({0, k.first, 2 * k.second}, c * minus_half.pow(k.second));
    return JordanElement(std::move(out));
}

/// b = p + q*xy + r*x + s*y with p, q, r, s in J.
struct SuperDecomposition {
    JordanElement p, q, r, s;

    Element recompose() const {
        const FieldSpec& spec = p.spec();
        const Element x = Element::x(spec), y = Element::y(spec);
        return p.value() + q.value() * (x * y) + r.value() * x + s.value() * y;
    }
};

/// Splits b along B = J + J xy + J x + J y, using x g = eta(g) x for g in J.
inline SuperDecomposition decompose_super(const Element& b) {
    const FieldSpec& spec = b.spec();
    Element p(spec), q_raw(spec), r_raw(spec), s(spec);
    for (const auto& [m, c] : b.terms()) {
        if (m.a == 0 && m.c % 2 == 0)
            p.add_term(m, c);
        else if (m.a == 0)
            s.add_term({0, m.b, m.c - 1}, c);
        else if (m.c % 2 == 0)
            r_raw.add_term({0, m.b, m.c}, c);
        else
            q_raw.add_term({0, m.b, m.c - 1}, c);
    }
    return {JordanElement(std::move(p)), eta(JordanElement(std::move(q_raw))), eta(JordanElement(std::move(r_raw))),
            JordanElement(std::move(s))};
}

/// Components (plus, minus) of a homogeneous element: f0 = plus + minus*xy, f1 = plus*x + minus*y.
using HomogParts = std::pair<JordanElement, JordanElement>;

enum class HomogKind { EvenEven, OddOdd, EvenOdd, OddEven };

/**
 * Closed-form products of C2-homogeneous elements, computed inside J:
 *
 *   f0 g0 = f0+ g0+ + (f0+ g0- + f0- eta(g0+ + g0- z)) xy
 *   f1 g1 = f1-(g1+ z + g1- y^2) + (f1+ eta(g1-) + f1-(nabla(g1-) - g1+)) xy
 *   f0 g1 = (f0+ g1+ + f0- eta(g1+ z + g1- y^2)) x + (f0+ g1-) y
 *   g1 f0 = (g1+ eta(f0+) + g1-(nabla(f0+) - f0- eta(y^2))) x + g1-(f0+ + f0- z) y
 *
 * For OddEven, left is the odd factor g1 and right the even factor f0.
 */
inline Element homog_product(HomogKind kind, const HomogParts& left, const HomogParts& right) {
    const FieldSpec& spec = left.first.spec();
    const JordanElement z = JordanElement::z(spec), y2 = JordanElement::y2(spec);
    const Element x = Element::x(spec), y = Element::y(spec), xy = x * y;
    const auto& [lp, lm] = left;
    const auto& [rp, rm] = right;
    switch (kind) {
        case HomogKind::EvenEven:
            return (lp * rp).value() + (lp * rm + lm * eta(rp + rm * z)).value() * xy;
        case HomogKind::OddOdd:
            return (lm * (rp * z + rm * y2)).value() + (lp * eta(rm) + lm * (nabla(rm) - rp)).value() * xy;
        case HomogKind::EvenOdd:
            return (lp * rp + lm * eta(rp * z + rm * y2)).value() * x + (lp * rm).value() * y;
        case HomogKind::OddEven:
            return (lp * eta(rp) + lm * (nabla(rp) - rm * eta(y2))).value() * x + (lm * (rp + rm * z)).value() * y;
    }
    throw std::logic_error("unknown product kind");
}

/// Even element from its (plus, minus) parts.
inline Element even_from_parts(const HomogParts& f) {
    const FieldSpec& spec = f.first.spec();
    return f.first.value() + f.second.value() * (Element::x(spec) * Element::y(spec));
}

/// Odd element from its (plus, minus) parts.
inline Element odd_from_parts(const HomogParts& f) {
    const FieldSpec& spec = f.first.spec();
    return f.first.value() * Element::x(spec) + f.second.value() * Element::y(spec);
}

}  // namespace sjp
