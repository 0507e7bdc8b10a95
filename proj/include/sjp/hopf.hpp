#pragma once

/**
 * @file hopf.hpp
 * @brief The braided Hopf structure of B over the group Z = <g>.
 *
 * g acts by the super-automorphism sigma_{1,-1} (g.x = -x, g.y = -y + x) and
 * a monomial of degree n coacts by g^n. This gives the braiding
 * c(u (x) v) = (g^|u| . v) (x) u and the braided tensor product
 * (a (x) b)(c (x) d) = a (g^|b| . c) (x) b d. The coproduct is the algebra map
 * into that tensor product with x and y primitive.
 */

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "linalg.hpp"
#include "maps.hpp"
#include "ore.hpp"
#include "zpoly.hpp"

namespace sjp {

/// Sparse element of B (x) B (rank 2) or B (x) B (x) B (rank 3).
class TensorElement {
   public:
    using Key = std::array<Monomial, 3>;

    TensorElement(const FieldSpec& spec, unsigned rank) : spec_(spec), rank_(rank) {
        if (rank != 2 && rank != 3) throw std::invalid_argument("tensor rank must be 2 or 3");
    }

    static TensorElement pure(const Element& a, const Element& b) {
        TensorElement t(a.spec(), 2);
        for (const auto& [m1, c1] : a.terms())
            for (const auto& [m2, c2] : b.terms()) t.add_term({m1, m2, Monomial{}}, c1 * c2);
        return t;
    }
    static TensorElement pure(const Element& a, const Element& b, const Element& e) {
        TensorElement t(a.spec(), 3);
        for (const auto& [m1, c1] : a.terms())
            for (const auto& [m2, c2] : b.terms())
                for (const auto& [m3, c3] : e.terms()) t.add_term({m1, m2, m3}, c1 * c2 * c3);
        return t;
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    unsigned rank() const noexcept { return rank_; }
    const std::map<Key, FieldElement>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Key& k, const FieldElement& c) {
        if (c.is_zero()) return;
        if (!(c.spec() == spec_)) throw std::invalid_argument("mixed fields in tensor");
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Adds coeff * (a (x) b) for rank 2, or coeff * (a (x) b (x) e) for rank 3.
    void add_product(const Element& a, const Element& b, const FieldElement& coeff) {
        for (const auto& [m1, c1] : a.terms())
            for (const auto& [m2, c2] : b.terms()) add_term({m1, m2, Monomial{}}, coeff * c1 * c2);
    }
    void add_product(const Element& a, const Element& b, const Element& e, const FieldElement& coeff) {
        for (const auto& [m1, c1] : a.terms())
            for (const auto& [m2, c2] : b.terms())
                for (const auto& [m3, c3] : e.terms()) add_term({m1, m2, m3}, coeff * c1 * c2 * c3);
    }

    TensorElement& operator+=(const TensorElement& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        require_compatible(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const FieldElement& s) {
        TensorElement r(a.spec_, a.rank_);
        for (const auto& [k, c] : a.terms_) r.add_term(k, c * s);
        return r;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        a.require_compatible(b);
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [k, c] : a.terms_) {
            if (k != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

    void require_compatible(const TensorElement& o) const {
        if (!(spec_ == o.spec_)) throw std::invalid_argument("mixed fields in tensor arithmetic");
        if (rank_ != o.rank_) throw std::invalid_argument("tensor ranks differ");
    }

   private:
    FieldSpec spec_;
    unsigned rank_;
    std::map<Key, FieldElement> terms_;
};

/// sigma_{1,-1}: g.x = -x, g.y = -y + x.
inline SuperAut g_generator(const FieldSpec& spec) { return SuperAut(FieldElement(spec, -1), ZPoly::constant(FieldElement::one(spec))); }

/// g^n as a super-automorphism, by repeated composition (n may be negative).
inline SuperAut g_power(long long n, const FieldSpec& spec) {
    SuperAut base = n >= 0 ? g_generator(spec) : inverse_aut(g_generator(spec));
    unsigned long long e = n >= 0 ? static_cast<unsigned long long>(n) : static_cast<unsigned long long>(-n);
    SuperAut r = SuperAut::identity(spec);
    while (e) {
        if (e & 1) r = compose_aut(r, base);
        e >>= 1;
        if (e) base = compose_aut(base, base);
    }
    return r;
}

inline Element g_action(long long n, const Element& u) { return apply_aut(g_power(n, u.spec()), u); }

/**
 * Per-field workspace for braided computations. Caches g^n on monomials;
 * not meant to be shared between threads.
 */
class Braided {
   public:
    explicit Braided(const FieldSpec& spec) : spec_(spec) {}

    const FieldSpec& spec() const noexcept { return spec_; }

    const Element& g_on(unsigned n, const Monomial& m) {
        auto key = std::make_pair(n, m);
        auto it = act_.find(key);
        if (it != act_.end()) return it->second;
        while (pow_.size() <= n) pow_.push_back(pow_.empty() ? SuperAut::identity(spec_) : compose_aut(pow_.back(), g_generator(spec_)));
        return act_.emplace(key, apply_aut(pow_[n], Element::monomial(spec_, m))).first->second;
    }

    Element g_on(unsigned n, const Element& u) {
        Element out(spec_);
        for (const auto& [m, c] : u.terms()) out += g_on(n, m) * c;
        return out;
    }

    /// c(u (x) v) = (g^|u| . v) (x) u for homogeneous u.
    TensorElement braiding(const Element& u, const Element& v) {
        if (!u.is_homogeneous()) throw std::invalid_argument("braiding: left factor must be homogeneous (split it with grade)");
        TensorElement t(spec_, 2);
        if (u.is_zero()) return t;
        t.add_product(g_on(static_cast<unsigned>(u.degree()), v), u, FieldElement::one(spec_));
        return t;
    }

    /// c applied to factors (1,2) of a rank-3 tensor.
    TensorElement braid12(const TensorElement& t) {
        TensorElement out(spec_, 3);
        for (const auto& [k, c] : t.terms())
            out.add_product(g_on(k[0].degree(), k[1]), Element::monomial(spec_, k[0]), Element::monomial(spec_, k[2]), c);
        return out;
    }

    /// c applied to factors (2,3) of a rank-3 tensor.
    TensorElement braid23(const TensorElement& t) {
        TensorElement out(spec_, 3);
        for (const auto& [k, c] : t.terms())
            out.add_product(Element::monomial(spec_, k[0]), g_on(k[1].degree(), k[2]), Element::monomial(spec_, k[1]), c);
        return out;
    }

    /// Braided tensor product: (a (x) b)(c (x) d) = a (g^|b| . c) (x) b d,
    /// and for rank 3: (a (x) b (x) e)(c (x) d (x) f) = a (g^(|b|+|e|) . c) (x) b (g^|e| . d) (x) e f.
    TensorElement mul(const TensorElement& A, const TensorElement& B) {
        A.require_compatible(B);
        TensorElement out(spec_, A.rank());
        for (const auto& [ka, ca] : A.terms()) {
            for (const auto& [kb, cb] : B.terms()) {
                const FieldElement coeff = ca * cb;
                const Element a = Element::monomial(spec_, ka[0]);
                if (A.rank() == 2) {
                    const Element left = a * g_on(ka[1].degree(), kb[0]);
                    const Element right = Element::monomial(spec_, ka[1]) * Element::monomial(spec_, kb[1]);
                    out.add_product(left, right, coeff);
                } else {
                    const Element left = a * g_on(ka[1].degree() + ka[2].degree(), kb[0]);
                    const Element mid = Element::monomial(spec_, ka[1]) * g_on(ka[2].degree(), kb[1]);
                    const Element right = Element::monomial(spec_, ka[2]) * Element::monomial(spec_, kb[2]);
                    out.add_product(left, mid, right, coeff);
                }
            }
        }
        return out;
    }

   private:
    FieldSpec spec_;
    std::vector<SuperAut> pow_;
    std::map<std::pair<unsigned, Monomial>, Element> act_;
};

inline TensorElement braiding(const Element& u, const Element& v) { return Braided(u.spec()).braiding(u, v); }

inline TensorElement tensor_mul(const TensorElement& A, const TensorElement& B) { return Braided(A.spec()).mul(A, B); }

/// z (x) 1 + 1 (x) z + x (x) x.
inline TensorElement reference_coproduct_z(const FieldSpec& spec) {
    const Element one = Element::one(spec), x = Element::x(spec), z = Element::z(spec);
    return TensorElement::pure(z, one) + TensorElement::pure(one, z) + TensorElement::pure(x, x);
}

/**
 * The coproduct, with x and y primitive. Delta(z) is derived from
 * Delta(x)Delta(y) + Delta(y)Delta(x) and checked against
 * z (x) 1 + 1 (x) z + x (x) x on construction. Caches powers; one instance per thread.
 */
class Coproduct {
   public:
    explicit Coproduct(const FieldSpec& spec) : br_(spec) {
        const Element one = Element::one(spec);
        dx_ = TensorElement::pure(Element::x(spec), one) + TensorElement::pure(one, Element::x(spec));
        dy_ = TensorElement::pure(Element::y(spec), one) + TensorElement::pure(one, Element::y(spec));
        dz_ = br_.mul(dx_, dy_) + br_.mul(dy_, dx_);
        if (!(dz_ == reference_coproduct_z(spec))) throw std::logic_error("derived coproduct of z disagrees with z(x)1 + 1(x)z + x(x)x");
        zpow_.push_back(TensorElement::pure(one, one));
        ypow_.push_back(TensorElement::pure(one, one));
    }

    const FieldSpec& spec() const noexcept { return br_.spec(); }
    Braided& braided() noexcept { return br_; }
    const TensorElement& of_x() const noexcept { return dx_; }
    const TensorElement& of_y() const noexcept { return dy_; }
    const TensorElement& of_z() const noexcept { return dz_; }

    const TensorElement& of_monomial(const Monomial& m) {
        auto it = mono_.find(m);
        if (it != mono_.end()) return it->second;
        while (zpow_.size() <= m.b) zpow_.push_back(br_.mul(zpow_.back(), dz_));
        while (ypow_.size() <= m.c) ypow_.push_back(br_.mul(ypow_.back(), dy_));
        TensorElement t = m.a ? br_.mul(dx_, zpow_[m.b]) : zpow_[m.b];
        return mono_.emplace(m, br_.mul(t, ypow_[m.c])).first->second;
    }

    TensorElement operator()(const Element& u) {
        TensorElement out(spec(), 2);
        for (const auto& [m, c] : u.terms()) out += of_monomial(m) * c;
        return out;
    }

    /// (Delta (x) id) on a rank-2 tensor.
    TensorElement left(const TensorElement& t) {
        TensorElement out(spec(), 3);
        for (const auto& [k, c] : t.terms())
            for (const auto& [kk, cc] : of_monomial(k[0]).terms()) out.add_term({kk[0], kk[1], k[1]}, c * cc);
        return out;
    }

    /// (id (x) Delta) on a rank-2 tensor.
    TensorElement right(const TensorElement& t) {
        TensorElement out(spec(), 3);
        for (const auto& [k, c] : t.terms())
            for (const auto& [kk, cc] : of_monomial(k[1]).terms()) out.add_term({k[0], kk[0], kk[1]}, c * cc);
        return out;
    }

   private:
    Braided br_;
    TensorElement dx_{br_.spec(), 2}, dy_{br_.spec(), 2}, dz_{br_.spec(), 2};
    std::vector<TensorElement> zpow_, ypow_;
    std::map<Monomial, TensorElement> mono_;
};

inline TensorElement coproduct(const Element& u) { return Coproduct(u.spec())(u); }

/// Coefficient of 1: the algebra map killing x and y.
inline FieldElement counit(const Element& u) { return u.coeff(Monomial{}); }

/// (eps (x) id) of a rank-2 tensor.
inline Element counit_left(const TensorElement& t) {
    Element out(t.spec());
    for (const auto& [k, c] : t.terms())
        if (k[0].is_one()) out.add_term(k[1], c);
    return out;
}

/// (id (x) eps) of a rank-2 tensor.
inline Element counit_right(const TensorElement& t) {
    Element out(t.spec());
    for (const auto& [k, c] : t.terms())
        if (k[1].is_one()) out.add_term(k[0], c);
    return out;
}

/// Applies f to each tensor factor of a rank-2 tensor.
template <class Map>
TensorElement map_tensor(const TensorElement& t, Map f) {
    const FieldSpec& spec = t.spec();
    TensorElement out(spec, 2);
    std::map<Monomial, Element> img;
    auto image = [&](const Monomial& m) -> const Element& {
        auto it = img.find(m);
        if (it == img.end()) it = img.emplace(m, f(Element::monomial(spec, m))).first;
        return it->second;
    };
    for (const auto& [k, c] : t.terms()) out.add_product(image(k[0]), image(k[1]), c);
    return out;
}

/// Basis of the primitive elements of degree n: Delta(b) = b (x) 1 + 1 (x) b.
inline std::vector<Element> primitive_space(unsigned n, const FieldSpec& spec) {
    Coproduct delta(spec);
    const auto basis = basis_of_degree(n);
    const Element one = Element::one(spec);
    std::vector<std::map<TensorElement::Key, FieldElement>> cols;
    for (const auto& m : basis) {
        const Element b = Element::monomial(spec, m);
        TensorElement d = delta(b) - TensorElement::pure(b, one) - TensorElement::pure(one, b);
        cols.emplace_back(d.terms().begin(), d.terms().end());
    }
    std::vector<Element> out;
    for (const auto& v : nullspace(spec, cols)) {
        Element e(spec);
        for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v[i]);
        out.push_back(std::move(e));
    }
    return out;
}

/**
 * Representative in the Nichols quotient B / <y^(2p), z^p> over F_p. Both
 * generators are central, so the ideal is spanned by the monomials with
 * b >= p or c >= 2p.
 */
inline Element nichols_reduce(const Element& u) {
    if (!u.spec().is_prime()) throw std::domain_error("nichols reduction needs a prime field");
    const std::uint64_t p = u.spec().characteristic();
    return u.filtered([p](const Monomial& m) { return m.b < p && m.c < 2 * p; });
}

/// Element of L = k[eta_L].
struct LElement {
    ZPoly poly;

    std::string to_string() const { return poly.to_string("eta_L"); }
    friend bool operator==(const LElement&, const LElement&) = default;
};

/// pi(x) = 0, pi(y) = eta_L; keeps the monomials y^c.
inline LElement project_L(const Element& u) {
    std::vector<FieldElement> v;
    for (const auto& [m, c] : u.terms()) {
        if (m.a != 0 || m.b != 0) continue;
        if (v.size() <= m.c) v.resize(m.c + 1, FieldElement::zero(u.spec()));
        v[m.c] = c;
    }
    return {ZPoly(u.spec(), std::move(v))};
}

/// Element of L (x) L, keyed by the exponent pair.
using LTensor = std::map<std::pair<unsigned, unsigned>, FieldElement>;

namespace detail {
inline void add_to(LTensor& t, std::pair<unsigned, unsigned> k, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}
}  // namespace detail

/// Coproduct of L with eta_L primitive and c(eta_L (x) eta_L) = -eta_L (x) eta_L,
/// so (a (x) eta^j)(eta^k (x) d) picks up the sign (-1)^(jk).
inline LTensor coproduct_L(const LElement& f) {
    const FieldSpec& spec = f.poly.spec();
    const FieldElement one = FieldElement::one(spec);
    LTensor out;
    LTensor pw{{{0, 0}, one}};
    for (std::size_t n = 0; n < f.poly.coeffs().size(); ++n) {
        if (n > 0) {
            LTensor next;
            for (const auto& [k, c] : pw) {
                detail::add_to(next, {k.first + 1, k.second}, (k.second % 2 ? -c : c));
                detail::add_to(next, {k.first, k.second + 1}, c);
            }
            pw = std::move(next);
        }
        for (const auto& [k, c] : pw) detail::add_to(out, k, c * f.poly.coeffs()[n]);
    }
    return out;
}

/// (pi (x) pi) of a rank-2 tensor.
inline LTensor project_tensor(const TensorElement& t) {
    LTensor out;
    for (const auto& [k, c] : t.terms())
        if (k[0].a == 0 && k[0].b == 0 && k[1].a == 0 && k[1].b == 0) detail::add_to(out, {k[0].c, k[1].c}, c);
    return out;
}

/**
 * Checks Delta o sigma = (sigma (x) sigma) o Delta on every basis monomial of
 * degree <= bound. Among super-automorphisms this holds exactly when s is constant.
 */
inline bool is_hopf_automorphism(const SuperAut& sigma, unsigned bound) {
    Coproduct delta(sigma.spec());
    auto apply = [&](const Element& e) { return apply_aut(sigma, e); };
    for (const auto& m : basis_up_to(bound)) {
        const Element b = Element::monomial(sigma.spec(), m);
        if (!(delta(apply(b)) == map_tensor(delta.of_monomial(m), apply))) return false;
    }
    return true;
}

}  // namespace sjp
