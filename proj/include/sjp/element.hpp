#pragma once

/**
 * @file element.hpp
 * @brief Elements of the super Jordan plane in the PBW basis x^a z^b y^c.
 *
 * An Element is a sparse map from basis monomials to nonzero coefficients.
 * The map is kept canonical (zero coefficients pruned), so structural
 * equality is algebraic equality. Multiplication lives in ore.hpp.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "zpoly.hpp"

namespace sjp {

/// Basis monomial x^a z^b y^c with a in {0, 1}.
struct Monomial {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;

    /// x and y have degree 1, z = xy + yx has degree 2.
    unsigned degree() const noexcept { return a + 2 * b + c; }
    unsigned parity() const noexcept { return (a + c) % 2; }
    bool is_one() const noexcept { return a == 0 && b == 0 && c == 0; }

    /// Graded, then lexicographic on (a, b, c).
    friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) noexcept {
        if (auto cmp = l.degree() <=> r.degree(); cmp != 0) return cmp;
        if (auto cmp = l.a <=> r.a; cmp != 0) return cmp;
        if (auto cmp = l.b <=> r.b; cmp != 0) return cmp;
        return l.c <=> r.c;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All basis monomials of total degree n, in printing order.
inline std::vector<Monomial> basis_of_degree(unsigned n) {
    std::vector<Monomial> out;
    for (std::uint32_t a = 0; a <= 1 && a <= n; ++a)
        for (std::uint32_t b = 0; a + 2 * b <= n; ++b) out.push_back({a, b, n - a - 2 * b});
    std::sort(out.begin(), out.end());
    return out;
}

/// All basis monomials of degree at most n.
inline std::vector<Monomial> basis_up_to(unsigned n) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= n; ++d) {
        auto part = basis_of_degree(d);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

class Element {
   public:
    using TermMap = std::map<Monomial, FieldElement>;

    Element() = default;
    explicit Element(const FieldSpec& spec) : spec_(spec) {}

    static Element zero(const FieldSpec& spec) { return Element(spec); }
    static Element scalar(const FieldElement& c) { return monomial(Monomial{}, c); }
    static Element scalar(const FieldSpec& spec, long long c) { return scalar(FieldElement(spec, c)); }
    static Element one(const FieldSpec& spec) { return scalar(spec, 1); }
    static Element monomial(const Monomial& m, const FieldElement& c) {
        Element e(c.spec());
        e.add_term(m, c);
        return e;
    }
    static Element monomial(const FieldSpec& spec, const Monomial& m) { return monomial(m, FieldElement::one(spec)); }
    static Element x(const FieldSpec& spec) { return monomial(spec, {1, 0, 0}); }
    static Element y(const FieldSpec& spec) { return monomial(spec, {0, 0, 1}); }
    static Element z(const FieldSpec& spec) { return monomial(spec, {0, 1, 0}); }

    /// Embeds a polynomial in z.
    static Element from_zpoly(const ZPoly& f) {
        Element e(f.spec());
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) e.add_term({0, static_cast<std::uint32_t>(i), 0}, f.coeffs()[i]);
        return e;
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    FieldElement coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? FieldElement::zero(spec_) : it->second;
    }

    /// Highest total degree present; -1 for zero.
    int degree() const noexcept { return is_zero() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

    /// True if every monomial has the same total degree (zero counts as homogeneous).
    bool is_homogeneous() const noexcept {
        return is_zero() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    /// 0 or 1 when all monomials share a parity; -1 otherwise (or for zero).
    int parity() const noexcept {
        if (is_zero()) return -1;
        unsigned p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) return -1;
        return static_cast<int>(p);
    }

    /// Accumulates c * m, pruning a cancelled coefficient.
    void add_term(const Monomial& m, const FieldElement& c) {
        if (c.is_zero()) return;
        if (!(c.spec() == spec_)) throw std::invalid_argument("mixed fields: " + spec_.name() + " and " + c.spec().name());
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        require_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Element operator-() const {
        Element r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Element& operator*=(const FieldElement& s) {
        if (!(s.spec() == spec_)) throw std::invalid_argument("mixed fields: " + spec_.name() + " and " + s.spec().name());
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const FieldElement& s) { return a *= s; }
    friend Element operator*(const FieldElement& s, Element a) { return a *= s; }

    friend bool operator==(const Element& a, const Element& b) {
        a.require_same(b);
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (!(m == it->first) || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

    /// The part made of monomials satisfying pred.
    template <class Pred>
    Element filtered(Pred pred) const {
        Element r(spec_);
        for (const auto& [m, c] : terms_)
            if (pred(m)) r.terms_.emplace(m, c);
        return r;
    }

   private:
    void require_same(const Element& o) const {
        if (!(spec_ == o.spec_)) throw std::invalid_argument("mixed fields: " + spec_.name() + " and " + o.spec_.name());
    }

    FieldSpec spec_;
    TermMap terms_;
};

inline Element scale(const Element& u, const FieldElement& s) { return u * s; }

/// Homogeneous components keyed by total degree.
inline std::map<unsigned, Element> grade(const Element& u) {
    std::map<unsigned, Element> out;
    for (const auto& [m, c] : u.terms()) {
        auto [it, _] = out.try_emplace(m.degree(), u.spec());
        it->second.add_term(m, c);
    }
    return out;
}

/// (even part, odd part) for B = B_0 + B_1.
inline std::pair<Element, Element> parity_split(const Element& u) {
    return {u.filtered([](const Monomial& m) { return m.parity() == 0; }),
            u.filtered([](const Monomial& m) { return m.parity() == 1; })};
}

/// True when u lies in A[z] (no y).
inline bool in_Az(const Element& u) {
    for (const auto& [m, c] : u.terms())
        if (m.c != 0) return false;
    return true;
}

/// True when u lies in k[z].
inline bool in_kz(const Element& u) {
    for (const auto& [m, c] : u.terms())
        if (m.a != 0 || m.c != 0) return false;
    return true;
}

/// Converts an element of k[z] back to a ZPoly; throws otherwise.
inline ZPoly to_zpoly(const Element& u) {
    if (!in_kz(u)) throw std::invalid_argument("element is not a polynomial in z");
    std::vector<FieldElement> v;
    for (const auto& [m, c] : u.terms()) {
        if (v.size() <= m.b) v.resize(m.b + 1, FieldElement::zero(u.spec()));
        v[m.b] = c;
    }
    return ZPoly(u.spec(), std::move(v));
}

}  // namespace sjp
