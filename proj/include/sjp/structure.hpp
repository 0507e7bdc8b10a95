#pragma once

/**
 * @file structure.hpp
 * @brief Decision procedures and probes for the ring structure of B.
 *
 * Centers are found by exact linear solves over a graded piece. Zero
 * divisors are decided by the closed criteria on the J-components:
 *
 *   even f = f+ + f- xy   is a zero divisor  iff  f+ = 0  or  f+ = -f- z
 *   odd  f = f+ x + f- y  is a zero divisor  iff  f- = 0  or  f- y^2 = -f+ z
 *
 * and brute_annihilator gives an independent answer from a null space.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "jordan.hpp"
#include "linalg.hpp"
#include "ore.hpp"

namespace sjp {

namespace detail {

inline Element element_from_vector(const FieldSpec& spec, const std::vector<Monomial>& basis, const Vector& v) {
    Element e(spec);
    for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v[i]);
    return e;
}

/// Null space of the linear maps m -> (conditions(m)[0], conditions(m)[1], ...) on span(basis).
template <class Conditions>
std::vector<Element> solve_on_basis(const FieldSpec& spec, const std::vector<Monomial>& basis, Conditions conditions) {
    using Key = std::pair<std::size_t, Monomial>;
    std::vector<std::map<Key, FieldElement>> cols;
    for (const auto& m : basis) {
        std::map<Key, FieldElement> col;
        auto images = conditions(Element::monomial(spec, m));
        for (std::size_t eq = 0; eq < images.size(); ++eq)
            for (const auto& [mono, c] : images[eq].terms()) col.emplace(Key{eq, mono}, c);
        cols.push_back(std::move(col));
    }
    std::vector<Element> out;
    for (const auto& v : nullspace(spec, cols)) out.push_back(element_from_vector(spec, basis, v));
    return out;
}

inline void require_homogeneous_nonzero(const Element& f, const char* what) {
    if (f.is_zero()) throw std::invalid_argument(std::string(what) + ": input must be nonzero");
    if (f.parity() < 0) throw std::invalid_argument(std::string(what) + ": input must be even or odd (split it with parity_split)");
}

}  // namespace detail

/// Basis of the degree-n part of the center, tested against the generators x and y.
inline std::vector<Element> center_basis(unsigned n, const FieldSpec& spec) {
    const Element x = Element::x(spec), y = Element::y(spec);
    return detail::solve_on_basis(spec, basis_of_degree(n), [&](const Element& b) {
        return std::array<Element, 2>{commutator(b, x), commutator(b, y)};
    });
}

/// Basis of the degree-n part of the supercenter: f g = (-1)^(|f||g|) g f for g in {x, y}.
/// The parity of a degree-n element is n mod 2.
inline std::vector<Element> supercenter_basis(unsigned n, const FieldSpec& spec) {
    const Element x = Element::x(spec), y = Element::y(spec);
    const bool odd = n % 2 == 1;
    return detail::solve_on_basis(spec, basis_of_degree(n), [&](const Element& b) {
        if (odd) return std::array<Element, 2>{b * x + x * b, b * y + y * b};
        return std::array<Element, 2>{b * x - x * b, b * y - y * b};
    });
}

enum class ZeroDivisorReason { EvenInJxy, EvenInJzMinusXy, OddFminusZero, OddRelation, Regular };

inline std::string reason_name(ZeroDivisorReason r) {
    switch (r) {
        case ZeroDivisorReason::EvenInJxy: return "EvenInJxy";
        case ZeroDivisorReason::EvenInJzMinusXy: return "EvenInJ(z-xy)";
        case ZeroDivisorReason::OddFminusZero: return "OddFminusZero";
        case ZeroDivisorReason::OddRelation: return "OddRelation";
        case ZeroDivisorReason::Regular: return "Regular";
    }
    return "Regular";
}

inline ZeroDivisorReason parse_reason(const std::string& s) {
    for (auto r : {ZeroDivisorReason::EvenInJxy, ZeroDivisorReason::EvenInJzMinusXy, ZeroDivisorReason::OddFminusZero,
                   ZeroDivisorReason::OddRelation, ZeroDivisorReason::Regular})
        if (reason_name(r) == s) return r;
    throw std::invalid_argument("unknown zero-divisor reason '" + s + "'");
}

struct ZeroDivisorVerdict {
    bool is_zero_divisor = false;
    std::optional<Element> witness;  // input * witness == 0 when present
    ZeroDivisorReason reason = ZeroDivisorReason::Regular;
};

inline ZeroDivisorVerdict classify_zero_divisor(const Element& f) {
    detail::require_homogeneous_nonzero(f, "classify_zero_divisor");
    const FieldSpec& spec = f.spec();
    const auto parts = decompose_super(f);
    const JordanElement z = JordanElement::z(spec), y2 = JordanElement::y2(spec);
    const Element xy = Element::x(spec) * Element::y(spec);
    if (f.parity() == 0) {
        const JordanElement& fp = parts.p;
        const JordanElement& fm = parts.q;
        if (fp.is_zero()) return {true, Element::z(spec) - xy, ZeroDivisorReason::EvenInJxy};
        if (fp == -(fm * z)) return {true, xy, ZeroDivisorReason::EvenInJzMinusXy};
        return {};
    }
    const JordanElement& fp = parts.r;
    const JordanElement& fm = parts.s;
    if (fm.is_zero()) return {true, f, ZeroDivisorReason::OddFminusZero};
    if (fm * y2 == -(fp * z)) return {true, f, ZeroDivisorReason::OddRelation};
    return {};
}

inline bool is_regular_homogeneous(const Element& f) { return !classify_zero_divisor(f).is_zero_divisor; }

enum class Side { Right, Left };

/**
 * Nonzero g of degree <= bound with f g = 0 (Side::Right) or g f = 0
 * (Side::Left), by an exact null-space computation. None when the
 * annihilator is trivial up to the bound.
 */
inline std::optional<Element> brute_annihilator(const Element& f, unsigned bound, Side side = Side::Right) {
    if (f.is_zero()) throw std::invalid_argument("brute_annihilator: input must be nonzero");
    const FieldSpec& spec = f.spec();
    auto sols = detail::solve_on_basis(spec, basis_up_to(bound), [&](const Element& g) {
        return std::array<Element, 1>{side == Side::Right ? f * g : g * f};
    });
    if (sols.empty()) return std::nullopt;
    return sols.front();
}

/// Default witness-search bound: every closed-form witness has degree <= deg f + 2.
inline unsigned default_annihilator_bound(const Element& f) { return static_cast<unsigned>(f.degree()) + 4; }

/**
 * A basis monomial m of degree <= bound with f m g != 0. The candidates
 * 1, x, y, z come first, then every other monomial in graded order.
 */
inline std::optional<Monomial> superprime_witness(const Element& f, const Element& g, unsigned bound) {
    detail::require_homogeneous_nonzero(f, "superprime_witness");
    detail::require_homogeneous_nonzero(g, "superprime_witness");
    const FieldSpec& spec = f.spec();
    std::vector<Monomial> order{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    for (const auto& m : basis_up_to(bound))
        if (std::find(order.begin(), order.end(), m) == order.end()) order.push_back(m);
    for (const auto& m : order) {
        if (m.degree() > bound) continue;
        if (!(f * Element::monomial(spec, m) * g).is_zero()) return m;
    }
    return std::nullopt;
}

/// Checks xy * h * (z - xy) = 0 for every even basis monomial h of degree <= bound.
inline bool notprime_probe(unsigned bound, const FieldSpec& spec = FieldSpec::rationals()) {
    const Element xy = Element::x(spec) * Element::y(spec);
    const Element right = Element::z(spec) - xy;
    for (const auto& m : basis_up_to(bound)) {
        if (m.parity() != 0) continue;
        if (!(xy * Element::monomial(spec, m) * right).is_zero()) return false;
    }
    return true;
}

/// An even basis monomial h of degree <= bound with f0 h f0 != 0, if any.
inline std::optional<Monomial> semiprime_witness(const Element& f0, unsigned bound) {
    if (f0.is_zero() || f0.parity() != 0) throw std::invalid_argument("semiprime_witness: input must be nonzero and even");
    for (const auto& m : basis_up_to(bound)) {
        if (m.parity() != 0) continue;
        if (!(f0 * Element::monomial(f0.spec(), m) * f0).is_zero()) return m;
    }
    return std::nullopt;
}

/**
 * Right Ore condition spot check for a regular f: searches b' of degree
 * <= bound and a regular even f' of degree <= bound with f b' = b f'.
 */
inline std::optional<std::pair<Element, Element>> ore_probe(const Element& f, const Element& b, unsigned bound) {
    if (!is_regular_homogeneous(f)) throw std::invalid_argument("ore_probe: f must be a homogeneous regular element");
    const FieldSpec& spec = f.spec();
    const auto all = basis_up_to(bound);
    std::vector<Monomial> even;
    for (const auto& m : all)
        if (m.parity() == 0) even.push_back(m);

    // Unknown vector: coefficients of b' over `all`, then of f' over `even`.
    std::vector<std::map<Monomial, FieldElement>> cols;
    for (const auto& m : all) {
        auto img = f * Element::monomial(spec, m);
        cols.emplace_back(img.terms().begin(), img.terms().end());
    }
    for (const auto& m : even) {
        auto img = -(b * Element::monomial(spec, m));
        cols.emplace_back(img.terms().begin(), img.terms().end());
    }
    for (const auto& v : nullspace(spec, cols)) {
        Element bp(spec), fp(spec);
        for (std::size_t i = 0; i < all.size(); ++i) bp.add_term(all[i], v[i]);
        for (std::size_t i = 0; i < even.size(); ++i) fp.add_term(even[i], v[all.size() + i]);
        if (fp.is_zero()) continue;
        if (is_regular_homogeneous(fp)) return std::make_pair(bp, fp);
    }
    return std::nullopt;
}

}  // namespace sjp
