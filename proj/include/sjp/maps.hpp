#pragma once

/**
 * @file maps.hpp
 * @brief Super-automorphisms, Jordan automorphisms, omega and derivations.
 *
 * A super-automorphism is stored by its data (s, mu):
 *
 *     sigma_{s,mu}(x) = mu x,    sigma_{s,mu}(y) = mu y + s(z) x,
 *
 * which forces sigma(z) = mu^2 z. Composition follows
 * sigma_{s,mu} o sigma_{s',mu'} = sigma_{s'',mu mu'} with
 * s''(z) = mu' s(z) + mu s'(mu^2 z).
 */

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "element.hpp"
#include "jordan.hpp"
#include "ore.hpp"

namespace sjp {

namespace detail {

/// Applies the algebra map x -> xi, z -> zi, y -> yi to u monomialwise.
inline Element apply_on_monomials(const Element& u, const Element& xi, const Element& zi, const Element& yi) {
    const FieldSpec& spec = u.spec();
    std::vector<Element> zpow{Element::one(spec)}, ypow{Element::one(spec)};
    Element out(spec);
    for (const auto& [m, c] : u.terms()) {
        while (zpow.size() <= m.b) zpow.push_back(zpow.back() * zi);
        while (ypow.size() <= m.c) ypow.push_back(ypow.back() * yi);
        Element t = m.a ? xi * zpow[m.b] : zpow[m.b];
        out += (t * ypow[m.c]) * c;
    }
    return out;
}

}  // namespace detail

class SuperAut {
   public:
    /// Throws if mu = 0 or the images fail the defining relations.
    SuperAut(const FieldElement& mu, ZPoly s) : mu_(mu), s_(std::move(s)) {
        if (mu_.is_zero()) throw std::invalid_argument("automorphism scalar mu must be nonzero");
        if (!(s_.spec() == mu_.spec())) throw std::invalid_argument("mixed fields in automorphism data");
        if (!preserves_relations()) throw std::logic_error("images of x and y do not satisfy the defining relations");
    }

    static SuperAut identity(const FieldSpec& spec) { return SuperAut(FieldElement::one(spec), ZPoly(spec)); }

    const FieldElement& mu() const noexcept { return mu_; }
    const ZPoly& s() const noexcept { return s_; }
    const FieldSpec& spec() const noexcept { return mu_.spec(); }

    Element image_x() const { return Element::x(spec()) * mu_; }
    Element image_y() const { return Element::y(spec()) * mu_ + Element::from_zpoly(s_) * Element::x(spec()); }
    Element image_z() const { return Element::z(spec()) * (mu_ * mu_); }

    /// sigma(x)^2 = 0, sigma(y)sigma(z) - sigma(z)sigma(y) - sigma(x)sigma(z) = 0 and
    /// sigma(x)sigma(y) + sigma(y)sigma(x) = mu^2 z.
    bool preserves_relations() const {
        const Element xi = image_x(), yi = image_y();
        const Element zi = xi * yi + yi * xi;
        return (xi * xi).is_zero() && (yi * zi - zi * yi - xi * zi).is_zero() && zi == image_z();
    }

    friend bool operator==(const SuperAut& a, const SuperAut& b) { return a.mu_ == b.mu_ && a.s_ == b.s_; }

   private:
    FieldElement mu_;
    ZPoly s_;
};

inline Element apply_aut(const SuperAut& sigma, const Element& u) {
    return detail::apply_on_monomials(u, sigma.image_x(), sigma.image_z(), sigma.image_y());
}

/// first o second (second is applied first).
inline SuperAut compose_aut(const SuperAut& first, const SuperAut& second) {
    const FieldElement& mu = first.mu();
    const FieldElement& mu2 = second.mu();
    ZPoly s = first.s().scaled(mu2) + second.s().rescaled_argument(mu * mu).scaled(mu);
    return SuperAut(mu * mu2, std::move(s));
}

/// sigma_{s,mu}^{-1} = sigma_{t,1/mu} with t(z) = -mu^-2 s(mu^-2 z).
inline SuperAut inverse_aut(const SuperAut& sigma) {
    const FieldElement inv = sigma.mu().inv();
    const FieldElement inv2 = inv * inv;
    return SuperAut(inv, sigma.s().rescaled_argument(inv2).scaled(-inv2));
}

/// Automorphism of J: z -> alpha z, y^2 -> alpha y^2 + p(z).
class JordanAut {
   public:
    JordanAut(const FieldElement& alpha, ZPoly p) : alpha_(alpha), p_(std::move(p)) {
        if (alpha_.is_zero()) throw std::invalid_argument("Jordan automorphism scalar alpha must be nonzero");
    }

    const FieldElement& alpha() const noexcept { return alpha_; }
    const ZPoly& p() const noexcept { return p_; }
    const FieldSpec& spec() const noexcept { return alpha_.spec(); }

    friend bool operator==(const JordanAut& a, const JordanAut& b) { return a.alpha_ == b.alpha_ && a.p_ == b.p_; }

   private:
    FieldElement alpha_;
    ZPoly p_;
};

inline JordanElement apply_jordan_aut(const JordanAut& t, const JordanElement& f) {
    const FieldSpec& spec = t.spec();
    const Element zi = Element::z(spec) * t.alpha();
    const Element y2i = Element::monomial(spec, {0, 0, 2}) * t.alpha() + Element::from_zpoly(t.p());
    std::vector<Element> zpow{Element::one(spec)}, ypow{Element::one(spec)};
    Element out(spec);
    for (const auto& [m, c] : f.value().terms()) {
        while (zpow.size() <= m.b) zpow.push_back(zpow.back() * zi);
        while (ypow.size() <= m.c / 2) ypow.push_back(ypow.back() * y2i);
        out += (zpow[m.b] * ypow[m.c / 2]) * c;
    }
    return JordanElement(std::move(out));
}

/// tau_{p,alpha} o tau_{p',alpha'} = tau_{p'',alpha alpha'}, p''(z) = alpha' p(z) + p'(alpha z).
inline JordanAut compose_jordan_aut(const JordanAut& first, const JordanAut& second) {
    return JordanAut(first.alpha() * second.alpha(),
                     first.p().scaled(second.alpha()) + second.p().rescaled_argument(first.alpha()));
}

/// The restriction of sigma_{s,mu} to J is tau_{mu z s(z), mu^2}.
inline JordanAut restrict_to_jordan(const SuperAut& sigma) {
    return JordanAut(sigma.mu() * sigma.mu(), sigma.s().shifted(1).scaled(sigma.mu()));
}

/**
 * The involution of B_0 fixing J pointwise with omega(xy) = z - xy. It does
 * not extend to B.
 */
inline Element apply_omega(const Element& u) {
    const auto parts = decompose_super(u);
    if (!parts.r.is_zero() || !parts.s.is_zero()) throw std::invalid_argument("omega is defined on even elements only");
    const FieldSpec& spec = u.spec();
    return parts.p.value() + parts.q.value() * (Element::z(spec) - Element::x(spec) * Element::y(spec));
}

/// A derivation given by its values on the generators; delta(z) is derived.
class GenDerivation {
   public:
    GenDerivation(Element on_x, Element on_y) : dx_(std::move(on_x)), dy_(std::move(on_y)) {
        if (!(dx_.spec() == dy_.spec())) throw std::invalid_argument("mixed fields in derivation data");
        const FieldSpec& spec = dx_.spec();
        const Element x = Element::x(spec), y = Element::y(spec), z = Element::z(spec);
        dz_ = dx_ * y + x * dy_ + dy_ * x + y * dx_;
        const bool ok = (dx_ * x + x * dx_).is_zero() &&
                        (dy_ * z + y * dz_ - dz_ * y - z * dy_ - dx_ * z - x * dz_).is_zero();
        if (!ok) throw std::invalid_argument("derivation data does not annihilate the defining relations");
    }

    /// c(x) = 0, c(y) = x.
    static GenDerivation c(const FieldSpec& spec) { return GenDerivation(Element(spec), Element::x(spec)); }
    /// s(z) c: x -> 0, y -> s(z) x.
    static GenDerivation scaled_c(const ZPoly& s) {
        return GenDerivation(Element(s.spec()), Element::from_zpoly(s) * Element::x(s.spec()));
    }

    const Element& on_x() const noexcept { return dx_; }
    const Element& on_y() const noexcept { return dy_; }
    const Element& on_z() const noexcept { return dz_; }
    const FieldSpec& spec() const noexcept { return dx_.spec(); }

   private:
    Element dx_, dy_, dz_;
};

/// Leibniz extension over the word x^a z^b y^c.
inline Element apply_derivation(const GenDerivation& delta, const Element& u) {
    const FieldSpec& spec = u.spec();
    const Element x = Element::x(spec), y = Element::y(spec), z = Element::z(spec);
    std::vector<Element> zpow{Element::one(spec)}, ypow{Element::one(spec)};
    auto zp = [&](std::size_t k) -> const Element& {
        while (zpow.size() <= k) zpow.push_back(zpow.back() * z);
        return zpow[k];
    };
    auto yp = [&](std::size_t k) -> const Element& {
        while (ypow.size() <= k) ypow.push_back(ypow.back() * y);
        return ypow[k];
    };
    Element out(spec);
    for (const auto& [m, c] : u.terms()) {
        const Element xa = m.a ? x : Element::one(spec);
        Element t(spec);
        if (m.a) t += delta.on_x() * zp(m.b) * yp(m.c);
        for (std::uint32_t i = 0; i < m.b; ++i) t += xa * zp(i) * delta.on_z() * zp(m.b - 1 - i) * yp(m.c);
        const Element head = xa * zp(m.b);
        for (std::uint32_t i = 0; i < m.c; ++i) t += head * yp(i) * delta.on_y() * yp(m.c - 1 - i);
        out += t * c;
    }
    return out;
}

/// Largest y-exponent present; -1 for zero.
inline int y_degree(const Element& u) {
    int d = -1;
    for (const auto& [m, c] : u.terms()) d = std::max(d, static_cast<int>(m.c));
    return d;
}

/**
 * exp(s c)(u) = sum_k (s c)^k(u) / k!. The sum is finite because s c lowers
 * the y-degree. Characteristic 0 only.
 */
inline Element exp_derivation(const ZPoly& s, const Element& u) {
    if (!u.spec().is_rational()) throw std::domain_error("exp-der requires characteristic 0 (rational field)");
    const GenDerivation delta = GenDerivation::scaled_c(s);
    const FieldSpec& spec = u.spec();
    Element out = u, term = u;
    FieldElement fact = FieldElement::one(spec);
    for (long long k = 1; !term.is_zero(); ++k) {
        const int before = y_degree(term);
        term = apply_derivation(delta, term);
        if (!term.is_zero() && y_degree(term) >= before)
            throw std::logic_error("derivation failed to lower the y-degree; exponential would not terminate");
        fact *= FieldElement(spec, k);
        out += term * fact.inv();
    }
    return out;
}

}  // namespace sjp
