#pragma once

// Seeded generators for property tests and randomized probes.

#include <cstdint>
#include <random>
#include <vector>

#include "element.hpp"
#include "jordan.hpp"
#include "ore.hpp"
#include "zpoly.hpp"

namespace sjp {

class Sampler {
   public:
    Sampler(const FieldSpec& spec, std::uint64_t seed) : spec_(spec), rng_(seed) {}

    const FieldSpec& spec() const noexcept { return spec_; }
    std::mt19937_64& rng() noexcept { return rng_; }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// Small numerator over a small denominator; may be zero.
    FieldElement scalar() {
        const int num = uniform(-6, 6);
        const int den = spec_.is_rational() ? uniform(1, 3) : 1;
        return FieldElement::from_fraction(spec_, num, den);
    }

    FieldElement nonzero_scalar() {
        for (;;) {
            FieldElement c = scalar();
            if (!c.is_zero()) return c;
        }
    }

    Monomial monomial(unsigned max_degree) {
        const auto& basis = basis_cache(max_degree);
        return basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
    }

    /// Up to max_terms terms of degree <= max_degree; may be zero.
    Element element(unsigned max_degree, unsigned max_terms = 4) {
        Element e(spec_);
        const int n = uniform(0, static_cast<int>(max_terms));
        for (int i = 0; i < n; ++i) e.add_term(monomial(max_degree), scalar());
        return e;
    }

    Element nonzero_element(unsigned max_degree, unsigned max_terms = 4) {
        for (;;) {
            Element e = element(max_degree, max_terms);
            if (!e.is_zero()) return e;
        }
    }

    /// Nonzero element with all monomials of the given parity and degree <= max_degree.
    Element parity_homogeneous(unsigned parity, unsigned max_degree, unsigned max_terms = 4) {
        for (;;) {
            Element e(spec_);
            const int n = uniform(1, static_cast<int>(max_terms));
            for (int i = 0; i < n; ++i) {
                Monomial m = monomial(max_degree);
                if (m.parity() == parity) e.add_term(m, nonzero_scalar());
            }
            if (!e.is_zero()) return e;
        }
    }

    /// Nonzero element of degree exactly n.
    Element graded(unsigned n, unsigned max_terms = 3) {
        const auto basis = basis_of_degree(n);
        for (;;) {
            Element e(spec_);
            const int k = uniform(1, static_cast<int>(max_terms));
            for (int i = 0; i < k; ++i)
                e.add_term(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], nonzero_scalar());
            if (!e.is_zero()) return e;
        }
    }

    ZPoly zpoly(unsigned max_degree) {
        std::vector<FieldElement> v;
        const int d = uniform(0, static_cast<int>(max_degree));
        for (int i = 0; i <= d; ++i) v.push_back(scalar());
        return ZPoly(spec_, std::move(v));
    }

    /// Element of J = k[z][y^2] of degree <= max_degree; may be zero.
    JordanElement jordan(unsigned max_degree, unsigned max_terms = 3) {
        Element e(spec_);
        const int n = uniform(0, static_cast<int>(max_terms));
        for (int i = 0; i < n; ++i) {
            const int b = uniform(0, static_cast<int>(max_degree / 2));
            const int j = uniform(0, static_cast<int>((max_degree - 2 * b) / 2));
            e.add_term({0, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(2 * j)}, scalar());
        }
        return JordanElement(std::move(e));
    }

    JordanElement nonzero_jordan(unsigned max_degree, unsigned max_terms = 3) {
        for (;;) {
            JordanElement f = jordan(max_degree, max_terms);
            if (!f.is_zero()) return f;
        }
    }

    /**
     * A homogeneous element that is a zero divisor by construction, drawn
     * from the four families f+ = 0, f+ = -f- z (even) and f- = 0,
     * f- y^2 = -f+ z (odd). h is a random nonzero element of J.
     */
    Element zero_divisor(unsigned parity, unsigned max_degree) {
        const FieldSpec& s = spec_;
        const JordanElement h = nonzero_jordan(max_degree >= 3 ? max_degree - 3 : 0, 2);
        const Element x = Element::x(s), y = Element::y(s), z = Element::z(s);
        if (parity == 0) {
            if (coin()) return h.value() * x * y;
            return h.value() * (x * y - z);
        }
        if (coin()) return h.value() * x;
        const Element y2mz = Element::monomial(s, {0, 0, 2}) - z;
        return -(h.value() * y2mz * x) + h.value() * z * y;
    }

   private:
    const std::vector<Monomial>& basis_cache(unsigned d) {
        if (cache_.size() <= d) cache_.resize(d + 1);
        if (cache_[d].empty()) cache_[d] = basis_up_to(d);
        return cache_[d];
    }

    FieldSpec spec_;
    std::mt19937_64 rng_;
    std::vector<std::vector<Monomial>> cache_;
};

}  // namespace sjp
