#pragma once

// Dense univariate polynomials over a FieldSpec. Used for the commutative
// pieces k[z] (the halves f+ and f- of A[z]), automorphism data s(z), p(z)
// and the quotient ring L = k[eta_L].

#include <algorithm>
#include <string>
#include <vector>

#include "field.hpp"

namespace sjp {

class ZPoly {
   public:
    ZPoly() = default;
    explicit ZPoly(const FieldSpec& spec) : spec_(spec) {}
    ZPoly(const FieldSpec& spec, std::vector<FieldElement> coeffs) : spec_(spec), c_(std::move(coeffs)) { trim(); }

    static ZPoly constant(const FieldElement& c) { return ZPoly(c.spec(), {c}); }
    static ZPoly monomial(const FieldSpec& spec, unsigned deg, const FieldElement& c) {
        std::vector<FieldElement> v(deg + 1, FieldElement::zero(spec));
        v[deg] = c;
        return ZPoly(spec, std::move(v));
    }
    static ZPoly monomial(const FieldSpec& spec, unsigned deg) { return monomial(spec, deg, FieldElement::one(spec)); }

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElement::zero(spec_); }

    ZPoly& operator+=(const ZPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement::zero(spec_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) { return *this += -o; }

    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return ZPoly(a.spec_);
        std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, FieldElement::zero(a.spec_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return ZPoly(a.spec_, std::move(r));
    }

    ZPoly scaled(const FieldElement& s) const {
        ZPoly r = *this;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }

    /// Multiplication by z^k.
    ZPoly shifted(unsigned k) const {
        if (is_zero()) return *this;
        ZPoly r(spec_);
        r.c_.assign(k, FieldElement::zero(spec_));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    /// f(lambda * z).
    ZPoly rescaled_argument(const FieldElement& lambda) const {
        ZPoly r = *this;
        FieldElement pw = FieldElement::one(spec_);
        for (auto& c : r.c_) {
            c *= pw;
            pw *= lambda;
        }
        r.trim();
        return r;
    }

    /// Euler derivative z * d/dz. Its kernel is k[z^p].
    ZPoly euler() const {
        ZPoly r = *this;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] *= FieldElement(spec_, static_cast<long long>(i));
        r.trim();
        return r;
    }

    friend bool operator==(const ZPoly& a, const ZPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return a.spec_ == b.spec_;
    }

    /// Plain-text form in the given variable, lowest degree first.
    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string();
            bool neg = c_[i].is_negative();
            if (neg) cs.erase(0, 1);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty())
                out += cs;
            else if (cs == "1")
                out += mono;
            else if (cs.find('/') != std::string::npos)
                out += "(" + cs + ")*" + mono;
            else
                out += cs + "*" + mono;
        }
        return out;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldSpec spec_;
    std::vector<FieldElement> c_;
};

}  // namespace sjp
