#pragma once

/**
 * @file field.hpp
 * @brief Exact coefficient fields: the rationals and prime fields F_p, p odd.
 *
 * Every scalar in the library is a FieldElement tagged with its FieldSpec.
 * Rationals are arbitrary precision and kept in lowest terms; residues are
 * kept in [0, p). Mixing elements of different fields throws.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sjp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

/// Coefficient field descriptor. Construct through make_field or the named helpers.
class FieldSpec {
   public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == FieldKind::Rationals; }
    bool is_prime() const noexcept { return kind_ == FieldKind::PrimeField; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }

    /// "q" or "fp:<p>", the same syntax the CLI accepts.
    std::string name() const { return is_rational() ? std::string("q") : "fp:" + std::to_string(p_); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

   private:
    FieldKind kind_ = FieldKind::Rationals;
    std::uint64_t p_ = 0;
};

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p == 2) throw std::invalid_argument("characteristic 2 excluded");
    if (!detail::is_prime_u64(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p > (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus exceeds the supported word size");
    FieldSpec f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

inline FieldSpec make_field(FieldKind kind, std::optional<std::uint64_t> p = std::nullopt) {
    if (kind == FieldKind::Rationals) return FieldSpec::rationals();
    if (!p) throw std::invalid_argument("prime field requires a modulus");
    return FieldSpec::prime(*p);
}

/// Parses "q" or "fp:<p>".
inline FieldSpec parse_field(std::string_view text) {
    if (text == "q" || text == "Q") return FieldSpec::rationals();
    if (text.substr(0, 3) == "fp:") {
        auto digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 19)
            throw std::invalid_argument("malformed field '" + std::string(text) + "'");
        return FieldSpec::prime(std::stoull(std::string(digits)));
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or fp:<prime>)");
}

class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(const FieldSpec& spec, long long v) : spec_(spec) {
        if (spec_.is_rational()) {
            q_ = v;
        } else {
            auto p = static_cast<long long>(spec_.characteristic());
            long long r = v % p;
            if (r < 0) r += p;
            r_ = static_cast<std::uint64_t>(r);
        }
    }

    static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec, 0); }
    static FieldElement one(const FieldSpec& spec) { return FieldElement(spec, 1); }

    /// Maps num/den into the field; throws if den vanishes there.
    static FieldElement from_fraction(const FieldSpec& spec, const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("division by zero");
        FieldElement out(spec, 0);
        if (spec.is_rational()) {
            out.q_ = Rational(num, den);
            return out;
        }
        Integer p = spec.characteristic();
        Integer n = num % p;
        if (n < 0) n += p;
        Integer d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(spec.characteristic()));
        out.r_ = static_cast<std::uint64_t>(n);
        return out * FieldElement::from_residue(spec, static_cast<std::uint64_t>(d)).inv();
    }

    /// Serialized coefficient form: "n" or "n/d" (optionally signed).
    static FieldElement parse(const FieldSpec& spec, std::string_view text) {
        auto bad = [&] { return std::invalid_argument("malformed coefficient '" + std::string(text) + "'"); };
        auto slash = text.find('/');
        auto num_s = text.substr(0, slash);
        auto den_s = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        auto check = [&](std::string_view s, bool allow_sign) {
            if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
            if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) throw bad();
        };
        check(num_s, true);
        check(den_s, false);
        std::string ns(num_s);
        if (ns[0] == '+') ns.erase(0, 1);
        return from_fraction(spec, Integer(ns), Integer(std::string(den_s)));
    }

    const FieldSpec& spec() const noexcept { return spec_; }

    bool is_zero() const { return spec_.is_rational() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return spec_.is_rational() ? q_ == 1 : r_ == 1; }

    /// Residue in [0, p); only meaningful over a prime field.
    std::uint64_t residue() const noexcept { return r_; }
    const Rational& rational() const noexcept { return q_; }

    /// True when the printed form starts with '-'. Residues are never negative.
    bool is_negative() const { return spec_.is_rational() && q_ < 0; }

    std::string to_string() const {
        if (spec_.is_prime()) return std::to_string(r_);
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(q_) == 1) return numerator(q_).str();
        return numerator(q_).str() + "/" + denominator(q_).str();
    }

    FieldElement operator-() const {
        FieldElement out = *this;
        if (spec_.is_rational())
            out.q_ = -q_;
        else
            out.r_ = r_ == 0 ? 0 : spec_.characteristic() - r_;
        return out;
    }

    FieldElement& operator+=(const FieldElement& o) {
        require_same(o);
        if (spec_.is_rational()) {
            q_ += o.q_;
        } else {
            auto p = spec_.characteristic();
            r_ = (r_ >= p - o.r_) ? r_ - (p - o.r_) : r_ + o.r_;
        }
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) { return *this += -o; }
    FieldElement& operator*=(const FieldElement& o) {
        require_same(o);
        if (spec_.is_rational())
            q_ *= o.q_;
        else
            r_ = detail::mul_mod(r_, o.r_, spec_.characteristic());
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) { return *this *= o.inv(); }

    FieldElement inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        FieldElement out = *this;
        if (spec_.is_rational())
            out.q_ = 1 / q_;
        else
            out.r_ = detail::pow_mod(r_, spec_.characteristic() - 2, spec_.characteristic());
        return out;
    }

    FieldElement pow(unsigned e) const {
        FieldElement r = one(spec_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.spec_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

   private:
    static FieldElement from_residue(const FieldSpec& spec, std::uint64_t r) {
        FieldElement out(spec, 0);
        out.r_ = r % spec.characteristic();
        return out;
    }

    void require_same(const FieldElement& o) const {
        if (!(spec_ == o.spec_)) throw std::invalid_argument("mixed fields: " + spec_.name() + " and " + o.spec_.name());
    }

    FieldSpec spec_;
    Rational q_;
    std::uint64_t r_ = 0;
};

}  // namespace sjp
