#pragma once

// JSON forms (nlohmann::json). Coefficients are strings: "n" or "n/d" over q,
// residues over fp:p.
//
//   element    {field, terms: [{a, b, c, coeff}]}          terms in printing order
//   tensor     {field, rank, terms: [{m1, m2, m3?, coeff}]} mi = [a, b, c]
//   verdict    {is_zero_divisor, reason, witness?}
//   SuperAut   {field, mu, s: [coeffs]}
//   JordanAut  {field, alpha, p: [coeffs]}
//   AbstractJordan {field, terms: [{i, j, coeff}]}

#include <string>
#include <vector>

#include <json.hpp>

#include "element.hpp"
#include "hopf.hpp"
#include "jordan.hpp"
#include "maps.hpp"
#include "structure.hpp"

namespace sjp {

using Json = nlohmann::json;

namespace detail {

inline FieldSpec field_of(const Json& j) { return parse_field(j.at("field").get<std::string>()); }

inline Json monomial_json(const Monomial& m) { return Json::array({m.a, m.b, m.c}); }

inline Monomial monomial_from(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("monomial must be [a, b, c]");
    Monomial m{j[0].get<std::uint32_t>(), j[1].get<std::uint32_t>(), j[2].get<std::uint32_t>()};
    if (m.a > 1) throw std::invalid_argument("monomial exponent a must be 0 or 1");
    return m;
}

inline FieldElement coeff_from(const FieldSpec& spec, const Json& j) { return FieldElement::parse(spec, j.get<std::string>()); }

inline Json zpoly_json(const ZPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline ZPoly zpoly_from(const FieldSpec& spec, const Json& j) {
    std::vector<FieldElement> v;
    for (const auto& c : j) v.push_back(coeff_from(spec, c));
    return ZPoly(spec, std::move(v));
}

}  // namespace detail

inline Json to_json(const Element& u) {
    Json terms = Json::array();
    for (const auto& [m, c] : u.terms()) terms.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"coeff", c.to_string()}});
    return {{"field", u.spec().name()}, {"terms", terms}};
}

inline Element element_from_json(const Json& j) {
    const FieldSpec spec = detail::field_of(j);
    Element u(spec);
    for (const auto& t : j.at("terms")) {
        Monomial m{t.at("a").get<std::uint32_t>(), t.at("b").get<std::uint32_t>(), t.at("c").get<std::uint32_t>()};
        if (m.a > 1) throw std::invalid_argument("monomial exponent a must be 0 or 1");
        u.add_term(m, detail::coeff_from(spec, t.at("coeff")));
    }
    return u;
}

inline Json to_json(const TensorElement& t) {
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms()) {
        Json rec = {{"m1", detail::monomial_json(k[0])}, {"m2", detail::monomial_json(k[1])}};
        if (t.rank() == 3) rec["m3"] = detail::monomial_json(k[2]);
        rec["coeff"] = c.to_string();
        terms.push_back(rec);
    }
    return {{"field", t.spec().name()}, {"rank", t.rank()}, {"terms", terms}};
}

inline TensorElement tensor_from_json(const Json& j) {
    const FieldSpec spec = detail::field_of(j);
    const unsigned rank = j.at("rank").get<unsigned>();
    TensorElement t(spec, rank);
    for (const auto& rec : j.at("terms")) {
        TensorElement::Key k{detail::monomial_from(rec.at("m1")), detail::monomial_from(rec.at("m2")), Monomial{}};
        if (rank == 3) k[2] = detail::monomial_from(rec.at("m3"));
        t.add_term(k, detail::coeff_from(spec, rec.at("coeff")));
    }
    return t;
}

inline Json to_json(const ZeroDivisorVerdict& v) {
    Json j = {{"is_zero_divisor", v.is_zero_divisor}, {"reason", reason_name(v.reason)}};
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

inline ZeroDivisorVerdict verdict_from_json(const Json& j) {
    ZeroDivisorVerdict v;
    v.is_zero_divisor = j.at("is_zero_divisor").get<bool>();
    v.reason = parse_reason(j.at("reason").get<std::string>());
    if (j.contains("witness")) v.witness = element_from_json(j.at("witness"));
    return v;
}

inline Json to_json(const SuperAut& s) {
    return {{"field", s.spec().name()}, {"mu", s.mu().to_string()}, {"s", detail::zpoly_json(s.s())}};
}

inline SuperAut super_aut_from_json(const Json& j) {
    const FieldSpec spec = detail::field_of(j);
    return SuperAut(detail::coeff_from(spec, j.at("mu")), detail::zpoly_from(spec, j.at("s")));
}

inline Json to_json(const JordanAut& t) {
    return {{"field", t.spec().name()}, {"alpha", t.alpha().to_string()}, {"p", detail::zpoly_json(t.p())}};
}

inline JordanAut jordan_aut_from_json(const Json& j) {
    const FieldSpec spec = detail::field_of(j);
    return JordanAut(detail::coeff_from(spec, j.at("alpha")), detail::zpoly_from(spec, j.at("p")));
}

inline Json to_json(const AbstractJordan& u) {
    Json terms = Json::array();
    for (const auto& [k, c] : u.terms()) terms.push_back({{"i", k.first}, {"j", k.second}, {"coeff", c.to_string()}});
    return {{"field", u.spec().name()}, {"terms", terms}};
}

inline AbstractJordan abstract_jordan_from_json(const Json& j) {
    const FieldSpec spec = detail::field_of(j);
    AbstractJordan u(spec);
    for (const auto& t : j.at("terms"))
        u.add_term({t.at("i").get<std::uint32_t>(), t.at("j").get<std::uint32_t>()}, detail::coeff_from(spec, t.at("coeff")));
    return u;
}

}  // namespace sjp
