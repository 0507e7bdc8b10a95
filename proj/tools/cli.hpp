#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it with captured streams.
//
// Exit codes: 0 success, 1 domain error, 2 usage error (bad flags, unknown
// subcommand, malformed expression).

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sjp/sjp.hpp"

namespace sjp::cli {

namespace detail {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string field = "q";
    std::string format = "text";
    unsigned bound = 8;
    std::optional<unsigned> degree;
    std::uint64_t seed = 0;
};

class Session {
   public:
    Session(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
        try {
            spec_ = parse_field(cfg.field);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }

    const FieldSpec& spec() const { return spec_; }
    bool json() const { return cfg_.format == "json"; }
    const Config& cfg() const { return cfg_; }

    Element element(const std::string& text) const { return parse_element(text, spec_); }

    JordanElement jordan(const std::string& text) const {
        Element e = element(text);
        if (!is_jordan(e)) throw std::invalid_argument("'" + text + "' is not in the Jordan subalgebra k[z][y^2]");
        return JordanElement(std::move(e));
    }

    SuperAut aut(const std::string& mu, const std::string& s) const {
        return SuperAut(FieldElement::parse(spec_, mu), parse_zpoly(s, spec_));
    }

    unsigned degree() const {
        if (!cfg_.degree) throw UsageError("--degree is required for this subcommand");
        return *cfg_.degree;
    }

    void print(const Json& j) { out_ << j.dump(2) << "\n"; }
    void line(const std::string& s) { out_ << s << "\n"; }

    void emit(const Element& u) { json() ? print(to_json(u)) : line(to_string(u)); }
    void emit(const TensorElement& t) { json() ? print(to_json(t)) : line(to_string(t)); }
    void emit(const SuperAut& s) { json() ? print(to_json(s)) : line(to_string(s)); }
    void emit_bool(const char* key, bool v) {
        if (json())
            print({{key, v}});
        else
            line(v ? "true" : "false");
    }
    void emit_basis(const std::vector<Element>& basis, unsigned n) {
        if (json()) {
            Json arr = Json::array();
            for (const auto& b : basis) arr.push_back(to_json(b));
            print({{"field", spec_.name()}, {"degree", n}, {"dimension", basis.size()}, {"basis", arr}});
            return;
        }
        line("dim " + std::to_string(basis.size()));
        for (const auto& b : basis) line(to_string(b));
    }

   private:
    Config cfg_;
    std::ostream& out_;
    FieldSpec spec_;
};

inline Json monomial_json(const Monomial& m) { return {{"a", m.a}, {"b", m.b}, {"c", m.c}}; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Session;
    CLI::App app{"Exact arithmetic in the super Jordan plane", "sjp"};
    app.require_subcommand(1);
    app.fallthrough();

    detail::Config cfg;
    app.add_option("--field", cfg.field, "Coefficient field: q or fp:<odd prime>")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--bound", cfg.bound, "Degree bound for searches and checks")->capture_default_str();
    app.add_option("--degree", cfg.degree, "Degree for graded solvers");
    app.add_option("--seed", cfg.seed, "Seed for randomized probes")->capture_default_str();

    std::function<void(Session&)> action;
    std::vector<std::string> exprs;
    std::string mu = "1", s = "0", mu2 = "1", s2 = "0";
    bool inverse = false;
    unsigned samples = 1;

    auto sub = [&](const char* name, const char* desc, std::size_t nexpr, std::function<void(Session&)> f) {
        CLI::App* c = app.add_subcommand(name, desc);
        if (nexpr > 0) c->add_option("expr", exprs, "Expressions")->expected(static_cast<int>(nexpr))->required();
        c->callback([&action, f] { action = f; });
        return c;
    };

    sub("normalize", "Print the normal form", 1, [&](Session& S) { S.emit(S.element(exprs[0])); });

    app.add_subcommand("mul", "Multiply two or more expressions left to right")
        ->callback([&] {
            action = [&](Session& S) {
                Element acc = S.element(exprs[0]);
                for (std::size_t i = 1; i < exprs.size(); ++i) acc = acc * S.element(exprs[i]);
                S.emit(acc);
            };
        })
        ->add_option("expr", exprs, "Factors")
        ->expected(2, 64)
        ->required();

    sub("commutator", "uv - vu", 2, [&](Session& S) { S.emit(commutator(S.element(exprs[0]), S.element(exprs[1]))); });

    sub("decompose", "Components p, q, r, s in J with b = p + q*x*y + r*x + s*y", 1, [&](Session& S) {
        const auto d = decompose_super(S.element(exprs[0]));
        if (S.json()) {
            S.print({{"p", to_json(d.p.value())}, {"q", to_json(d.q.value())}, {"r", to_json(d.r.value())}, {"s", to_json(d.s.value())}});
            return;
        }
        S.line("p = " + to_string(d.p));
        S.line("q = " + to_string(d.q));
        S.line("r = " + to_string(d.r));
        S.line("s = " + to_string(d.s));
    });

    sub("eta", "The automorphism eta of J (y^2 -> y^2 - z)", 1, [&](Session& S) {
        const JordanElement f = S.jordan(exprs[0]);
        S.emit((inverse ? eta_inv(f) : eta(f)).value());
    })->add_flag("--inverse", inverse, "Apply the inverse instead");

    sub("nabla", "The operator nabla on J", 1, [&](Session& S) { S.emit(nabla(S.jordan(exprs[0])).value()); });

    sub("center", "Basis of the degree-n center", 0, [&](Session& S) { S.emit_basis(center_basis(S.degree(), S.spec()), S.degree()); });
    sub("supercenter", "Basis of the degree-n supercenter", 0,
        [&](Session& S) { S.emit_basis(supercenter_basis(S.degree(), S.spec()), S.degree()); });

    sub("zerodiv", "Zero-divisor verdict with witness", 1, [&](Session& S) {
        const auto v = classify_zero_divisor(S.element(exprs[0]));
        if (S.json()) {
            S.print(to_json(v));
            return;
        }
        if (!v.is_zero_divisor)
            S.line("regular");
        else
            S.line("zero divisor (" + reason_name(v.reason) + "), witness " + to_string(*v.witness));
    });

    sub("regular", "Is a homogeneous element regular", 1,
        [&](Session& S) { S.emit_bool("regular", is_regular_homogeneous(S.element(exprs[0]))); });

    CLI::App* sp = app.add_subcommand("superprime", "Monomial m with f*m*g != 0; random pairs when no expressions are given");
    sp->add_option("expr", exprs, "f g")->expected(0, 2);
    sp->add_option("--samples", samples, "Number of random pairs")->capture_default_str();
    sp->callback([&] {
        action = [&](Session& S) {
            std::vector<std::pair<Element, Element>> pairs;
            if (exprs.size() == 2) {
                pairs.emplace_back(S.element(exprs[0]), S.element(exprs[1]));
            } else if (exprs.empty()) {
                Sampler r(S.spec(), S.cfg().seed);
                for (unsigned i = 0; i < samples; ++i) {
                    Element f = r.parity_homogeneous(static_cast<unsigned>(r.uniform(0, 1)), 4);
                    Element g = r.parity_homogeneous(static_cast<unsigned>(r.uniform(0, 1)), 4);
                    pairs.emplace_back(std::move(f), std::move(g));
                }
            } else {
                throw detail::UsageError("superprime takes two expressions or none");
            }
            Json arr = Json::array();
            for (const auto& [f, g] : pairs) {
                const auto m = superprime_witness(f, g, S.cfg().bound);
                if (!m) throw std::runtime_error("no witness m of degree <= " + std::to_string(S.cfg().bound) + " with f*m*g != 0");
                if (S.json())
                    arr.push_back({{"f", to_json(f)}, {"g", to_json(g)}, {"witness", detail::monomial_json(*m)}});
                else if (exprs.empty())
                    S.line("f = " + to_string(f) + " ; g = " + to_string(g) + " ; m = " + to_string(*m));
                else
                    S.line(to_string(*m));
            }
            if (S.json()) S.print(exprs.empty() ? arr : arr[0]);
        };
    });

    auto aut_opts = [&](CLI::App* c) {
        c->add_option("--mu", mu, "Scalar mu")->capture_default_str();
        c->add_option("--s", s, "Polynomial s(z)")->capture_default_str();
        return c;
    };

    aut_opts(sub("apply-aut", "Apply sigma_{s,mu}", 1, [&](Session& S) { S.emit(apply_aut(S.aut(mu, s), S.element(exprs[0]))); }));

    CLI::App* ca = aut_opts(sub("compose-aut", "sigma_{s,mu} o sigma_{s2,mu2} (or the inverse of sigma_{s,mu})", 0, [&](Session& S) {
        const SuperAut a = S.aut(mu, s);
        S.emit(inverse ? inverse_aut(a) : compose_aut(a, S.aut(mu2, s2)));
    }));
    ca->add_option("--mu2", mu2, "Scalar of the automorphism applied first")->capture_default_str();
    ca->add_option("--s2", s2, "Polynomial of the automorphism applied first")->capture_default_str();
    ca->add_flag("--inverse", inverse, "Print the inverse of sigma_{s,mu}");

    sub("exp-der", "exp(s c) applied to an element", 1, [&](Session& S) { S.emit(exp_derivation(parse_zpoly(s, S.spec()), S.element(exprs[0]))); })
        ->add_option("--s", s, "Polynomial s(z)")
        ->capture_default_str();

    sub("braiding", "c(u (x) v) for homogeneous u", 2, [&](Session& S) { S.emit(braiding(S.element(exprs[0]), S.element(exprs[1]))); });
    sub("coproduct", "Braided coproduct", 1, [&](Session& S) { S.emit(coproduct(S.element(exprs[0]))); });

    sub("counit", "Counit", 1, [&](Session& S) {
        const FieldElement c = counit(S.element(exprs[0]));
        S.json() ? S.print({{"field", S.spec().name()}, {"value", c.to_string()}}) : S.line(c.to_string());
    });

    sub("primitives", "Basis of the degree-n primitive elements", 0,
        [&](Session& S) { S.emit_basis(primitive_space(S.degree(), S.spec()), S.degree()); });

    sub("nichols", "Representative in the Nichols quotient (fp only)", 1, [&](Session& S) { S.emit(nichols_reduce(S.element(exprs[0]))); });

    sub("project-l", "Projection onto L = k[eta_L]", 1, [&](Session& S) {
        const LElement l = project_L(S.element(exprs[0]));
        if (S.json()) {
            Json arr = Json::array();
            for (const auto& c : l.poly.coeffs()) arr.push_back(c.to_string());
            S.print({{"field", S.spec().name()}, {"eta_L", arr}});
        } else {
            S.line(l.to_string());
        }
    });

    aut_opts(sub("hopf-aut", "Does sigma_{s,mu} commute with the coproduct up to --bound", 0,
                 [&](Session& S) { S.emit_bool("hopf_automorphism", is_hopf_automorphism(S.aut(mu, s), S.cfg().bound)); }));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Session S(cfg, out);
        action(S);
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sjp::cli
