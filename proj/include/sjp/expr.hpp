#pragma once

/**
 * @file expr.hpp
 * @brief Expression parser and canonical printer.
 *
 * Grammar:
 *
 *     expr   := term (("+" | "-") term)*
 *     term   := factor ("*" factor)*
 *     factor := "-" factor | atom ("^" nat)?
 *     atom   := scalar | symbol | "(" expr ")"
 *
 * scalar is "n" or "n/d". Symbols are x, y, z for the target B and X, Y for
 * the abstract Jordan plane. Juxtaposition is not multiplication: "xy" is an
 * unknown symbol.
 */

#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "hopf.hpp"
#include "jordan.hpp"
#include "ore.hpp"

namespace sjp {

class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
};

enum class Target { B, Jordan };

/// Largest accepted exponent.
inline constexpr std::uint64_t max_exponent = 65535;

struct ExprNode {
    enum class Kind { Sum, Product, Power, Negate, Scalar, Symbol };

    Kind kind;
    std::size_t pos = 0;
    std::vector<std::unique_ptr<ExprNode>> children;
    std::vector<bool> negated;  // Sum only: sign of each summand
    std::string text;           // scalar literal or symbol name
    std::uint64_t exponent = 0;
};

using ExprPtr = std::unique_ptr<ExprNode>;

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Op, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            } else if (j < s.size() && s[j] == '/') {
                throw ParseError(j, "expected a denominator after '/'");
            }
            out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("+-*^()").find(ch) != std::string_view::npos) {
            out.push_back({Token::Kind::Op, std::string(1, ch), i});
            ++i;
        } else {
            throw ParseError(i, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ExprPtr parse_all() {
        auto e = expr();
        if (peek().kind != Token::Kind::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "' (multiplication needs an explicit '*')");
        return e;
    }

   private:
    const Token& peek() const { return toks_[i_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }

    static ExprPtr node(ExprNode::Kind k, std::size_t pos) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = pos;
        return n;
    }

    ExprPtr expr() {
        auto sum = node(ExprNode::Kind::Sum, peek().pos);
        sum->children.push_back(term());
        sum->negated.push_back(false);
        while (is_op("+") || is_op("-")) {
            const bool neg = peek().text == "-";
            ++i_;
            sum->children.push_back(term());
            sum->negated.push_back(neg);
        }
        if (sum->children.size() == 1) return std::move(sum->children.front());
        return sum;
    }

    ExprPtr term() {
        auto prod = node(ExprNode::Kind::Product, peek().pos);
        prod->children.push_back(factor());
        while (is_op("*")) {
            ++i_;
            prod->children.push_back(factor());
        }
        if (prod->children.size() == 1) return std::move(prod->children.front());
        return prod;
    }

    ExprPtr factor() {
        if (is_op("-")) {
            auto n = node(ExprNode::Kind::Negate, peek().pos);
            ++i_;
            n->children.push_back(factor());
            return n;
        }
        auto base = atom();
        if (!is_op("^")) return base;
        auto pw = node(ExprNode::Kind::Power, peek().pos);
        ++i_;
        if (peek().kind != Token::Kind::Number || peek().text.find('/') != std::string::npos)
            throw ParseError(peek().pos, "exponent must be a non-negative integer");
        std::uint64_t e = 0;
        for (char d : peek().text) {
            e = e * 10 + static_cast<std::uint64_t>(d - '0');
            if (e > max_exponent) throw ParseError(peek().pos, "exponent overflow (limit " + std::to_string(max_exponent) + ")");
        }
        ++i_;
        pw->exponent = e;
        pw->children.push_back(std::move(base));
        if (is_op("^")) throw ParseError(peek().pos, "chained '^' is ambiguous; use parentheses");
        return pw;
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                auto n = node(ExprNode::Kind::Scalar, t.pos);
                n->text = t.text;
                ++i_;
                return n;
            }
            case Token::Kind::Ident: {
                auto n = node(ExprNode::Kind::Symbol, t.pos);
                n->text = t.text;
                ++i_;
                return n;
            }
            case Token::Kind::Op:
                if (t.text == "(") {
                    ++i_;
                    auto e = expr();
                    if (!is_op(")")) throw ParseError(peek().pos, "expected ')'");
                    ++i_;
                    return e;
                }
                throw ParseError(t.pos, "unexpected '" + t.text + "'");
            case Token::Kind::End: break;
        }
        throw ParseError(t.pos, "unexpected end of input");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

template <class V>
V pow_generic(const V& base, std::uint64_t e, V one) {
    V acc = std::move(one), b = base;
    while (e) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return acc;
}

inline Element symbol_b(const FieldSpec& spec, const ExprNode& n) {
    if (n.text == "x") return Element::x(spec);
    if (n.text == "y") return Element::y(spec);
    if (n.text == "z") return Element::z(spec);
    if (n.text == "X" || n.text == "Y") throw ParseError(n.pos, "symbol '" + n.text + "' is only valid for the Jordan target");
    throw ParseError(n.pos, "unknown symbol '" + n.text + "'");
}

inline AbstractJordan symbol_jordan(const FieldSpec& spec, const ExprNode& n) {
    if (n.text == "X") return AbstractJordan::X(spec);
    if (n.text == "Y") return AbstractJordan::Y(spec);
    if (n.text == "x" || n.text == "y" || n.text == "z") throw ParseError(n.pos, "symbol '" + n.text + "' is not valid for the Jordan target (use X, Y)");
    throw ParseError(n.pos, "unknown symbol '" + n.text + "'");
}

inline FieldElement scalar_of(const FieldSpec& spec, const ExprNode& n) {
    try {
        return FieldElement::parse(spec, n.text);
    } catch (const std::domain_error&) {
        throw ParseError(n.pos, "scalar '" + n.text + "' has a zero denominator in " + spec.name());
    } catch (const std::invalid_argument&) {
        throw ParseError(n.pos, "malformed scalar '" + n.text + "'");
    }
}

template <class V, class Sym, class Scal>
V evaluate(const ExprNode& n, const FieldSpec& spec, Sym sym, Scal scal) {
    switch (n.kind) {
        case ExprNode::Kind::Scalar: return scal(scalar_of(spec, n));
        case ExprNode::Kind::Symbol: return sym(n);
        case ExprNode::Kind::Negate: return -evaluate<V>(*n.children[0], spec, sym, scal);
        case ExprNode::Kind::Power:
            return pow_generic(evaluate<V>(*n.children[0], spec, sym, scal), n.exponent, scal(FieldElement::one(spec)));
        case ExprNode::Kind::Product: {
            V acc = evaluate<V>(*n.children[0], spec, sym, scal);
            for (std::size_t i = 1; i < n.children.size(); ++i) acc = acc * evaluate<V>(*n.children[i], spec, sym, scal);
            return acc;
        }
        case ExprNode::Kind::Sum: {
            V acc = scal(FieldElement::zero(spec));
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                V t = evaluate<V>(*n.children[i], spec, sym, scal);
                acc = n.negated[i] ? acc - t : acc + t;
            }
            return acc;
        }
    }
    throw std::logic_error("bad expression node");
}

}  // namespace detail

/// Syntax tree of text; throws ParseError.
inline ExprPtr parse_ast(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Parses an element of B (symbols x, y, z).
inline Element parse_element(std::string_view text, const FieldSpec& spec) {
    auto ast = parse_ast(text);
    return detail::evaluate<Element>(
        *ast, spec, [&](const ExprNode& n) { return detail::symbol_b(spec, n); },
        [](const FieldElement& c) { return Element::scalar(c); });
}

/// Parses an element of the abstract Jordan plane (symbols X, Y).
inline AbstractJordan parse_jordan(std::string_view text, const FieldSpec& spec) {
    auto ast = parse_ast(text);
    return detail::evaluate<AbstractJordan>(
        *ast, spec, [&](const ExprNode& n) { return detail::symbol_jordan(spec, n); },
        [](const FieldElement& c) { return AbstractJordan::scalar(c); });
}

/// Parses a polynomial in z, as used for automorphism and derivation data.
inline ZPoly parse_zpoly(std::string_view text, const FieldSpec& spec) {
    const Element e = parse_element(text, spec);
    if (!in_kz(e)) throw std::invalid_argument("'" + std::string(text) + "' is not a polynomial in z");
    return to_zpoly(e);
}

namespace detail {

inline void append_power(std::string& s, const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
}

/// "sign" and body for a coefficient times a monomial word ("" for the unit word).
inline void append_term(std::string& out, const FieldElement& c, const std::string& word) {
    const bool neg = c.is_negative();
    std::string cs = (neg ? -c : c).to_string();
    if (out.empty())
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (word.empty()) {
        out += cs;
    } else if (cs == "1") {
        out += word;
    } else {
        out += cs.find('/') != std::string::npos ? "(" + cs + ")" : cs;
        out += '*';
        out += word;
    }
}

}  // namespace detail

/// x^a z^b y^c as "x*z^2*y^3"; "1" for the unit.
inline std::string to_string(const Monomial& m) {
    std::string s;
    detail::append_power(s, "x", m.a);
    detail::append_power(s, "z", m.b);
    detail::append_power(s, "y", m.c);
    return s.empty() ? "1" : s;
}

/// Canonical form: graded-lex term order, coefficient first, explicit '*'.
inline std::string to_string(const Element& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : u.terms()) detail::append_term(out, c, m.is_one() ? "" : to_string(m));
    return out;
}

inline std::string to_string(const JordanElement& f) { return to_string(f.value()); }

inline std::string to_string(const AbstractJordan& u) {
    if (u.terms().empty()) return "0";
    std::string out;
    for (const auto& [k, c] : u.terms()) {
        std::string w;
        detail::append_power(w, "X", k.first);
        detail::append_power(w, "Y", k.second);
        detail::append_term(out, c, w);
    }
    return out;
}

/**
 * Tensor printing with "(x)" between factors. Terms u (x) 1 come first, then
 * 1 (x) u, then the rest in monomial order.
 */
inline std::string to_string(const TensorElement& t) {
    if (t.is_zero()) return "0";
    using Entry = std::pair<const TensorElement::Key, FieldElement>;
    std::vector<const Entry*> order;
    auto pass = [&](auto pred) {
        for (const auto& e : t.terms())
            if (pred(e.first)) order.push_back(&e);
    };
    if (t.rank() == 2) {
        pass([](const TensorElement::Key& k) { return k[1].is_one(); });
        pass([](const TensorElement::Key& k) { return k[0].is_one() && !k[1].is_one(); });
        pass([](const TensorElement::Key& k) { return !k[0].is_one() && !k[1].is_one(); });
    } else {
        pass([](const TensorElement::Key&) { return true; });
    }
    std::string out;
    for (const Entry* e : order) {
        std::string w = to_string(e->first[0]) + "(x)" + to_string(e->first[1]);
        if (t.rank() == 3) w += "(x)" + to_string(e->first[2]);
        const bool neg = e->second.is_negative();
        const std::string cs = (neg ? -e->second : e->second).to_string();
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (cs != "1") out += (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += w;
    }
    return out;
}

inline std::string to_string(const SuperAut& s) { return "sigma(mu = " + s.mu().to_string() + ", s = " + s.s().to_string("z") + ")"; }

inline std::string to_string(const JordanAut& t) { return "tau(alpha = " + t.alpha().to_string() + ", p = " + t.p().to_string("z") + ")"; }

}  // namespace sjp
