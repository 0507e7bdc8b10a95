#pragma once

// Naive word rewriting over the letters x, y, z. Independent of the Ore
// recursion in ore.hpp and kept only as a cross-check of it:
//
//     y x -> z - x y      y z -> z y + x z      z x -> x z      x x -> 0
//
// Irreducible words are exactly x^a z^b y^c with a <= 1.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "element.hpp"

namespace sjp {

inline std::string monomial_word(const Monomial& m) {
    return std::string(m.a, 'x') + std::string(m.b, 'z') + std::string(m.c, 'y');
}

/// Reduces a linear combination of words to PBW normal form.
inline Element rewrite_words(const FieldSpec& spec, std::map<std::string, FieldElement> pending,
                             std::size_t max_steps = 50'000'000) {
    Element out(spec);
    std::size_t steps = 0;
    while (!pending.empty()) {
        if (++steps > max_steps) throw std::runtime_error("word rewriting did not terminate within the step budget");
        auto node = pending.extract(pending.begin());
        const std::string& w = node.key();
        const FieldElement c = node.mapped();
        if (c.is_zero()) continue;

        std::size_t i = 0;
        for (; i + 1 < w.size(); ++i) {
            char l = w[i], r = w[i + 1];
            if ((l == 'y' && (r == 'x' || r == 'z')) || (l == 'z' && r == 'x') || (l == 'x' && r == 'x')) break;
        }
        if (i + 1 >= w.size()) {
            Monomial m;
            for (char ch : w) {
                if (ch == 'x') ++m.a;
                if (ch == 'z') ++m.b;
                if (ch == 'y') ++m.c;
            }
            out.add_term(m, c);
            continue;
        }
        auto push = [&](const std::string& word, const FieldElement& coeff) {
            auto [it, inserted] = pending.try_emplace(word, coeff);
            if (!inserted) it->second += coeff;
        };
        const std::string head = w.substr(0, i), tail = w.substr(i + 2);
        char l = w[i], r = w[i + 1];
        if (l == 'y' && r == 'x') {
            push(head + "z" + tail, c);
            push(head + "xy" + tail, -c);
        } else if (l == 'y' && r == 'z') {
            push(head + "zy" + tail, c);
            push(head + "xz" + tail, c);
        } else if (l == 'z' && r == 'x') {
            push(head + "xz" + tail, c);
        }
        // x x -> 0 drops the word.
    }
    return out;
}

/// Product of two basis monomials computed by word rewriting.
inline Element rewrite_product(const FieldSpec& spec, const Monomial& m1, const Monomial& m2) {
    return rewrite_words(spec, {{monomial_word(m1) + monomial_word(m2), FieldElement::one(spec)}});
}

/// Product of two elements computed by word rewriting, term by term.
inline Element rewrite_mul(const Element& u, const Element& v) {
    std::map<std::string, FieldElement> words;
    for (const auto& [m1, c1] : u.terms())
        for (const auto& [m2, c2] : v.terms()) {
            auto [it, inserted] = words.try_emplace(monomial_word(m1) + monomial_word(m2), c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    return rewrite_words(u.spec(), std::move(words));
}

}  // namespace sjp
