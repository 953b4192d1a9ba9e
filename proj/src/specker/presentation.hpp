#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "specker/boolalg.hpp"
#include "specker/perp.hpp"

namespace specker {

/// Term over generators x_e: literals, generator references, ring
/// operations, lattice operations, and powers by natural numbers.
struct Term {
  enum class Kind { literal, generator, add, sub, mul, neg, meet, join, pow };

  Kind kind;
  std::size_t position = 0;  // offset of the node's first character
  Scalar literal;            // Kind::literal
  std::string name;          // Kind::generator
  unsigned long exponent = 0;  // Kind::pow
  std::vector<std::shared_ptr<const Term>> children;

  /// S-expression rendering, e.g. `(+ (* x_p x_p) 3)`.
  std::string to_sexpr() const;
};

using TermPtr = std::shared_ptr<const Term>;

/**
 * Grammar:
 *   expr   := addend (("+"|"-") addend)*
 *   addend := factor ("*" factor)*
 *   factor := unary ("^" nat)*
 *   unary  := "-" unary | atom
 *   atom   := scalar | ident | "(" expr ")" | "meet(" expr "," expr ")" | "join(" expr "," expr ")"
 * Unary minus binds tighter than "^", which binds tighter than "*".
 * Errors carry the 0-based character offset of the offending token.
 */
TermPtr parse_term(std::string_view text);

using Binding = std::map<std::string, IdElem, std::less<>>;

/// x_<atom> for every atom, x_<generator> for free generators, x_0 and x_1.
Binding default_binding(const AlgebraPtr& alg);

/// Evaluates the term in D[B]^* with x_e ↦ e^⊥; the result is the unique
/// canonical orthogonal normal form.
PerpElem normalize_term(const Term& term, const AlgebraPtr& alg, const Binding& binding);
PerpElem normalize_term(const Term& term, const AlgebraPtr& alg);

}  // namespace specker
