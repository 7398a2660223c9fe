// Recursive-descent parser for the expression DSL:
//   Expr   := Term (('+'|'-') Term)*
//   Term   := Factor (('*'|'/') Factor)*
//   Factor := Atom ['^' '(' Rational ')' | '^' ['-'] Integer]
//   Atom   := 'x' | 't' | generator symbol | integer | '(' Expr ')'
// Rational exponents are allowed only on t and only in Puiseux scenes.
#pragma once

#include "skolemlab/ratfunc.hpp"
#include "skolemlab/scene.hpp"

namespace skolemlab::parser {

using ratfunc::RatFunc;
using valued_field::ValuedElement;

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(size_t pos, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
};
struct RationalExponentNotAllowed : std::runtime_error {
  RationalExponentNotAllowed()
      : std::runtime_error(
            "rational exponents only apply to t in Puiseux scenes") {}
};
struct UnknownSymbol : std::runtime_error {
  explicit UnknownSymbol(const std::string& sym)
      : std::runtime_error("unknown symbol: " + sym) {}
};

// Parses to a normalized rational function in x over the scene's field.
RatFunc parse_expr(const std::string& src, const scene::Scene& sc);

// Parses an x-free expression to a field element; throws if x occurs.
ValuedElement parse_element(const std::string& src, const scene::Scene& sc);

}  // namespace skolemlab::parser
