#include "skolemlab/parser.hpp"

#include <cctype>

namespace skolemlab::parser {

using ratfunc::rf_constant;
using ratfunc::rf_x;
using valued_field::kv_make;
using valued_field::kv_one;
using valued_field::kv_uniformizer;

namespace {

struct Parser {
  const std::string& src;
  const scene::Scene& sc;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) throw SyntaxError(pos, "expected an integer");
    return Int(src.substr(start, pos - start));
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (eat('/')) {
        RatFunc d = factor();
        if (d.is_zero()) throw SyntaxError(pos, "division by zero");
        acc = acc / d;
      } else
        return acc;
    }
  }

  RatFunc pow_int(const RatFunc& base, const Int& e) {
    if (e < 0) {
      if (base.is_zero()) throw SyntaxError(pos, "zero to a negative power");
      return pow_int(rf_constant(sc.K, kv_one(sc.K)) / base, -e);
    }
    RatFunc acc = rf_constant(sc.K, kv_one(sc.K));
    RatFunc b = base;
    Int n = e;
    while (n > 0) {
      if (n % 2 == 1) acc = acc * b;
      b = b * b;
      n /= 2;
    }
    return acc;
  }

  RatFunc factor() {
    bool neg = false;
    while (peek() == '-') {
      eat('-');
      neg = !neg;
    }
    auto [base, is_bare_t] = atom();
    RatFunc result = base;
    if (eat('^')) {
      if (eat('(')) {
        // rational (or parenthesized integer) exponent
        bool eneg = eat('-');
        Int num = integer();
        Int den = 1;
        if (eat('/')) den = integer();
        if (!eat(')')) throw SyntaxError(pos, "expected ')'");
        if (eneg) num = -num;
        Rat e(num, den);
        if (denominator(e) == 1) {
          result = pow_int(base, numerator(e));
        } else {
          if (!is_bare_t || !sc.K->puiseux())
            throw RationalExponentNotAllowed();
          if (!sc.K->group.contains(e)) throw RationalExponentNotAllowed();
          result = rf_constant(sc.K, kv_make(sc.K, e, sc.K->base->one()));
        }
      } else {
        bool eneg = eat('-');
        Int e = integer();
        result = pow_int(base, eneg ? Int(-e) : e);
      }
    }
    if (neg) result = -result;
    return result;
  }

  // returns (value, was the bare symbol t)
  std::pair<RatFunc, bool> atom() {
    skip_ws();
    if (pos >= src.size()) throw SyntaxError(pos, "unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      RatFunc inner = expr();
      if (!eat(')')) throw SyntaxError(pos, "expected ')'");
      return {inner, false};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = integer();
      return {rf_constant(sc.K,
                          valued_field::kv_from_residue(
                              sc.K, sc.K->base->from_base(Rat(n)))),
              false};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() &&
             std::isalnum(static_cast<unsigned char>(src[pos])))
        ++pos;
      std::string sym = src.substr(start, pos - start);
      if (sym == "x") return {rf_x(sc.K), false};
      if (sym == sc.K->uniformizer)
        return {rf_constant(sc.K, kv_uniformizer(sc.K)), true};
      if (sc.K->base->degree() >= 2 &&
          sym == sc.K->base->generator_symbol())
        return {rf_constant(sc.K, valued_field::kv_from_residue(
                                      sc.K, sc.K->base->generator())),
                false};
      throw UnknownSymbol(sym);
    }
    throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RatFunc parse_expr(const std::string& src, const scene::Scene& sc) {
  Parser p{src, sc};
  RatFunc r = p.expr();
  p.skip_ws();
  if (p.pos != src.size())
    throw SyntaxError(p.pos, "trailing input after expression");
  return r;
}

ValuedElement parse_element(const std::string& src, const scene::Scene& sc) {
  RatFunc r = parse_expr(src, sc);
  if (poly::degree(r.num()) > 0 || poly::degree(r.den()) > 0)
    throw SyntaxError(0, "expected an x-free expression");
  if (r.is_zero()) return valued_field::kv_zero(sc.K);
  return r.num()[0] / r.den()[0];
}

}  // namespace skolemlab::parser
