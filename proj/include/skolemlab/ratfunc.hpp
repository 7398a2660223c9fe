// Univariate rational functions in x over a valued field K: normalization
// through the Euclidean algorithm, exact evaluation with POLE as a
// first-class result, valuation at a point, and composition.
#pragma once

#include <stdexcept>
#include <variant>

#include "skolemlab/valued_field.hpp"

namespace skolemlab::ratfunc {

using valued_field::KPtr;
using valued_field::Val;
using valued_field::ValuedElement;

using Poly = poly::Coeffs<ValuedElement>;

struct RatFuncError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDenominator : RatFuncError {
  ZeroDenominator() : RatFuncError("zero denominator") {}
};
struct DegreeOverflow : RatFuncError {
  DegreeOverflow() : RatFuncError("intermediate degree exceeds the cap") {}
};
struct UndefinedComposite : RatFuncError {
  UndefinedComposite() : RatFuncError("outer pole at a constant inner") {}
};

inline constexpr long kDefaultDegreeCap = 64;

// num/den coprime over K[x], den monic.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(KPtr k, Poly num, Poly den, long degree_cap = kDefaultDegreeCap);

  const KPtr& field() const { return k_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return poly::degree(den_) == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  std::string to_string() const;

 private:
  KPtr k_;
  Poly num_, den_;
};

RatFunc rf_normalize(const KPtr& k, Poly num, Poly den,
                     long degree_cap = kDefaultDegreeCap);
RatFunc rf_constant(const KPtr& k, const ValuedElement& c);
RatFunc rf_x(const KPtr& k);

// Evaluation result: an exact value, or POLE (den vanished, num did not).
struct Pole {};
using EvalResult = std::variant<ValuedElement, Pole>;
inline bool is_pole(const EvalResult& r) {
  return std::holds_alternative<Pole>(r);
}
inline const ValuedElement& value_of(const EvalResult& r) {
  return std::get<ValuedElement>(r);
}

EvalResult rf_eval(const RatFunc& phi, const ValuedElement& a);

// Valuation of phi(a): a group element, INFINITY for value 0, POLE
// propagated.
struct ValAtPole {};
using ValAt = std::variant<Rat, std::monostate, ValAtPole>;  // value/inf/pole
ValAt rf_val_at(const RatFunc& phi, const ValuedElement& a);
inline bool val_is_pole(const ValAt& v) {
  return std::holds_alternative<ValAtPole>(v);
}
inline bool val_is_infinite(const ValAt& v) {
  return std::holds_alternative<std::monostate>(v);
}
inline const Rat& val_value(const ValAt& v) { return std::get<Rat>(v); }

RatFunc rf_compose(const RatFunc& outer, const RatFunc& inner,
                   long degree_cap = kDefaultDegreeCap);

}  // namespace skolemlab::ratfunc
