// Minimum-valuation envelopes of polynomials and rational functions, local
// polynomials, exactness certificates, and the forced-profile contradiction
// detector.
#pragma once

#include <variant>

#include "skolemlab/ratfunc.hpp"
#include "skolemlab/valgroup.hpp"

namespace skolemlab::newton {

using ratfunc::Poly;
using ratfunc::RatFunc;
using residue_field::FieldElement;
using valgroup::PLFunction;
using valued_field::KPtr;
using valued_field::ValuedElement;

struct NewtonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroPolynomial : NewtonError {
  ZeroPolynomial() : NewtonError("minval of the zero polynomial") {}
};
struct InconsistentConstraints : NewtonError {
  using NewtonError::NewtonError;
};

// Lower envelope of the lines (i, v(a_i)) over nonzero coefficients.
PLFunction nv_minval_poly(const Poly& f);

// minval of a rational function: envelope(num) - envelope(den).
PLFunction nv_minval_rf(const RatFunc& phi);

struct LocalPolyResult {
  long d_index = 0;                         // max index attaining the minimum
  std::vector<FieldElement> residue_poly;   // degree d_index, low-to-high
  Rat minval_at;                            // minval_f(v(t))
};

// Residue polynomial of f(t x)/(a_d t^d); t must be nonzero.
LocalPolyResult nv_local_poly(const Poly& f, const ValuedElement& t);

struct ExactnessReport {
  Rat predicted;                 // minval_f(v(a))
  std::optional<Rat> actual;     // v(f(a)); nullopt = INFINITY
  bool exact = false;            // predicted == actual
  bool witness_root = false;     // residue of the unit part roots the loc
};

// Checks v(f(a)) against the envelope prediction; the loc-root witness
// explains every inexactness. f, a nonzero.
ExactnessReport nv_exactness(const Poly& f, const ValuedElement& a);

struct ContradictionPattern {
  long left_slope = 0;   // -1 in the paper's instance
  // Right slope is forced >= 0 by nonnegativity past beta; recorded as the
  // minimal admissible slope.
  long right_slope_min = 0;
};

using ProfileOutcome = std::variant<PLFunction, ContradictionPattern>;

// Fits the piecewise-linear function through finitely many (gamma, value)
// constraints around beta and flags the profile that cannot belong to an
// integer-valued rational function: slope -1 into value 0 at beta with any
// admissible right slope >= 0.
ProfileOutcome nv_forced_profile_check(
    const std::vector<std::pair<Rat, Rat>>& constraints, const Rat& beta);

}  // namespace skolemlab::newton
