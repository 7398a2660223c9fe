// Valued fields K over a residue field: rational functions in the
// uniformizer t, with Puiseux ramification u = t^(1/M) when the value group
// is dense. All elements are finite exact expressions; the completion is
// never constructed.
#pragma once

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>

#include "skolemlab/poly.hpp"
#include "skolemlab/rational.hpp"
#include "skolemlab/residue_field.hpp"
#include "skolemlab/valgroup.hpp"

namespace skolemlab::valued_field {

using residue_field::FieldElement;
using residue_field::FieldPtr;
using valgroup::GroupDescriptor;

struct ValuedFieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeValuation : ValuedFieldError {
  NegativeValuation() : ValuedFieldError("residue of a negative-valuation element") {}
};
struct Unsatisfiable : ValuedFieldError {
  using ValuedFieldError::ValuedFieldError;
};

struct ValuedFieldDescriptor {
  FieldPtr base;              // coefficient field = residue field V/m
  GroupDescriptor group;
  std::string uniformizer = "t";

  bool puiseux() const { return group.kind != valgroup::GroupKind::Integers; }
  bool operator==(const ValuedFieldDescriptor& o) const {
    return base == o.base && group == o.group;
  }
};

using KPtr = std::shared_ptr<const ValuedFieldDescriptor>;

// Valuation value: engaged rational, or infinity for the zero element.
using Val = std::optional<Rat>;
inline constexpr std::nullopt_t VAL_INFINITY = std::nullopt;

// num/den are coprime polynomials in u = t^(1/M) over the residue field;
// M is minimal and its prime factors are allowed by the group.
class ValuedElement {
 public:
  using UPoly = poly::Coeffs<FieldElement>;

  ValuedElement() = default;
  // Normalizing constructor: cancels the gcd, makes den monic, minimizes M.
  ValuedElement(KPtr k, UPoly num, UPoly den, long ramification = 1);

  const KPtr& field() const { return k_; }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  long ramification() const { return ram_; }
  bool is_zero() const { return num_.empty(); }

  Val valuation() const;
  FieldElement residue() const;  // requires valuation() >= 0

  ValuedElement operator+(const ValuedElement& o) const;
  ValuedElement operator-(const ValuedElement& o) const;
  ValuedElement operator*(const ValuedElement& o) const;
  ValuedElement operator/(const ValuedElement& o) const;
  ValuedElement operator-() const;
  bool operator==(const ValuedElement& o) const;
  bool operator!=(const ValuedElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  KPtr k_;
  UPoly num_, den_;
  long ram_ = 1;
};

ValuedElement kv_zero(const KPtr& k);
ValuedElement kv_one(const KPtr& k);
ValuedElement kv_from_residue(const KPtr& k, const FieldElement& c);
ValuedElement kv_uniformizer(const KPtr& k);

Val kv_valuation(const ValuedElement& x);
FieldElement kv_residue(const ValuedElement& x);

// Monomial of prescribed valuation times a unit with prescribed residue.
ValuedElement kv_make(const KPtr& k, const Rat& gamma,
                      const FieldElement& unit_residue);

struct SampleConstraints {
  // exactly one of `valuation` / `valuation_range` may be set
  std::optional<Rat> valuation;
  std::optional<std::pair<Rat, Rat>> valuation_range;  // open interval
  std::vector<FieldElement> residue_avoid;
};

// Pseudorandom element meeting the constraints; deterministic under a fixed
// RNG state. Drives property tests and the sample sets E.
ValuedElement kv_sample(const KPtr& k, std::mt19937_64& rng,
                        const SampleConstraints& c);

// A valuation value in range for sampling: for dense groups, denominators
// are bounded (default <= 16).
Rat kv_pick_valuation_in_range(const GroupDescriptor& g, std::mt19937_64& rng,
                               const Rat& lo, const Rat& hi,
                               long max_den = 16);

}  // namespace skolemlab::valued_field
