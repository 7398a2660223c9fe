// Valuation domains V and pseudovaluation domains D = pi^{-1}(F) inside V:
// membership, finitely-generated ideal membership with certificates, value
// ideals, and the m-generator construction. PVDs here have m principal in V
// and F equal to the coefficient subfield of the residue field descriptor
// (Q inside Q(i), F_p inside F_{p^k}).
#pragma once

#include <vector>

#include "skolemlab/ratfunc.hpp"

namespace skolemlab::domains {

using ratfunc::RatFunc;
using residue_field::FieldElement;
using valued_field::KPtr;
using valued_field::ValuedElement;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInDomain : DomainError {
  NotInDomain() : DomainError("element outside the domain") {}
};
struct PoleAtSample : DomainError {
  std::vector<size_t> offenders;
  explicit PoleAtSample(std::vector<size_t> off)
      : DomainError("generator pole at a sample point"),
        offenders(std::move(off)) {}
};
struct MNotPrincipal : DomainError {
  MNotPrincipal() : DomainError("maximal ideal not principal in V") {}
};
struct NotABasis : DomainError {
  using DomainError::DomainError;
};

enum class DomainKind { Valuation, PVD };

struct DomainDescriptor {
  DomainKind kind = DomainKind::Valuation;
  KPtr K;

  static DomainDescriptor valuation(KPtr k) {
    return {DomainKind::Valuation, std::move(k)};
  }
  // PVD requires a proper residue extension (degree >= 2); F is its
  // coefficient subfield.
  static DomainDescriptor pvd(KPtr k);

  // m is principal in V iff the group has 1 as its least positive element.
  bool m_principal_in_V() const {
    return K->group.kind == valgroup::GroupKind::Integers;
  }
};

bool dom_contains(const DomainDescriptor& D, const ValuedElement& x);

// Ideal membership result with a checkable certificate on success.
struct MemberResult {
  enum class Status { True, False, DepthExceeded } status;
  // Coefficients a_i in D with sum a_i * g_i = c, parallel to the
  // generators; empty unless status == True.
  std::vector<ValuedElement> certificate;

  bool is_true() const { return status == Status::True; }
};

MemberResult dom_ideal_member(const DomainDescriptor& D,
                              const std::vector<ValuedElement>& gens,
                              const ValuedElement& c, int depth_limit = 32);

struct ValueIdeal {
  enum class Kind { ValuationIdeal, PVDIdeal } kind;
  // ValuationIdeal: engaged gamma >= 0; nullopt means the zero ideal.
  std::optional<Rat> gamma;
  std::vector<ValuedElement> generators;  // PVD case

  bool is_unit_ideal(const DomainDescriptor& D) const;
};

// Membership of a domain element in a value ideal.
bool value_ideal_contains(const DomainDescriptor& D, const ValueIdeal& I,
                          const ValuedElement& x, int depth_limit = 32);

// I(a) for I = (phi_1, ..., phi_n) of Int^R(E,D): the ideal of values.
ValueIdeal dom_value_ideal(const DomainDescriptor& D,
                           const std::vector<RatFunc>& gens,
                           const ValuedElement& a);

// m = (t*t_1, ..., t*t_n)D from unit representatives whose residues form a
// basis of V/m over F.
std::vector<ValuedElement> pvd_m_generators(
    const DomainDescriptor& D, const std::vector<ValuedElement>& basis);

}  // namespace skolemlab::domains
