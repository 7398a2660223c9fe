#include "skolemlab/domains.hpp"

#include <algorithm>

namespace skolemlab::domains {

using residue_field::fld_linear_solve;
using valued_field::kv_make;
using valued_field::kv_zero;

DomainDescriptor DomainDescriptor::pvd(KPtr k) {
  if (k->base->degree() < 2)
    throw DomainError("PVD subfield must be proper in V/m");
  return {DomainKind::PVD, std::move(k)};
}

bool dom_contains(const DomainDescriptor& D, const ValuedElement& x) {
  auto v = x.valuation();
  if (!v) return true;  // zero
  if (*v < 0) return false;
  if (D.kind == DomainKind::Valuation) return true;
  if (*v > 0) return true;
  return x.residue().in_base();
}

namespace {

// Stratified PVD membership, the paper's reduction: solve the level-k
// residue over F, subtract, and absorb any strictly-higher-valuation
// remainder into the minimum-valuation generator times an m-element.
MemberResult pvd_member(const DomainDescriptor& D,
                        const std::vector<ValuedElement>& gens,
                        const ValuedElement& c, int depth_limit) {
  const KPtr& k = D.K;
  std::vector<ValuedElement> cert(gens.size(), kv_zero(k));
  size_t min_i = gens.size();
  Rat kmin;
  for (size_t i = 0; i < gens.size(); ++i) {
    auto v = gens[i].valuation();
    if (!v) continue;
    if (min_i == gens.size() || *v < kmin) {
      min_i = i;
      kmin = *v;
    }
  }
  if (min_i == gens.size()) {
    // zero ideal
    if (c.is_zero()) return {MemberResult::Status::True, std::move(cert)};
    return {MemberResult::Status::False, {}};
  }

  ValuedElement r = c;
  for (int depth = 0; depth < depth_limit; ++depth) {
    if (r.is_zero()) return {MemberResult::Status::True, std::move(cert)};
    Rat vr = *r.valuation();
    if (vr < kmin) return {MemberResult::Status::False, {}};
    if (vr > kmin) {
      // r / g_min is in m, hence in D
      cert[min_i] = cert[min_i] + r / gens[min_i];
      return {MemberResult::Status::True, std::move(cert)};
    }
    // level k_min: the leading residue must be an F-combination of the
    // residues of the minimum-level generators
    ValuedElement mono = kv_make(k, kmin, k->base->one());
    std::vector<size_t> level;
    std::vector<FieldElement> vecs;
    for (size_t i = 0; i < gens.size(); ++i) {
      auto v = gens[i].valuation();
      if (v && *v == kmin) {
        level.push_back(i);
        vecs.push_back((gens[i] / mono).residue());
      }
    }
    auto sol = fld_linear_solve(vecs, (r / mono).residue());
    if (!sol) return {MemberResult::Status::False, {}};
    for (size_t j = 0; j < level.size(); ++j) {
      if ((*sol)[j] == 0) continue;
      ValuedElement a =
          valued_field::kv_from_residue(k, k->base->from_base((*sol)[j]));
      cert[level[j]] = cert[level[j]] + a;
      r = r - a * gens[level[j]];
    }
    if (!r.is_zero() && *r.valuation() == kmin)
      throw DomainError("level reduction failed to raise the valuation");
  }
  return {MemberResult::Status::DepthExceeded, {}};
}

}  // namespace

MemberResult dom_ideal_member(const DomainDescriptor& D,
                              const std::vector<ValuedElement>& gens,
                              const ValuedElement& c, int depth_limit) {
  for (const auto& g : gens)
    if (!dom_contains(D, g)) throw NotInDomain();
  if (!dom_contains(D, c)) throw NotInDomain();

  if (D.kind == DomainKind::Valuation) {
    // ideals are totally ordered by valuation
    size_t min_i = gens.size();
    Rat kmin;
    for (size_t i = 0; i < gens.size(); ++i) {
      auto v = gens[i].valuation();
      if (!v) continue;
      if (min_i == gens.size() || *v < kmin) {
        min_i = i;
        kmin = *v;
      }
    }
    std::vector<ValuedElement> cert(gens.size(), kv_zero(D.K));
    if (c.is_zero()) return {MemberResult::Status::True, std::move(cert)};
    if (min_i == gens.size()) return {MemberResult::Status::False, {}};
    if (*c.valuation() >= kmin) {
      cert[min_i] = c / gens[min_i];
      return {MemberResult::Status::True, std::move(cert)};
    }
    return {MemberResult::Status::False, {}};
  }

  if (!D.m_principal_in_V()) throw MNotPrincipal();
  return pvd_member(D, gens, c, depth_limit);
}

bool ValueIdeal::is_unit_ideal(const DomainDescriptor& D) const {
  if (kind == Kind::ValuationIdeal) return gamma && *gamma == 0;
  // PVD: unit ideal iff some F-combination of the generators is a unit of D,
  // i.e. 1 is a member
  return dom_ideal_member(D, generators, valued_field::kv_one(D.K)).is_true();
}

bool value_ideal_contains(const DomainDescriptor& D, const ValueIdeal& I,
                          const ValuedElement& x, int depth_limit) {
  if (I.kind == ValueIdeal::Kind::ValuationIdeal) {
    auto vx = x.valuation();
    if (!vx) return true;  // zero is in every ideal
    if (!I.gamma) return false;
    return *vx >= *I.gamma;
  }
  return dom_ideal_member(D, I.generators, x, depth_limit).is_true();
}

ValueIdeal dom_value_ideal(const DomainDescriptor& D,
                           const std::vector<RatFunc>& gens,
                           const ValuedElement& a) {
  std::vector<ValuedElement> values;
  std::vector<size_t> poles;
  for (size_t i = 0; i < gens.size(); ++i) {
    auto r = ratfunc::rf_eval(gens[i], a);
    if (ratfunc::is_pole(r)) {
      poles.push_back(i);
      continue;
    }
    values.push_back(ratfunc::value_of(r));
  }
  if (!poles.empty()) throw PoleAtSample(std::move(poles));

  if (D.kind == DomainKind::Valuation) {
    std::optional<Rat> best;
    for (const auto& v : values) {
      auto val = v.valuation();
      if (!val) continue;
      if (!best || *val < *best) best = *val;
    }
    return {ValueIdeal::Kind::ValuationIdeal, best, {}};
  }
  return {ValueIdeal::Kind::PVDIdeal, std::nullopt, std::move(values)};
}

std::vector<ValuedElement> pvd_m_generators(
    const DomainDescriptor& D, const std::vector<ValuedElement>& basis) {
  if (D.kind != DomainKind::PVD) throw DomainError("not a PVD");
  if (!D.m_principal_in_V()) throw MNotPrincipal();
  const KPtr& k = D.K;
  size_t deg = k->base->degree();
  if (basis.size() != deg)
    throw NotABasis("basis size must equal the residue extension degree");

  // residues must be units spanning V/m over F: square coordinate matrix of
  // full rank
  std::vector<FieldElement> residues;
  for (const auto& b : basis) {
    auto v = b.valuation();
    if (!v || *v != 0) throw NotABasis("basis elements must be units of V");
    residues.push_back(b.residue());
  }
  // rank check: every standard coordinate vector must be solvable
  for (size_t i = 0; i < deg; ++i) {
    std::vector<Rat> coords(deg, Rat(0));
    coords[i] = 1;
    if (!fld_linear_solve(residues, k->base->from_coords(coords)))
      throw NotABasis("residues do not span V/m over F");
  }

  ValuedElement t = valued_field::kv_uniformizer(k);
  std::vector<ValuedElement> gens;
  for (const auto& b : basis) gens.push_back(t * b);
  return gens;
}

}  // namespace skolemlab::domains
