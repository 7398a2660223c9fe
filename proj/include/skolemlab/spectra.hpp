// Finite-family machinery for pointed maximal ideals M_{m,a}: characteristic
// sets, finite-intersection-property checks, filter limits, and a desk-scale
// probe of the ultrafilter-Skolem conditions.
#pragma once

#include <set>

#include "skolemlab/skolem.hpp"

namespace skolemlab::spectra {

using domains::DomainDescriptor;
using ratfunc::RatFunc;
using valued_field::ValuedElement;

struct SpectraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAFilter : SpectraError {
  using SpectraError::SpectraError;
};
struct NonPrincipalUltrafilter : SpectraError {
  NonPrincipalUltrafilter()
      : SpectraError(
            "ultrafilters on a finite ground set are principal; "
            "non-principal ones are out of reach here") {}
};

// Ground family Pi = {M_{m,a}}; all implemented domains are local, so the
// maximal-ideal tag is constant and the pairs are indexed by the points.
struct PointedIndex {
  std::vector<std::pair<std::string, ValuedElement>> pairs;
  DomainDescriptor domain;
};

PointedIndex make_pointed_index(const DomainDescriptor& D,
                                const std::vector<ValuedElement>& points);

// Filter on the (finite) ground set, stored by its generating sets. The
// upward closure is implied; on a finite ground set the filter is principal
// at the core = intersection of the generators.
struct FilterRepr {
  PointedIndex ground;
  std::vector<std::set<size_t>> sets;
  std::set<size_t> core;
  bool is_ultra = false;
};

// Verifies the filter axioms (no empty member, intersections stay inside);
// require_ultra additionally demands a singleton core.
FilterRepr sp_filter_make(PointedIndex ground,
                          std::vector<std::set<size_t>> sets,
                          bool require_ultra = false);

FilterRepr sp_principal_ultrafilter(PointedIndex ground, size_t at);

struct ChiResult {
  std::set<size_t> members;    // indices with phi(a) in m
  std::vector<size_t> poles;   // indices where phi has a pole (excluded)
};

// chi_phi = {M_{m,a} : phi(a) in M_{m,a}}, exact by evaluation.
ChiResult sp_chi(const RatFunc& phi, const PointedIndex& Pi);

struct FipResult {
  bool has_fip = false;
  // a ground index common to the whole family, when FIP holds
  std::optional<size_t> witness;
  // minimal-cardinality subfamily (set indices) with empty intersection
  std::vector<size_t> empty_subfamily;
};

// On a finite family, FIP is decided exactly; failures report a
// minimal-cardinality empty subfamily (breadth-first over subfamily size).
FipResult sp_fip(const std::vector<std::set<size_t>>& chis, size_t ground_size);

// r in lim_F M_{m,a}  iff  chi_r belongs to the upward closure of F.
bool sp_filter_limit_member(const RatFunc& r, const FilterRepr& F);

// Computes chi over the generators, decides FIP, cross-checks the
// rho-combiner identity chi_{phi1} n chi_{phi2} = chi_rho when m is
// principal in V, and reports consistency of FIP with value-ideal
// properness on the samples.
skolem::SuiteReport sp_ultraskolem_probe(const std::vector<RatFunc>& gens,
                                         const skolem::SampleSet& E,
                                         const DomainDescriptor& D);

}  // namespace skolemlab::spectra
