// Skolem-closure membership over sample sets, the explicit constructions
// (theta, rho, the Lemma-Z function), depth-bounded certification of
// integer-valuedness, and the verification suites for the pseudovaluation
// and non-principal-maximal-ideal scenes.
#pragma once

#include <random>

#include "skolemlab/domains.hpp"
#include "skolemlab/newton.hpp"
#include "skolemlab/scene.hpp"

namespace skolemlab::skolem {

using domains::DomainDescriptor;
using domains::ValueIdeal;
using ratfunc::RatFunc;
using scene::Scene;
using valued_field::KPtr;
using valued_field::ValuedElement;

struct SkolemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SceneMismatch : SkolemError {
  using SkolemError::SkolemError;
};
struct ZeroSecond : SkolemError {
  ZeroSecond() : SkolemError("rho combiner requires phi2 != 0") {}
};
struct UnsupportedScene : SkolemError {
  using SkolemError::SkolemError;
};

enum class SampleIntent { FiniteExact, SampleOfV, SampleOfK };

struct SampleSet {
  std::vector<ValuedElement> points;  // distinct
  std::string label;
  SampleIntent intent = SampleIntent::SampleOfV;
};

// Deterministic sample sets for a scene: valuations straddle [lo, hi].
SampleSet make_sample_set(const Scene& sc, std::mt19937_64& rng, size_t count,
                          const Rat& lo_val, const Rat& hi_val,
                          SampleIntent intent, bool domain_only);

struct PointVerdict {
  ValuedElement a;
  ValueIdeal value_ideal;
  ratfunc::ValAt psi_value;  // valuation of psi(a), or pole
  bool pass = false;
};

struct SkReport {
  enum class Member { True, False, Inconclusive } member;
  std::vector<PointVerdict> per_point;
  std::vector<size_t> psi_poles;  // indices of sample points where psi poles
  std::string note;  // "evidence" downgrade text for SampleOf* sets
};

SkReport sk_member(const RatFunc& psi, const std::vector<RatFunc>& gens,
                   const SampleSet& E, const DomainDescriptor& D);

// theta(x) = t(1+x^4)/((1+t x^2)(t+x^2)); unit arguments land in m, others
// in 1+m. Self-checked on a small grid at construction.
RatFunc construct_theta(const DomainDescriptor& D);

// rho = phi1 + theta(phi1/phi2) * phi2; v(rho(a)) = min(v(phi1(a)),
// v(phi2(a))) wherever phi2(a) != 0.
RatFunc construct_rho(const RatFunc& phi1, const RatFunc& phi2,
                      const DomainDescriptor& D);

struct LemZResult {
  RatFunc phi;
  Rat gamma;  // in QGamma, > delta
};

// The controlled bump function: v(phi(d)) <= eps everywhere, positive
// exactly inside the ball v(d - c) >= gamma, and = eps at c.
LemZResult construct_lemz(const Rat& eps, const Rat& delta,
                          const ValuedElement& c, const DomainDescriptor& D);

// Grid verification of the three Lemma-Z properties; throws on violation.
void lemz_verify(const LemZResult& r, const Rat& eps, const Rat& delta,
                 const ValuedElement& c, const DomainDescriptor& D);

struct BranchNode {
  ValuedElement center;
  long level = 0;
  std::string status;  // "leaf", "branch", "counterexample", "unknown"
  std::vector<BranchNode> children;
};

struct Certificate {
  enum class Outcome { Certified, Counterexample, Unknown } outcome;
  std::optional<ValuedElement> counterexample;
  int depth_used = 0;
  BranchNode tree;
};

// Ball-splitting certification of phi in Int^R(V) for Z-valued scenes with
// finite residue field; UNKNOWN (with sample evidence) otherwise.
Certificate certify_int_valued(const RatFunc& phi, const DomainDescriptor& V,
                               int depth_limit);

enum class CheckStatus { Pass, Fail, Evidence, TheoremLevel };

struct Check {
  std::string name;
  CheckStatus status;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

// Prop 5.7 verification: value-ideal case table on a dyadic grid, Skolem
// membership of tx in (x^2, t^2) on samples, and the forced-profile
// contradiction pattern. `gens` overrides the ideal for tamper tests.
SuiteReport suite_vx2t2(const Scene& sc, size_t n_samples, uint64_t seed,
                        const std::vector<RatFunc>* gens_override = nullptr);

// Prop 5.4/5.5 verification: m-generator membership probes, value ideals of
// (x^2, m), Skolem membership of x, and the theorem-level non-membership
// flag.
SuiteReport suite_pvd_x2m(const Scene& sc, size_t n_samples, uint64_t seed);

}  // namespace skolemlab::skolem
