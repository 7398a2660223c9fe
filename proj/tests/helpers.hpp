// Shared fixtures for the test suites: scene loaders and random generators
// for polynomials, rational functions, and sample points.
#pragma once

#include <random>
#include <string>

#include "skolemlab/parser.hpp"
#include "skolemlab/scene.hpp"

namespace th {

using skolemlab::Rat;
using skolemlab::ratfunc::Poly;
using skolemlab::ratfunc::RatFunc;
using skolemlab::scene::Scene;
using skolemlab::valued_field::KPtr;
using skolemlab::valued_field::SampleConstraints;
using skolemlab::valued_field::ValuedElement;

inline Scene scene_a() { return skolemlab::scene::load_scene("scenes/a.json"); }
inline Scene scene_b() { return skolemlab::scene::load_scene("scenes/b.json"); }
inline Scene scene_c() { return skolemlab::scene::load_scene("scenes/c.json"); }
inline Scene scene_d() { return skolemlab::scene::load_scene("scenes/d.json"); }

inline RatFunc parse(const std::string& s, const Scene& sc) {
  return skolemlab::parser::parse_expr(s, sc);
}
inline ValuedElement elem(const std::string& s, const Scene& sc) {
  return skolemlab::parser::parse_element(s, sc);
}

// Random valuation in [lo, hi] allowed by the group (open interval padding
// keeps the endpoints reachable).
inline Rat random_val(const KPtr& k, std::mt19937_64& rng, long lo, long hi) {
  // small max_den keeps ramification (and so coefficient degrees) modest
  return skolemlab::valued_field::kv_pick_valuation_in_range(
      k->group, rng, Rat(lo) - Rat(1, 1000), Rat(hi) + Rat(1, 1000), 4);
}

inline ValuedElement random_point(const KPtr& k, std::mt19937_64& rng,
                                  long lo = -3, long hi = 4) {
  SampleConstraints c;
  c.valuation = random_val(k, rng, lo, hi);
  return skolemlab::valued_field::kv_sample(k, rng, c);
}

// Nonzero polynomial with random support; coefficient valuations in [lo, hi].
inline Poly random_poly(const KPtr& k, std::mt19937_64& rng, int max_deg,
                        long lo = -3, long hi = 4) {
  std::uniform_int_distribution<int> degd(0, max_deg);
  std::bernoulli_distribution keep(0.7);
  int deg = degd(rng);
  Poly f(static_cast<size_t>(deg) + 1, skolemlab::valued_field::kv_zero(k));
  for (int i = 0; i <= deg; ++i)
    if (i == deg || keep(rng)) f[static_cast<size_t>(i)] = random_point(k, rng, lo, hi);
  return f;
}

inline RatFunc random_ratfunc(const KPtr& k, std::mt19937_64& rng, int max_deg,
                              long lo = -2, long hi = 3) {
  return skolemlab::ratfunc::rf_normalize(k, random_poly(k, rng, max_deg, lo, hi),
                                          random_poly(k, rng, max_deg, lo, hi));
}

}  // namespace th
