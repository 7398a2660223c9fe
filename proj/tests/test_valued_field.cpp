#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skolemlab/valued_field.hpp"

using namespace skolemlab;
using namespace skolemlab::valued_field;

TEST_CASE("kv_valuation") {
  auto a = th::scene_a();
  CHECK(kv_valuation(kv_uniformizer(a.K)) == Rat(1));
  CHECK(kv_valuation(th::elem("(1+t)/t^2", a)) == Rat(-2));
  CHECK(kv_valuation(kv_zero(a.K)) == VAL_INFINITY);

  auto b = th::scene_b();
  ValuedElement half = th::elem("t^(1/2)", b);
  CHECK(half.ramification() == 2);
  CHECK(kv_valuation(half) == Rat(1, 2));
}

TEST_CASE("kv_residue") {
  auto a = th::scene_a();
  CHECK(kv_residue(th::elem("(1+t)/(1-t)", a)) == a.K->base->one());
  CHECK(kv_residue(kv_uniformizer(a.K)).is_zero());
  CHECK_THROWS_AS(kv_residue(th::elem("1/t", a)), NegativeValuation);

  auto d = th::scene_d();
  CHECK(kv_residue(th::elem("w + t", d)) == d.K->base->generator());
}

TEST_CASE("arithmetic and normalization") {
  auto a = th::scene_a();
  ValuedElement t = kv_uniformizer(a.K);
  CHECK(t * t == th::elem("t^2", a));
  ValuedElement z = t + (-t);
  CHECK(z.is_zero());
  CHECK(kv_valuation(z) == VAL_INFINITY);
  CHECK_THROWS_AS(t / kv_zero(a.K), ValuedFieldError);

  auto b = th::scene_b();
  ValuedElement half = th::elem("t^(1/2)", b);
  ValuedElement prod = half * half;
  CHECK(prod.ramification() == 1);  // M re-minimized after u^2 = t
  CHECK(prod == kv_uniformizer(b.K));
}

TEST_CASE("kv_make prescribes valuation and residue") {
  auto a = th::scene_a();
  ValuedElement t5 = kv_make(a.K, Rat(5), a.K->base->one());
  CHECK(t5 == th::elem("t^5", a));
  CHECK(t5.to_string() == "t^5");

  ValuedElement two = kv_make(a.K, Rat(0), a.K->base->from_base(Rat(2)));
  CHECK(two == th::elem("2", a));

  auto b = th::scene_b();
  ValuedElement m32 = kv_make(b.K, Rat(3, 2), b.K->base->one());
  CHECK(kv_valuation(m32) == Rat(3, 2));
  CHECK(m32 == th::elem("t^(3/2)", b));

  CHECK_THROWS_AS(kv_make(a.K, Rat(1, 2), a.K->base->one()),
                  valgroup::GroupMismatch);
  CHECK_THROWS_AS(kv_make(a.K, Rat(1), a.K->base->zero()), ValuedFieldError);
}

TEST_CASE("kv_sample honors constraints and is deterministic") {
  auto b = th::scene_b();
  std::mt19937_64 rng(5);
  SampleConstraints c;
  c.valuation = Rat(0);
  for (int k = 0; k < 30; ++k) {
    ValuedElement x = kv_sample(b.K, rng, c);
    REQUIRE(kv_valuation(x) == Rat(0));
    REQUIRE_FALSE(kv_residue(x).is_zero());
  }
  SampleConstraints r;
  r.valuation_range = {Rat(1), Rat(2)};
  for (int k = 0; k < 30; ++k) {
    Rat v = *kv_valuation(kv_sample(b.K, rng, r));
    REQUIRE(v > 1);
    REQUIRE(v < 2);
    REQUIRE(b.K->group.contains(v));
  }
  SampleConstraints avoid;
  avoid.valuation = Rat(0);
  avoid.residue_avoid = {b.K->base->one(), b.K->base->from_base(Rat(2))};
  CHECK_THROWS_AS(kv_sample(b.K, rng, avoid), Unsatisfiable);

  std::mt19937_64 r1(99), r2(99);
  for (int k = 0; k < 20; ++k)
    REQUIRE(kv_sample(b.K, r1, c) == kv_sample(b.K, r2, c));
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(21);
  for (const auto& sc : {th::scene_a(), th::scene_b(), th::scene_d()}) {
    for (int trial = 0; trial < 1000; ++trial) {
      ValuedElement x = th::random_point(sc.K, rng), y = th::random_point(sc.K, rng);
      Rat vx = *kv_valuation(x), vy = *kv_valuation(y);
      REQUIRE(*kv_valuation(x * y) == vx + vy);
      Val vs = kv_valuation(x + y);
      Rat lo = std::min(vx, vy);
      if (vx != vy) {
        REQUIRE(vs == lo);
      } else {
        REQUIRE((!vs || *vs >= lo));
      }
    }
  }
}

TEST_CASE("residue is a ring homomorphism on the valuation ring") {
  std::mt19937_64 rng(23);
  for (const auto& sc : {th::scene_a(), th::scene_b()}) {
    for (int trial = 0; trial < 500; ++trial) {
      ValuedElement x = th::random_point(sc.K, rng, 0, 3);
      ValuedElement y = th::random_point(sc.K, rng, 0, 3);
      REQUIRE(kv_residue(x + y) == kv_residue(x) + kv_residue(y));
      REQUIRE(kv_residue(x * y) == kv_residue(x) * kv_residue(y));
    }
  }
}

TEST_CASE("kv_make round-trips the prescribed valuation") {
  std::mt19937_64 rng(25);
  for (const auto& sc : {th::scene_a(), th::scene_b()}) {
    for (int trial = 0; trial < 200; ++trial) {
      Rat g = th::random_val(sc.K, rng, -5, 5);
      ValuedElement x = kv_make(sc.K, g, sc.K->base->one());
      REQUIRE(kv_valuation(x) == g);
    }
  }
}
