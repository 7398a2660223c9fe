#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skolemlab/residue_field.hpp"

using namespace skolemlab;
using namespace skolemlab::residue_field;

namespace {
FieldPtr F3() { return FieldDescriptor::prime_finite(3); }
FieldPtr F9() {
  return FieldDescriptor::ext_finite(3, {Rat(-1), Rat(-1), Rat(1)}, "w");
}
FieldPtr QQ() { return FieldDescriptor::rationals(); }
FieldPtr Qi() { return FieldDescriptor::quadratic(Rat(-1), "i"); }

FieldElement rand_elem(const FieldPtr& F, std::mt19937_64& rng) {
  if (F->finite()) {
    std::uniform_int_distribution<long> d(0, F->order() - 1);
    return F->from_index(d(rng));
  }
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rat> c(F->degree());
  for (auto& x : c) x = Rat(d(rng), 1 + (d(rng) & 3));
  return F->from_coords(std::move(c));
}
}  // namespace

TEST_CASE("extension arithmetic reduces by the minimal polynomial") {
  auto f9 = F9();
  FieldElement w = f9->generator();
  CHECK(w * w == w + f9->one());  // w^2 = w + 1 in F_3[w]/(w^2-w-1)

  auto qi = Qi();
  FieldElement i = qi->generator();
  CHECK(i * i == -qi->one());
}

TEST_CASE("additive inverses and division errors") {
  std::mt19937_64 rng(7);
  for (const auto& F : {F3(), F9(), QQ(), Qi()}) {
    for (int k = 0; k < 20; ++k) {
      FieldElement a = rand_elem(F, rng);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK(a * a.inv() == F->one());
    }
    CHECK_THROWS_AS(F->zero().inv(), DivisionByZero);
  }
  CHECK_THROWS_AS(F3()->one() + F9()->one(), FieldMismatch);
}

TEST_CASE("descriptor construction rejects reducible minimal polynomials") {
  CHECK_THROWS_AS(FieldDescriptor::ext_finite(3, {Rat(-1), Rat(0), Rat(1)}),
                  FieldError);  // x^2 - 1 = (x-1)(x+1)
  CHECK_THROWS_AS(FieldDescriptor::quadratic(Rat(4)), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::prime_finite(4), FieldError);
}

TEST_CASE("fld_find_rootless_monic") {
  auto check_rootless_finite = [](const FieldPtr& F) {
    auto f = fld_find_rootless_monic(F, 4);
    REQUIRE(f.size() >= 3);
    CHECK(f.back() == F->one());
    for (long i = 0; i < F->order(); ++i)
      CHECK_FALSE(fld_poly_eval(f, F->from_index(i)).is_zero());
  };
  // F_3: the squares are {0, 1}, so x^2 + 1 is rootless and found first
  auto f3 = F3();
  auto f = fld_find_rootless_monic(f3, 4);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == f3->one());
  CHECK(f[1].is_zero());
  CHECK(f[2] == f3->one());
  check_rootless_finite(f3);
  check_rootless_finite(F9());

  auto q = QQ();
  auto fq = fld_find_rootless_monic(q, 4);
  REQUIRE(fq.size() == 3);
  CHECK(fq[0] == q->one());
  CHECK(fq[1].is_zero());
  CHECK(fq[2] == q->one());

  // Q(i): verified rootless on a probe set; degree stays small
  auto qi = Qi();
  auto fqi = fld_find_rootless_monic(qi, 4);
  CHECK(fqi.size() >= 3);
  CHECK(fqi.back() == qi->one());
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k)
    CHECK_FALSE(fld_poly_eval(fqi, rand_elem(qi, rng)).is_zero());

  CHECK_THROWS_AS(fld_find_rootless_monic(f3, 1), FieldError);
}

TEST_CASE("fld_linear_solve over the coefficient subfield") {
  auto f9 = F9();
  FieldElement w = f9->generator();
  FieldElement two = f9->from_base(Rat(2));

  auto sol = fld_linear_solve({f9->one(), w}, w + two);
  REQUIRE(sol.has_value());
  REQUIRE(sol->size() == 2);
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 1);

  auto qi = Qi();
  CHECK_FALSE(fld_linear_solve({qi->one()}, qi->generator()).has_value());

  CHECK_FALSE(fld_linear_solve({w}, w + f9->one()).has_value());
}

TEST_CASE("linear solve solutions reproduce the target") {
  std::mt19937_64 rng(13);
  for (const auto& F : {F9(), Qi()}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<FieldElement> vecs{rand_elem(F, rng), rand_elem(F, rng)};
      FieldElement target = rand_elem(F, rng);
      auto sol = fld_linear_solve(vecs, target);
      if (!sol) continue;
      FieldElement acc = F->zero();
      for (size_t j = 0; j < vecs.size(); ++j)
        acc = acc + F->from_base((*sol)[j]) * vecs[j];
      REQUIRE(acc == target);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(17);
  for (const auto& F : {F3(), F9(), QQ(), Qi()}) {
    for (int trial = 0; trial < 500; ++trial) {
      FieldElement a = rand_elem(F, rng), b = rand_elem(F, rng),
                   c = rand_elem(F, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      if (!a.is_zero()) REQUIRE(a * (b / a) == b);
    }
  }
}

TEST_CASE("from_index enumerates finite fields without repetition") {
  for (const auto& F : {F3(), F9()}) {
    std::set<std::string> seen;
    for (long i = 0; i < F->order(); ++i)
      seen.insert(F->from_index(i).to_string());
    CHECK(seen.size() == static_cast<size_t>(F->order()));
  }
}
