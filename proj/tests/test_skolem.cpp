#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skolemlab/skolem.hpp"

using namespace skolemlab;
using namespace skolemlab::skolem;
using ratfunc::rf_val_at;
using ratfunc::val_is_infinite;
using ratfunc::val_is_pole;
using ratfunc::val_value;
using valued_field::ValuedElement;
using valued_field::kv_one;
using valued_field::kv_uniformizer;
using valued_field::kv_zero;

namespace {
const std::string kDenseQ = R"({
  "name": "dense-q",
  "field": {"kind": "PrimeFinite", "p": 3},
  "group": {"kind": "Rationals"},
  "puiseux": true,
  "domain": {"kind": "Valuation"},
  "seed": 7,
  "sample_den_bound": 16
})";

Rat val_of(const ratfunc::RatFunc& phi, const ValuedElement& a) {
  auto v = rf_val_at(phi, a);
  REQUIRE_FALSE(val_is_pole(v));
  REQUIRE_FALSE(val_is_infinite(v));
  return val_value(v);
}
}  // namespace

TEST_CASE("make_sample_set draws distinct constrained points") {
  auto b = th::scene_b();
  std::mt19937_64 rng(3);
  SampleSet E = make_sample_set(b, rng, 60, Rat(-1), Rat(3),
                                SampleIntent::SampleOfV, true);
  REQUIRE(E.points.size() == 60);
  std::set<std::string> seen;
  for (const auto& p : E.points) {
    REQUIRE(seen.insert(p.to_string()).second);
    REQUIRE(*p.valuation() >= 0);  // domain_only
  }
}

TEST_CASE("sk_member is a decision on FiniteExact sets") {
  auto a = th::scene_a();
  SampleSet E{{kv_zero(a.K)}, "origin", SampleIntent::FiniteExact};
  SkReport r = sk_member(th::parse("1", a), {th::parse("x", a)}, E, a.domain);
  CHECK(r.member == SkReport::Member::False);

  SkReport ok = sk_member(th::parse("x", a), {th::parse("x", a)}, E, a.domain);
  CHECK(ok.member == SkReport::Member::True);
  CHECK(ok.note.empty());
}

TEST_CASE("sk_member downgrades sampled sets to evidence") {
  auto b = th::scene_b();
  std::mt19937_64 rng(5);
  SampleSet E = make_sample_set(b, rng, 50, Rat(-1, 8), Rat(3),
                                SampleIntent::SampleOfV, true);
  std::vector<ratfunc::RatFunc> I{th::parse("x^2", b), th::parse("t^2", b)};
  SkReport r = sk_member(th::parse("t*x", b), I, E, b.domain);
  CHECK(r.member == SkReport::Member::Inconclusive);
  CHECK(r.note.find("evidence") != std::string::npos);
  for (const auto& pv : r.per_point) CHECK(pv.pass);

  // a pole of psi at a sample point fails membership
  SampleSet origin{{kv_zero(b.K)}, "origin", SampleIntent::FiniteExact};
  SkReport pole = sk_member(th::parse("1/x", b), I, origin, b.domain);
  CHECK(pole.member == SkReport::Member::False);
  REQUIRE(pole.psi_poles.size() == 1);
}

TEST_CASE("construct_theta") {
  auto a = th::scene_a();
  ratfunc::RatFunc theta = construct_theta(a.domain);
  CHECK(theta == th::parse("t*(1+x^4)/((1+t*x^2)*(t+x^2))", a));

  auto r = ratfunc::rf_eval(theta, kv_one(a.K));
  CHECK(ratfunc::value_of(r) == th::elem("2*t/(1+t)^2", a));
  CHECK(val_of(theta, kv_one(a.K)) == Rat(1));

  for (const char* arg : {"t", "1/t", "t^2", "(1+t)/t^3"}) {
    ValuedElement v = ratfunc::value_of(ratfunc::rf_eval(theta, th::elem(arg, a)));
    CHECK(*v.valuation() == Rat(0));
    CHECK(v.residue() == a.K->base->one());  // theta(a) in 1 + m
  }

  CHECK_THROWS_AS(construct_theta(th::scene_b().domain),
                  domains::MNotPrincipal);
}

TEST_CASE("construct_rho matches the minimum valuation") {
  auto a = th::scene_a();
  ratfunc::RatFunc rho1 =
      construct_rho(th::parse("x", a), th::parse("t", a), a.domain);
  CHECK(val_of(rho1, th::elem("t^3", a)) == Rat(1));

  ratfunc::RatFunc rho2 =
      construct_rho(th::parse("1", a), th::parse("1", a), a.domain);
  for (const char* p : {"0", "t", "1+t", "1/t"})
    CHECK(val_of(rho2, th::elem(p, a)) == Rat(0));

  ratfunc::RatFunc rho3 =
      construct_rho(th::parse("x", a), th::parse("x+t", a), a.domain);
  CHECK(val_of(rho3, kv_one(a.K)) == Rat(0));

  CHECK_THROWS_AS(
      construct_rho(th::parse("x", a), th::parse("0", a), a.domain),
      ZeroSecond);
}

TEST_CASE("rho contract on random pairs") {
  auto a = th::scene_a();
  std::mt19937_64 rng(61);
  int done = 0;
  while (done < 500) {
    ratfunc::RatFunc phi1 = th::random_ratfunc(a.K, rng, 2, -1, 2);
    ratfunc::RatFunc phi2 = th::random_ratfunc(a.K, rng, 2, -1, 2);
    ValuedElement p = th::random_point(a.K, rng, -2, 3);
    if (phi2.is_zero()) continue;
    auto v1 = rf_val_at(phi1, p), v2 = rf_val_at(phi2, p);
    if (val_is_pole(v1) || val_is_pole(v2) || val_is_infinite(v2)) continue;
    ratfunc::RatFunc rho;
    try {
      rho = construct_rho(phi1, phi2, a.domain);
    } catch (const ratfunc::DegreeOverflow&) {
      continue;
    }
    auto vr = rf_val_at(rho, p);
    if (val_is_infinite(v1)) {
      // min(inf, v2) = v2
      REQUIRE_FALSE(val_is_pole(vr));
      REQUIRE(val_value(vr) == val_value(v2));
    } else {
      Rat expect = std::min(val_value(v1), val_value(v2));
      REQUIRE_FALSE(val_is_pole(vr));
      REQUIRE_FALSE(val_is_infinite(vr));
      REQUIRE(val_value(vr) == expect);
    }
    ++done;
  }
}

TEST_CASE("construct_lemz branch 1 (non-divisible group)") {
  auto a = th::scene_a();
  ValuedElement c = kv_zero(a.K);

  // eps = 2 with m = 2: eps/m = 1 in Gamma, so n = 2, v(b) = 3, v(a) = 5
  LemZResult r = construct_lemz(Rat(2), Rat(1), c, a.domain);
  CHECK(r.gamma == Rat(3, 2));
  CHECK(r.phi == th::parse("(x^2 + t^5)/(x^2 + t^3)", a));
  CHECK(val_of(r.phi, th::elem("1", a)) == Rat(0));
  CHECK(val_of(r.phi, th::elem("t", a)) == Rat(0));
  CHECK(val_of(r.phi, th::elem("t^2", a)) == Rat(1));
  CHECK(val_of(r.phi, th::elem("t^3", a)) == Rat(2));
  CHECK(val_of(r.phi, th::elem("t^7", a)) == Rat(2));
  CHECK(val_of(r.phi, c) == Rat(2));  // property iii at the center

  // eps = 1: eps/m outside Gamma, so n = 4, v(b) = 5, v(a) = 6
  LemZResult s = construct_lemz(Rat(1), Rat(1), c, a.domain);
  CHECK(s.gamma == Rat(5, 4));
  CHECK(s.phi == th::parse("(x^4 + t^6)/(x^4 + t^5)", a));
  CHECK(s.gamma > Rat(1));
}

TEST_CASE("construct_lemz branch 2 (divisible group, rootless residue poly)") {
  auto q = scene::scene_from_json_text(kDenseQ);
  ValuedElement c = kv_zero(q.K);
  LemZResult r = construct_lemz(Rat(1), Rat(1), c, q.domain);
  CHECK(r.gamma == Rat(3, 2));
  // profile 0 below 3/2, then 2(w - 3/2), then capped at eps = 1
  CHECK(val_of(r.phi, th::elem("t", q)) == Rat(0));
  CHECK(val_of(r.phi, valued_field::kv_make(q.K, Rat(7, 4), q.K->base->one())) ==
        Rat(1, 2));
  CHECK(val_of(r.phi, th::elem("t^2", q)) == Rat(1));
  CHECK(val_of(r.phi, th::elem("t^3", q)) == Rat(1));
  CHECK(val_of(r.phi, c) == Rat(1));
}

TEST_CASE("lemz random parameters verify on their grids") {
  auto a = th::scene_a();
  auto b = th::scene_b();
  auto q = scene::scene_from_json_text(kDenseQ);
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> ed(1, 4), dd(1, 3), cd(-2, 2);
  for (int k = 0; k < 10; ++k) {
    for (const auto& sc : {a, b}) {
      Rat eps(ed(rng)), delta(dd(rng));
      ValuedElement c = cd(rng) >= 0 ? th::random_point(sc.K, rng, 0, 2)
                                     : kv_zero(sc.K);
      LemZResult r = construct_lemz(eps, delta, c, sc.domain);  // self-verifies
      CHECK(r.gamma > delta);
    }
    {
      Rat eps(ed(rng)), delta(dd(rng));
      LemZResult r = construct_lemz(eps, delta, kv_zero(q.K), q.domain);
      CHECK(r.gamma > delta);
    }
  }
  CHECK_THROWS_AS(construct_lemz(Rat(0), Rat(1), kv_zero(a.K), a.domain),
                  SkolemError);
  CHECK_THROWS_AS(
      construct_lemz(Rat(1), Rat(1), kv_zero(th::scene_c().K),
                     th::scene_c().domain),
      SceneMismatch);
}

TEST_CASE("certify_int_valued") {
  auto a = th::scene_a();

  Certificate good = certify_int_valued(th::parse("(x^3 - x)/t", a), a.domain, 8);
  CHECK(good.outcome == Certificate::Outcome::Certified);
  CHECK(good.depth_used <= 2);

  Certificate bad = certify_int_valued(th::parse("(x^2 + 1)/t", a), a.domain, 8);
  REQUIRE(bad.outcome == Certificate::Outcome::Counterexample);
  REQUIRE(bad.counterexample.has_value());
  auto v = rf_val_at(th::parse("(x^2 + 1)/t", a), *bad.counterexample);
  REQUIRE_FALSE(val_is_pole(v));
  REQUIRE_FALSE(val_is_infinite(v));
  CHECK(val_value(v) < 0);

  Certificate one = certify_int_valued(th::parse("1", a), a.domain, 8);
  CHECK(one.outcome == Certificate::Outcome::Certified);
  CHECK(one.depth_used == 0);

  // soundness audit of the certified function
  std::mt19937_64 rng(71);
  ratfunc::RatFunc phi = th::parse("(x^3 - x)/t", a);
  for (int k = 0; k < 500; ++k) {
    ValuedElement p = th::random_point(a.K, rng, 0, 6);
    auto vv = rf_val_at(phi, p);
    REQUIRE_FALSE(val_is_pole(vv));
    if (!val_is_infinite(vv)) REQUIRE(val_value(vv) >= 0);
  }

  // dense-group scenes fall back to sampling: UNKNOWN or a real witness
  auto b = th::scene_b();
  Certificate unk = certify_int_valued(th::parse("x", b), b.domain, 8);
  CHECK(unk.outcome == Certificate::Outcome::Unknown);
  Certificate cx = certify_int_valued(th::parse("1/t", b), b.domain, 8);
  CHECK(cx.outcome == Certificate::Outcome::Counterexample);

  CHECK_THROWS_AS(certify_int_valued(th::parse("x", a), th::scene_c().domain, 4),
                  UnsupportedScene);
}

TEST_CASE("suite_vx2t2") {
  auto b = th::scene_b();
  SuiteReport rep = suite_vx2t2(b, 60, 7);
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.all_pass());
  CHECK(rep.checks[0].name == "value-ideal-table");
  CHECK(rep.checks[0].status == CheckStatus::Pass);
  CHECK(rep.checks[1].status == CheckStatus::Evidence);
  CHECK(rep.checks[2].name == "forced-profile");
  CHECK(rep.checks[2].status == CheckStatus::Pass);
  CHECK(rep.checks[2].details.find("-1") != std::string::npos);

  CHECK_THROWS_AS(suite_vx2t2(th::scene_a(), 10, 7), SceneMismatch);

  // tampered ideal (x^2, t^3): the case boundary moves, the table fails
  std::vector<ratfunc::RatFunc> tampered{th::parse("x^2", b),
                                         th::parse("t^3", b)};
  SuiteReport bad = suite_vx2t2(b, 20, 7, &tampered);
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.checks[0].status == CheckStatus::Fail);
}

TEST_CASE("suite_pvd_x2m") {
  for (const auto& sc : {th::scene_c(), th::scene_d()}) {
    SuiteReport rep = suite_pvd_x2m(sc, 60, 7);
    REQUIRE(rep.checks.size() == 4);
    CHECK(rep.all_pass());
    CHECK(rep.checks[0].name == "m-generators");
    CHECK(rep.checks[0].status == CheckStatus::Pass);
    CHECK(rep.checks[1].status == CheckStatus::Pass);
    CHECK(rep.checks[2].status == CheckStatus::Evidence);
    CHECK(rep.checks[3].status == CheckStatus::TheoremLevel);
  }
  CHECK_THROWS_AS(suite_pvd_x2m(th::scene_a(), 10, 7), SceneMismatch);
  CHECK_THROWS_AS(suite_pvd_x2m(th::scene_b(), 10, 7), SceneMismatch);
}

TEST_CASE("pvd value-ideal examples") {
  auto c = th::scene_c();
  auto mgens = domains::pvd_m_generators(c.domain, c.pvd_basis);
  std::vector<ratfunc::RatFunc> gens{th::parse("x^2", c)};
  for (const auto& g : mgens) gens.push_back(ratfunc::rf_constant(c.K, g));

  domains::ValueIdeal unit =
      domains::dom_value_ideal(c.domain, gens, th::elem("1 + t", c));
  CHECK(unit.is_unit_ideal(c.domain));

  ValuedElement ti = th::elem("i*t", c);
  domains::ValueIdeal at_m = domains::dom_value_ideal(c.domain, gens, ti);
  CHECK_FALSE(at_m.is_unit_ideal(c.domain));
  // x(a) = ti lands in the value ideal, which equals m
  CHECK(domains::value_ideal_contains(c.domain, at_m, ti));
  for (const auto& g : at_m.generators)
    CHECK(domains::dom_ideal_member(c.domain, mgens, g).is_true());
}
