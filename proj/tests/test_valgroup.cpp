#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skolemlab/valgroup.hpp"

using namespace skolemlab;
using namespace skolemlab::valgroup;

namespace {
GroupDescriptor Z = GroupDescriptor::integers();
GroupDescriptor Q = GroupDescriptor::rationals();
GroupDescriptor Zhalf = GroupDescriptor::localized({2});
}  // namespace

TEST_CASE("vg_compare orders exact rationals") {
  CHECK(vg_compare({Rat(1, 2), Q}, {Rat(1), Q}) == Ordering::LT);
  CHECK(vg_compare({Rat(0), Z}, {Rat(0), Z}) == Ordering::EQ);
  CHECK(vg_compare({Rat(3, 2), Zhalf}, {Rat(1), Zhalf}) == Ordering::GT);
  CHECK(vg_compare({Rat(1, 2), Z, true}, {Rat(1), Z, true}) == Ordering::LT);
  CHECK_THROWS_AS(vg_compare({Rat(1), Z}, {Rat(1), Q}), GroupMismatch);
}

TEST_CASE("group invariant enforced at construction") {
  CHECK_THROWS_AS(GroupElement(Rat(1, 2), Z), GroupMismatch);
  CHECK_NOTHROW(GroupElement(Rat(1, 2), Z, true));
  CHECK_NOTHROW(GroupElement(Rat(3, 4), Zhalf));
  CHECK_THROWS_AS(GroupElement(Rat(1, 3), Zhalf), GroupMismatch);
}

TEST_CASE("vg_divisible") {
  CHECK_FALSE(vg_divisible({Rat(1), Z}, 2));
  CHECK(vg_divisible({Rat(4), Z}, 2));
  CHECK_FALSE(vg_divisible({Rat(1), Zhalf}, 3));
  CHECK(vg_divisible({Rat(1), Zhalf}, 8));
  CHECK(vg_divisible({Rat(1), Q}, 7));
}

TEST_CASE("pl_from_lines canonical envelopes") {
  PLFunction e = pl_from_lines({{0, Rat(1)}, {2, Rat(0)}});
  REQUIRE(e.pieces().size() == 2);
  CHECK(e.pieces()[0] == Line{2, Rat(0)});
  CHECK(e.pieces()[1] == Line{0, Rat(1)});
  REQUIRE(e.breakpoints().size() == 1);
  CHECK(e.breakpoints()[0] == Rat(1, 2));

  PLFunction c = pl_from_lines({{0, Rat(0)}});
  CHECK(c.pieces().size() == 1);
  CHECK(c.breakpoints().empty());
  CHECK(pl_eval(c, Rat(17, 3)) == 0);

  PLFunction d = pl_from_lines({{1, Rat(1)}, {1, Rat(3)}});
  REQUIRE(d.pieces().size() == 1);
  CHECK(d.pieces()[0] == Line{1, Rat(1)});
}

TEST_CASE("pl_eval matches the line minimum") {
  PLFunction e = pl_from_lines({{0, Rat(1)}, {2, Rat(0)}});
  CHECK(pl_eval(e, Rat(1)) == 1);
  CHECK(pl_eval(e, Rat(1, 2)) == 1);  // both segments agree at the breakpoint
  CHECK(e.pieces()[0].at(Rat(1, 2)) == e.pieces()[1].at(Rat(1, 2)));

  PLFunction num = pl_from_lines({{0, Rat(1)}, {4, Rat(1)}});
  CHECK(pl_eval(num, Rat(0)) == 1);
}

TEST_CASE("pl_sub piecewise difference") {
  PLFunction zero = pl_from_lines({{0, Rat(0)}});
  PLFunction diff = pl_sub(zero, zero);
  CHECK(pl_eval(diff, Rat(0)) == 0);
  CHECK(pl_eval(diff, Rat(-5)) == 0);
  CHECK(diff.pieces().size() == 1);

  // numerator and denominator envelopes of t(1+x^4)/((1+tx^2)(t+x^2))
  PLFunction num = pl_from_lines({{0, Rat(1)}, {4, Rat(1)}});
  PLFunction den = pl_from_lines({{0, Rat(1)}, {2, Rat(0)}, {4, Rat(1)}});
  PLFunction theta = pl_sub(num, den);
  CHECK(pl_eval(theta, Rat(0)) == 1);

  PLFunction sl = pl_sub(pl_from_lines({{1, Rat(0)}}), zero);
  CHECK(sl.pieces().size() == 1);
  CHECK(sl.pieces()[0] == Line{1, Rat(0)});
}

TEST_CASE("pl_kink_report") {
  PLFunction e = pl_from_lines({{0, Rat(1)}, {2, Rat(0)}});
  KinkReport k = pl_kink_report(e, Rat(1, 2));
  CHECK(k.left_slope == 2);
  CHECK(k.right_slope == 0);
  CHECK(k.value_at_beta == 1);

  PLFunction line = pl_from_lines({{3, Rat(-1)}});
  KinkReport k2 = pl_kink_report(line, Rat(7));
  CHECK(k2.left_slope == 3);
  CHECK(k2.right_slope == 3);
  CHECK(k2.value_at_beta == 20);

  // the contradiction profile: slope -1 into value 0 at beta = 1
  PLFunction forced = PLFunction::from_pieces({{-1, Rat(1)}, {0, Rat(0)}},
                                              {Rat(1)});
  KinkReport k3 = pl_kink_report(forced, Rat(1));
  CHECK(k3.left_slope == -1);
  CHECK(k3.right_slope >= 0);
  CHECK(k3.value_at_beta == 0);
}

TEST_CASE("envelope equals brute-force line minimum at random points") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> nd(1, 7), sd(0, 6);
  std::uniform_int_distribution<long> id(-20, 20), gd(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Line> lines;
    int n = nd(rng);
    for (int i = 0; i < n; ++i) lines.push_back({sd(rng), Rat(id(rng), 3)});
    PLFunction f = pl_from_lines(lines);
    CHECK(f.is_concave());
    for (int probe = 0; probe < 200; ++probe) {
      Rat g(gd(rng), 7);
      Rat best = lines[0].at(g);
      for (const auto& ln : lines) best = std::min(best, ln.at(g));
      REQUIRE(pl_eval(f, g) == best);
    }
  }
}

TEST_CASE("pl_sub is the pointwise difference") {
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<int> nd(1, 5), sd(0, 5);
  std::uniform_int_distribution<long> id(-12, 12), gd(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    auto mk = [&] {
      std::vector<Line> lines;
      int n = nd(rng);
      for (int i = 0; i < n; ++i) lines.push_back({sd(rng), Rat(id(rng), 2)});
      return pl_from_lines(lines);
    };
    PLFunction f = mk(), g = mk();
    PLFunction d = pl_sub(f, g);
    for (const Rat& b : d.breakpoints())
      REQUIRE(pl_eval(d, b) == pl_eval(f, b) - pl_eval(g, b));
    for (int probe = 0; probe < 100; ++probe) {
      Rat x(gd(rng), 5);
      REQUIRE(pl_eval(d, x) == pl_eval(f, x) - pl_eval(g, x));
    }
  }
}

TEST_CASE("vg_divisible agrees with brute-force denominator factoring") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<long> vd(-30, 30), nd(1, 12);
  auto brute = [](const Rat& q, const GroupDescriptor& g) {
    return g.contains(q);
  };
  for (int trial = 0; trial < 500; ++trial) {
    long n = nd(rng);
    for (const auto& g : {Z, Q, Zhalf, GroupDescriptor::localized({2, 3})}) {
      long num = vd(rng);
      Rat v(num);
      if (g.kind == GroupKind::LocalizedIntegers) v = Rat(num, 2);
      if (!g.contains(v)) continue;
      REQUIRE(vg_divisible({v, g}, n) == brute(v / n, g));
    }
  }
}
