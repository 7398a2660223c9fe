#include "skolemlab/newton.hpp"

#include <algorithm>

namespace skolemlab::newton {

using valgroup::Line;
using valued_field::kv_make;

static ValuedElement pow_t(const ValuedElement& t, long e) {
  ValuedElement r = valued_field::kv_one(t.field());
  for (long i = 0; i < e; ++i) r = r * t;
  return r;
}

PLFunction nv_minval_poly(const Poly& f) {
  std::vector<Line> lines;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    lines.push_back({static_cast<long>(i), *f[i].valuation()});
  }
  if (lines.empty()) throw ZeroPolynomial();
  return valgroup::pl_from_lines(lines);
}

PLFunction nv_minval_rf(const RatFunc& phi) {
  if (phi.is_zero()) throw NewtonError("minval of the zero function");
  return valgroup::pl_sub(nv_minval_poly(phi.num()),
                          nv_minval_poly(phi.den()));
}

LocalPolyResult nv_local_poly(const Poly& f, const ValuedElement& t) {
  if (poly::is_zero(f)) throw ZeroPolynomial();
  if (t.is_zero()) throw NewtonError("local polynomial at t = 0");
  Rat vt = *t.valuation();
  PLFunction env = nv_minval_poly(f);
  Rat m = env.eval(vt);

  long d = -1;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (*f[i].valuation() + Rat(static_cast<long>(i)) * vt == m)
      d = static_cast<long>(i);
  }

  // coefficients of f(t x) / (a_d t^d) have valuation >= 0; residues vanish
  // off the argmin set
  ValuedElement scale = f[d] * pow_t(t, d);
  LocalPolyResult out;
  out.d_index = d;
  out.minval_at = m;
  for (long i = 0; i <= d; ++i) {
    if (i >= static_cast<long>(f.size()) || f[i].is_zero()) {
      out.residue_poly.push_back(t.field()->base->zero());
      continue;
    }
    ValuedElement c = f[i] * pow_t(t, i) / scale;
    out.residue_poly.push_back(c.residue());
  }
  return out;
}

ExactnessReport nv_exactness(const Poly& f, const ValuedElement& a) {
  if (poly::is_zero(f)) throw ZeroPolynomial();
  if (a.is_zero()) throw NewtonError("exactness at a = 0");
  const KPtr& k = a.field();
  Rat va = *a.valuation();

  ExactnessReport rep;
  rep.predicted = nv_minval_poly(f).eval(va);
  ValuedElement fa = poly::eval(f, a);
  rep.actual = fa.valuation();
  rep.exact = rep.actual && *rep.actual == rep.predicted;

  // Monomial convention: the witness compares against loc at the plain
  // monomial of valuation v(a); unit part = a / monomial.
  ValuedElement mono = kv_make(k, va, k->base->one());
  FieldElement unit_res = (a / mono).residue();
  LocalPolyResult loc = nv_local_poly(f, mono);
  rep.witness_root =
      residue_field::fld_poly_eval(loc.residue_poly, unit_res).is_zero();
  return rep;
}

ProfileOutcome nv_forced_profile_check(
    const std::vector<std::pair<Rat, Rat>>& constraints, const Rat& beta) {
  if (constraints.empty())
    throw InconsistentConstraints("no constraints given");

  std::vector<std::pair<Rat, Rat>> left, right;
  std::optional<Rat> at_beta;
  for (const auto& c : constraints) {
    if (c.first < beta) left.push_back(c);
    else if (c.first > beta) right.push_back(c);
    else {
      if (at_beta && *at_beta != c.second)
        throw InconsistentConstraints("conflicting values at beta");
      at_beta = c.second;
    }
  }
  auto fit_line = [](const std::vector<std::pair<Rat, Rat>>& pts)
      -> std::optional<Line> {
    if (pts.size() < 2) return std::nullopt;
    Rat dg = pts[1].first - pts[0].first;
    Rat dv = pts[1].second - pts[0].second;
    Rat slope_q = dv / dg;
    if (denominator(slope_q) != 1)
      throw InconsistentConstraints("non-integer slope through constraints");
    long slope = static_cast<long>(numerator(slope_q));
    Rat intercept = pts[0].second - slope_q * pts[0].first;
    for (const auto& p : pts)
      if (Rat(slope) * p.first + intercept != p.second)
        throw InconsistentConstraints("constraints not collinear");
    return Line{slope, intercept};
  };

  std::optional<Line> left_line = fit_line(left);
  std::optional<Line> right_line = fit_line(right);
  if (!left_line && left.size() == 1 && at_beta) {
    // two points pin the left line: the single constraint plus the beta pin
    std::vector<std::pair<Rat, Rat>> pts = {left[0], {beta, *at_beta}};
    left_line = fit_line(pts);
  }
  if (!left_line)
    throw InconsistentConstraints("not enough constraints left of beta");

  Rat value_at_beta = at_beta ? *at_beta : left_line->at(beta);
  if (at_beta && left_line->at(beta) != *at_beta)
    throw InconsistentConstraints("left line does not meet the beta value");

  if (left_line->slope == -1 && value_at_beta == 0 &&
      (!right_line || right_line->slope >= 0)) {
    return ContradictionPattern{-1, 0};
  }

  if (right_line) {
    if (right_line->at(beta) != value_at_beta)
      throw InconsistentConstraints("right line discontinuous at beta");
    return PLFunction::from_pieces({*left_line, *right_line}, {beta});
  }
  return PLFunction::from_pieces({*left_line}, {});
}

}  // namespace skolemlab::newton
