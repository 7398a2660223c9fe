#include "skolemlab/skolem.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace skolemlab::skolem {

using domains::dom_contains;
using domains::dom_ideal_member;
using domains::dom_value_ideal;
using domains::value_ideal_contains;
using ratfunc::is_pole;
using ratfunc::Poly;
using ratfunc::rf_constant;
using ratfunc::rf_eval;
using ratfunc::rf_normalize;
using ratfunc::rf_val_at;
using ratfunc::rf_x;
using ratfunc::ValAt;
using ratfunc::val_is_infinite;
using ratfunc::val_is_pole;
using ratfunc::val_value;
using ratfunc::value_of;
using residue_field::FieldElement;
using residue_field::FieldPtr;
using valgroup::GroupDescriptor;
using valgroup::GroupKind;
using valgroup::PLFunction;
using valued_field::kv_from_residue;
using valued_field::kv_make;
using valued_field::kv_one;
using valued_field::kv_pick_valuation_in_range;
using valued_field::kv_sample;
using valued_field::kv_uniformizer;
using valued_field::kv_zero;

namespace {

FieldElement random_residue(const FieldPtr& F, std::mt19937_64& rng,
                            bool nonzero) {
  for (int tries = 0; tries < 256; ++tries) {
    FieldElement r;
    if (F->finite()) {
      std::uniform_int_distribution<long> d(nonzero ? 1 : 0, F->order() - 1);
      r = F->from_index(d(rng));
    } else {
      std::uniform_int_distribution<long> d(-6, 6);
      std::vector<Rat> coords(F->degree());
      for (auto& x : coords) x = Rat(d(rng));
      r = F->from_coords(std::move(coords));
    }
    if (!nonzero || !r.is_zero()) return r;
  }
  return F->one();
}

FieldElement random_base_unit(const FieldPtr& F, std::mt19937_64& rng) {
  if (F->finite()) {
    std::uniform_int_distribution<long> d(1, F->p() - 1);
    return F->from_base(Rat(d(rng)));
  }
  std::uniform_int_distribution<long> d(1, 12);
  std::uniform_int_distribution<int> sgn(0, 1);
  Rat q(d(rng), d(rng));
  return F->from_base(sgn(rng) ? q : -q);
}

// Random element of the domain with the given valuation: for PVDs a unit
// must have its residue in the coefficient subfield.
ValuedElement sample_domain_point(const DomainDescriptor& D,
                                  std::mt19937_64& rng, const Rat& gamma) {
  const KPtr& k = D.K;
  if (gamma < 0) throw SkolemError("domain sample needs valuation >= 0");
  if (D.kind == domains::DomainKind::Valuation || gamma > 0) {
    valued_field::SampleConstraints c;
    c.valuation = gamma;
    return kv_sample(k, rng, c);
  }
  ValuedElement x = kv_from_residue(k, random_base_unit(k->base, rng));
  std::uniform_int_distribution<int> extra(0, 2);
  int n = extra(rng);
  for (int i = 1; i <= n; ++i) {
    FieldElement c = random_residue(k->base, rng, false);
    if (!c.is_zero()) x = x + kv_make(k, Rat(i), c);
  }
  return x;
}

ValuedElement pow_elem(const ValuedElement& b, long e) {
  ValuedElement r = kv_one(b.field());
  for (long i = 0; i < e; ++i) r = r * b;
  return r;
}

RatFunc rf_pow(const RatFunc& b, long e) {
  RatFunc r = rf_constant(b.field(), kv_one(b.field()));
  for (long i = 0; i < e; ++i) r = r * b;
  return r;
}

}  // namespace

SampleSet make_sample_set(const Scene& sc, std::mt19937_64& rng, size_t count,
                          const Rat& lo_val, const Rat& hi_val,
                          SampleIntent intent, bool domain_only) {
  SampleSet set;
  set.intent = intent;
  set.label = scene::scene_digest(sc);
  std::set<std::string> seen;
  size_t guard = 0;
  while (set.points.size() < count && guard++ < count * 64 + 256) {
    Rat g = kv_pick_valuation_in_range(sc.K->group, rng, lo_val, hi_val,
                                       sc.sample_den_bound);
    ValuedElement x;
    if (domain_only) {
      if (g < 0) continue;
      x = sample_domain_point(sc.domain, rng, g);
    } else {
      valued_field::SampleConstraints c;
      c.valuation = g;
      x = kv_sample(sc.K, rng, c);
    }
    if (seen.insert(x.to_string()).second) set.points.push_back(x);
  }
  if (set.points.size() < count)
    throw SkolemError("could not draw enough distinct sample points");
  return set;
}

SkReport sk_member(const RatFunc& psi, const std::vector<RatFunc>& gens,
                   const SampleSet& E, const DomainDescriptor& D) {
  SkReport rep;
  bool any_fail = false;
  for (size_t i = 0; i < E.points.size(); ++i) {
    const ValuedElement& a = E.points[i];
    ValueIdeal I = dom_value_ideal(D, gens, a);
    PointVerdict pv{a, I, rf_val_at(psi, a), false};
    if (val_is_pole(pv.psi_value)) {
      rep.psi_poles.push_back(i);
      any_fail = true;
    } else {
      ValuedElement val = value_of(rf_eval(psi, a));
      pv.pass = dom_contains(D, val) && value_ideal_contains(D, I, val);
      if (!pv.pass) any_fail = true;
    }
    rep.per_point.push_back(std::move(pv));
  }
  if (any_fail) {
    rep.member = SkReport::Member::False;
  } else if (E.intent == SampleIntent::FiniteExact) {
    rep.member = SkReport::Member::True;
  } else {
    rep.member = SkReport::Member::Inconclusive;
    rep.note =
        "all sampled points pass; evidence only, the intended set was "
        "sampled rather than enumerated";
  }
  return rep;
}

RatFunc construct_theta(const DomainDescriptor& D) {
  if (!D.m_principal_in_V()) throw domains::MNotPrincipal();
  const KPtr& k = D.K;
  ValuedElement t = kv_uniformizer(k);
  ValuedElement one = kv_one(k);
  ValuedElement z = kv_zero(k);
  Poly num{t, z, z, z, t};                        // t(1 + x^4)
  Poly den{t, z, one + t * t, z, t};              // (1 + t x^2)(t + x^2)
  RatFunc theta = rf_normalize(k, num, den);

  ValuedElement extra_unit =
      k->base->finite()
          ? kv_from_residue(k, k->base->from_index(k->base->order() - 1))
          : kv_from_residue(k, k->base->from_base(Rat(2)));
  std::vector<ValuedElement> grid{
      kv_zero(k), t,   t * t,   one / t,    (one + t) / (t * t),
      t + t * t,  one, one + t, extra_unit};
  for (const auto& a : grid) {
    auto r = rf_eval(theta, a);
    if (is_pole(r)) throw SkolemError("theta self-check hit a pole");
    const ValuedElement& v = value_of(r);
    bool unit_arg = !a.is_zero() && *a.valuation() == 0;
    if (unit_arg) {
      auto vv = v.valuation();
      if (!vv || !(*vv > 0))
        throw SkolemError("theta self-check: unit argument not sent into m");
    } else {
      auto vv = v.valuation();
      if (!vv || *vv != 0 || !(v.residue() == k->base->one()))
        throw SkolemError("theta self-check: argument not sent into 1 + m");
    }
  }
  return theta;
}

RatFunc construct_rho(const RatFunc& phi1, const RatFunc& phi2,
                      const DomainDescriptor& D) {
  if (phi2.is_zero()) throw ZeroSecond();
  RatFunc theta = construct_theta(D);
  return phi1 + ratfunc::rf_compose(theta, phi1 / phi2) * phi2;
}

namespace {

struct LemZParams {
  int branch = 1;                        // 1 = non-divisible Gamma, 2 = residue field
  Rat va, vb;
  long n = 0;
  std::vector<FieldElement> f;           // branch 2 only
};

LemZParams lemz_params(const Rat& eps, const Rat& delta,
                       const DomainDescriptor& D) {
  const GroupDescriptor& G = D.K->group;
  LemZParams p;
  if (G.kind != GroupKind::Rationals) {
    long m = 0;
    for (long cand = 2; cand <= 4096; ++cand)
      if (!G.contains(Rat(1, cand))) {
        m = cand;
        break;
      }
    if (m == 0)
      throw valued_field::Unsatisfiable("no witness of non-divisibility");
    // alpha = 1, so alpha/m is outside the group
    if (G.contains(eps / m)) {
      p.vb = Rat(1) + Rat(m) * delta;
      p.va = p.vb + eps;
      p.n = m;
    } else {
      p.vb = eps + Rat(2 * m) * delta;
      p.va = 2 * eps + Rat(2 * m) * delta;
      p.n = 2 * m;
    }
    return p;
  }
  p.branch = 2;
  p.f = residue_field::fld_find_rootless_monic(D.K->base, 4);
  p.n = static_cast<long>(p.f.size()) - 1;
  p.vb = delta + Rat(1, 2);
  p.va = p.vb + eps / p.n;
  return p;
}

}  // namespace

LemZResult construct_lemz(const Rat& eps, const Rat& delta,
                          const ValuedElement& c, const DomainDescriptor& D) {
  if (D.kind != domains::DomainKind::Valuation)
    throw SceneMismatch("lemz applies to valuation scenes");
  const KPtr& k = D.K;
  const GroupDescriptor& G = k->group;
  if (!(eps > 0) || !G.contains(eps) || !(delta > 0) || !G.contains(delta))
    throw SkolemError("eps and delta must be strictly positive in Gamma");

  LemZParams p = lemz_params(eps, delta, D);
  FieldElement one_r = k->base->one();
  ValuedElement a = kv_make(k, p.va, one_r);
  ValuedElement b = kv_make(k, p.vb, one_r);

  LemZResult out;
  RatFunc xc = rf_x(k) - rf_constant(k, c);
  if (p.branch == 1) {
    RatFunc pw = rf_pow(xc, p.n);
    out.phi = (pw + rf_constant(k, a)) / (pw + rf_constant(k, b));
    out.gamma = p.vb / p.n;
  } else {
    RatFunc num = rf_constant(k, kv_zero(k));
    RatFunc den = num;
    RatFunc xcp = rf_constant(k, kv_one(k));
    for (long j = 0; j <= p.n; ++j) {
      ValuedElement fj = kv_from_residue(k, p.f[j]);
      num = num + rf_constant(k, fj * pow_elem(a, p.n - j)) * xcp;
      den = den + rf_constant(k, fj * pow_elem(b, p.n - j)) * xcp;
      if (j < p.n) xcp = xcp * xc;
    }
    out.phi = num / den;
    out.gamma = p.vb;
  }
  if (!(out.gamma > delta))
    throw SkolemError("lemz: gamma did not exceed delta");
  lemz_verify(out, eps, delta, c, D);
  return out;
}

void lemz_verify(const LemZResult& r, const Rat& eps, const Rat& delta,
                 const ValuedElement& c, const DomainDescriptor& D) {
  const KPtr& k = D.K;
  const GroupDescriptor& G = k->group;
  LemZParams p = lemz_params(eps, delta, D);

  // expected profile as a function of w = v(d - c), from the case tables
  auto expected = [&](const Rat& w) -> Rat {
    if (p.branch == 1) {
      Rat nw = Rat(p.n) * w;
      if (nw < p.vb) return Rat(0);
      if (nw < p.va) return nw - p.vb;
      return eps;
    }
    if (w < p.vb) return Rat(0);
    if (w <= p.va) return Rat(p.n) * (w - p.vb);
    return eps;
  };

  std::set<Rat> grid;
  Int base_i = rat_floor(r.gamma);
  for (long i = -18; i <= 18; ++i) {
    Rat cand = Rat(base_i) + Rat(i);
    if (G.contains(cand)) grid.insert(cand);
  }
  long den = static_cast<long>(denominator(r.gamma));
  for (long i = -8; i <= 8; ++i) {
    Rat cand = r.gamma + Rat(i, 2 * den);
    if (G.contains(cand)) grid.insert(cand);
  }
  if (grid.size() < 30) throw SkolemError("lemz grid too small");

  std::vector<FieldElement> units{k->base->one()};
  if (k->base->finite()) {
    units.push_back(k->base->from_index(k->base->order() - 1));
  } else {
    units.push_back(k->base->from_base(Rat(2)));
    if (k->base->degree() >= 2) units.push_back(k->base->generator());
  }

  auto check_point = [&](const ValuedElement& d, const Rat& w) {
    ValAt got = rf_val_at(r.phi, d);
    if (val_is_pole(got) || val_is_infinite(got))
      throw SkolemError("lemz: degenerate value at a grid point");
    const Rat& v = val_value(got);
    if (v != expected(w))
      throw SkolemError("lemz: profile mismatch at v(d-c) = " +
                        rat_to_string(w) + ": got " + rat_to_string(v));
    if (!(v <= eps)) throw SkolemError("lemz: property i violated");
    if ((v > 0) != (w > r.gamma))
      throw SkolemError("lemz: property ii violated at v(d-c) = " +
                        rat_to_string(w));
  };

  for (const Rat& w : grid)
    for (const auto& u : units) check_point(c + kv_make(k, w, u), w);
  // a perturbed point away from pure monomial offsets
  Rat w0 = *grid.begin();
  ValuedElement d = c + kv_make(k, w0, k->base->one()) +
                    kv_make(k, w0 + 1, k->base->one());
  check_point(d, w0);

  ValAt at_c = rf_val_at(r.phi, c);
  if (val_is_pole(at_c) || val_is_infinite(at_c) || val_value(at_c) != eps)
    throw SkolemError("lemz: property iii violated at c");
}

namespace {

enum class BallResult { Certified, Counterexample, Unknown };

struct Certifier {
  const RatFunc& phi;
  const KPtr& k;
  int depth_limit;
  Certificate cert;

  BallResult explore(BranchNode& node, const ValuedElement& center, long kk,
                     int depth) {
    node.center = center;
    node.level = kk;
    cert.depth_used = std::max(cert.depth_used, depth);

    auto at_center = rf_eval(phi, center);
    if (is_pole(at_center)) return fail(node, center);
    {
      auto v = value_of(at_center).valuation();
      if (v && *v < 0) return fail(node, center);
    }

    ValuedElement tk = kv_make(k, Rat(kk), k->base->one());
    Poly fs = poly::compose_affine(phi.num(), center, tk);
    Poly gs = poly::compose_affine(phi.den(), center, tk);
    RatFunc shifted = rf_normalize(k, fs, gs);

    PLFunction env_f = newton::nv_minval_poly(shifted.num());
    PLFunction env_g = newton::nv_minval_poly(shifted.den());
    PLFunction diff = valgroup::pl_sub(env_f, env_g);

    // integer levels where the envelope difference dips below zero
    std::set<long> suspects{0};
    for (const Rat& b : diff.breakpoints()) {
      long fl = static_cast<long>(rat_floor(b));
      for (long cand : {fl, fl + 1, fl + 2})
        if (cand >= 0) suspects.insert(cand);
    }
    const valgroup::Line& last = diff.pieces().back();
    if (last.slope < 0) {
      // the final piece is eventually negative; find its first bad integer
      long start = 0;
      if (!diff.breakpoints().empty())
        start = std::max(start,
                         static_cast<long>(rat_ceil(diff.breakpoints().back())));
      Rat cross = -last.intercept / Rat(last.slope);
      long g0 = static_cast<long>(rat_floor(cross)) + 1;
      suspects.insert(std::max(start, std::max(g0, 0L)));
    }
    long q = k->base->order();
    for (long g : suspects) {
      if (!(diff.eval(Rat(g)) < 0)) continue;
      for (long ri = 1; ri < q; ++ri) {
        ValuedElement y = kv_make(k, Rat(g), k->base->from_index(ri));
        ValAt v = rf_val_at(shifted, y);
        if (val_is_pole(v) || (!val_is_infinite(v) && val_value(v) < 0))
          return fail(node, center + tk * y);
      }
      // every residue at this level roots a loc polynomial; the branches
      // below cover the whole level
    }

    long levels = 0;
    for (const Rat& b : env_f.breakpoints())
      levels = std::max(levels, static_cast<long>(rat_ceil(b)));
    for (const Rat& b : env_g.breakpoints())
      levels = std::max(levels, static_cast<long>(rat_ceil(b)));

    std::vector<std::pair<long, long>> branch_at;  // (level, residue index)
    for (long j = 0; j <= levels; ++j) {
      ValuedElement tj = kv_make(k, Rat(j), k->base->one());
      auto loc_f = newton::nv_local_poly(shifted.num(), tj);
      auto loc_g = newton::nv_local_poly(shifted.den(), tj);
      for (long ri = 1; ri < q; ++ri) {
        FieldElement u = k->base->from_index(ri);
        if (residue_field::fld_poly_eval(loc_f.residue_poly, u).is_zero() ||
            residue_field::fld_poly_eval(loc_g.residue_poly, u).is_zero())
          branch_at.emplace_back(j, ri);
      }
    }

    if (branch_at.empty()) {
      node.status = "leaf";
      return BallResult::Certified;
    }
    if (depth == depth_limit) {
      node.status = "unknown";
      return BallResult::Unknown;
    }
    node.status = "branch";
    bool unknown = false;
    for (auto [j, ri] : branch_at) {
      BranchNode child;
      ValuedElement cc =
          center + kv_make(k, Rat(kk + j), k->base->from_index(ri));
      BallResult res = explore(child, cc, kk + j + 1, depth + 1);
      node.children.push_back(std::move(child));
      if (res == BallResult::Counterexample) return BallResult::Counterexample;
      if (res == BallResult::Unknown) unknown = true;
    }
    return unknown ? BallResult::Unknown : BallResult::Certified;
  }

  BallResult fail(BranchNode& node, const ValuedElement& point) {
    node.status = "counterexample";
    cert.counterexample = point;
    return BallResult::Counterexample;
  }
};

}  // namespace

Certificate certify_int_valued(const RatFunc& phi, const DomainDescriptor& V,
                               int depth_limit) {
  if (V.kind != domains::DomainKind::Valuation)
    throw UnsupportedScene("certification runs over valuation domains");
  const KPtr& k = V.K;

  if (!k->base->finite() || k->group.kind != GroupKind::Integers) {
    // sampled evidence only: no exhaustive residue enumeration available
    Certificate cert;
    cert.tree.center = kv_zero(k);
    cert.tree.status = "unknown";
    std::mt19937_64 rng(0x5eedULL);
    for (int i = 0; i < 500; ++i) {
      // points must lie in V: valuations in [0, 6)
      Rat g = kv_pick_valuation_in_range(k->group, rng, Rat(-1, 1000), Rat(6));
      valued_field::SampleConstraints c;
      c.valuation = g;
      ValuedElement a = kv_sample(k, rng, c);
      ValAt v = rf_val_at(phi, a);
      if (val_is_pole(v) || (!val_is_infinite(v) && val_value(v) < 0)) {
        cert.outcome = Certificate::Outcome::Counterexample;
        cert.counterexample = a;
        cert.tree.status = "counterexample";
        return cert;
      }
    }
    cert.outcome = Certificate::Outcome::Unknown;
    return cert;
  }

  Certifier c{phi, k, depth_limit, {}};
  if (phi.is_zero()) {
    c.cert.outcome = Certificate::Outcome::Certified;
    c.cert.tree = {kv_zero(k), 0, "leaf", {}};
    return c.cert;
  }
  BallResult res = c.explore(c.cert.tree, kv_zero(k), 0, 0);
  switch (res) {
    case BallResult::Certified:
      c.cert.outcome = Certificate::Outcome::Certified;
      break;
    case BallResult::Counterexample:
      c.cert.outcome = Certificate::Outcome::Counterexample;
      break;
    case BallResult::Unknown:
      c.cert.outcome = Certificate::Outcome::Unknown;
      break;
  }
  return c.cert;
}

SuiteReport suite_vx2t2(const Scene& sc, size_t n_samples, uint64_t seed,
                        const std::vector<RatFunc>* gens_override) {
  if (sc.is_pvd()) throw SceneMismatch("vx2t2 needs a valuation scene");
  if (sc.domain.m_principal_in_V())
    throw SceneMismatch("vx2t2 needs m non-principal in V");
  if (sc.K->group.kind == GroupKind::Rationals)
    throw SceneMismatch("vx2t2 needs a non-divisible value group");

  const KPtr& k = sc.K;
  std::mt19937_64 rng(seed);
  ValuedElement t = kv_uniformizer(k);
  RatFunc x = rf_x(k);
  std::vector<RatFunc> gens =
      gens_override ? *gens_override
                    : std::vector<RatFunc>{x * x, rf_constant(k, t * t)};

  SuiteReport rep;
  rep.suite = "vx2t2";

  {
    // case table for (x^2, t^2): value ideal (d^2) up to v(d) = v(t), then
    // (t^2); dyadic grid straddling v(t) = 1
    std::string detail;
    bool ok = true;
    for (long j = 0; j <= 16; ++j) {
      Rat g(j, 8);
      ValuedElement d = kv_make(k, g, k->base->one());
      ValueIdeal I = dom_value_ideal(sc.domain, gens, d);
      Rat expect = g <= 1 ? 2 * g : Rat(2);
      if (!I.gamma || *I.gamma != expect) {
        ok = false;
        detail = "mismatch at v(d) = " + rat_to_string(g) + ": expected " +
                 rat_to_string(expect) + ", got " +
                 (I.gamma ? rat_to_string(*I.gamma) : std::string("zero"));
        break;
      }
    }
    rep.checks.push_back({"value-ideal-table",
                          ok ? CheckStatus::Pass : CheckStatus::Fail,
                          ok ? "17 grid points across v(t)" : detail});
  }

  {
    RatFunc psi = rf_constant(k, t) * x;
    SampleSet E = make_sample_set(sc, rng, n_samples, Rat(-1, 8), Rat(3),
                                  SampleIntent::SampleOfV, true);
    SkReport sk = sk_member(psi, gens, E, sc.domain);
    bool ok = sk.member != SkReport::Member::False;
    rep.checks.push_back(
        {"sk-tx-membership", ok ? CheckStatus::Evidence : CheckStatus::Fail,
         ok ? std::to_string(E.points.size()) + " sampled points pass; " +
                  sk.note
            : "a sampled point failed membership"});
  }

  {
    // harvest minval constraints from v(td) = v(phi(d) d^2) at v(d) < v(t),
    // plus the pinned zero at beta = v(t)
    std::vector<std::pair<Rat, Rat>> constraints;
    for (long j = 0; j < 8; ++j) {
      Rat g(j, 8);
      constraints.emplace_back(g, Rat(1) - g);
    }
    constraints.emplace_back(Rat(1), Rat(0));
    auto outcome = newton::nv_forced_profile_check(constraints, Rat(1));
    bool ok = std::holds_alternative<newton::ContradictionPattern>(outcome);
    std::string detail = "no contradiction detected";
    if (ok) {
      auto pat = std::get<newton::ContradictionPattern>(outcome);
      detail = "left slope " + std::to_string(pat.left_slope) +
               ", forced right slope >= " +
               std::to_string(pat.right_slope_min);
    }
    rep.checks.push_back({"forced-profile",
                          ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
  return rep;
}

SuiteReport suite_pvd_x2m(const Scene& sc, size_t n_samples, uint64_t seed) {
  if (!sc.is_pvd()) throw SceneMismatch("pvd-x2m needs a PVD scene");
  if (sc.pvd_basis.empty())
    throw SceneMismatch("pvd-x2m needs a residue basis in the scene");

  const KPtr& k = sc.K;
  const DomainDescriptor& D = sc.domain;
  std::mt19937_64 rng(seed);
  std::vector<ValuedElement> mgens =
      domains::pvd_m_generators(D, sc.pvd_basis);

  SuiteReport rep;
  rep.suite = "pvd-x2m";

  {
    // membership probes for m = (t b_1, ..., t b_n)D
    bool ok = true;
    std::string detail;
    size_t pos = std::max<size_t>(n_samples, 8), neg = 50;
    for (size_t i = 0; i < pos && ok; ++i) {
      ValuedElement c = kv_zero(k);
      for (const auto& g : mgens) {
        Rat gv = kv_pick_valuation_in_range(k->group, rng, Rat(-1, 8), Rat(3));
        c = c + sample_domain_point(D, rng, gv < 0 ? Rat(0) : gv) * g;
      }
      auto res = dom_ideal_member(D, mgens, c);
      if (!res.is_true()) {
        ok = false;
        detail = "a combination of the generators failed membership";
        break;
      }
      ValuedElement rebuilt = kv_zero(k);
      for (size_t j = 0; j < mgens.size(); ++j)
        rebuilt = rebuilt + res.certificate[j] * mgens[j];
      if (!(rebuilt == c)) {
        ok = false;
        detail = "membership certificate failed to rebuild the element";
      }
    }
    for (size_t i = 0; i < neg && ok; ++i) {
      ValuedElement u = sample_domain_point(D, rng, Rat(0));
      if (dom_ideal_member(D, mgens, u).is_true()) {
        ok = false;
        detail = "a unit of D tested inside m";
      }
    }
    rep.checks.push_back({"m-generators",
                          ok ? CheckStatus::Pass : CheckStatus::Fail,
                          ok ? std::to_string(pos) + " member and " +
                                   std::to_string(neg) + " non-member probes"
                             : detail});
  }

  RatFunc x = rf_x(k);
  std::vector<RatFunc> gens{x * x};
  for (const auto& g : mgens) gens.push_back(rf_constant(k, g));

  {
    // value ideal of (x^2, m) at a: the unit ideal for units of D, m for
    // elements of m
    bool ok = true;
    std::string detail;
    size_t per_case = std::max<size_t>(n_samples / 4, 8);
    for (size_t i = 0; i < per_case && ok; ++i) {
      ValuedElement a = sample_domain_point(D, rng, Rat(0));
      ValueIdeal I = dom_value_ideal(D, gens, a);
      if (!I.is_unit_ideal(D)) {
        ok = false;
        detail = "value ideal at a unit of D is not the unit ideal";
      }
    }
    for (size_t i = 0; i < per_case && ok; ++i) {
      Rat gv = kv_pick_valuation_in_range(k->group, rng, Rat(1, 2), Rat(4));
      ValuedElement a = sample_domain_point(D, rng, gv);
      ValueIdeal I = dom_value_ideal(D, gens, a);
      for (const auto& g : mgens)
        if (!value_ideal_contains(D, I, g)) {
          ok = false;
          detail = "value ideal at an m-element lost a generator of m";
        }
      for (const auto& g : I.generators)
        if (!dom_ideal_member(D, mgens, g).is_true()) {
          ok = false;
          detail = "value ideal at an m-element exceeds m";
        }
    }
    rep.checks.push_back({"value-ideal-cases",
                          ok ? CheckStatus::Pass : CheckStatus::Fail,
                          ok ? std::to_string(2 * per_case) + " samples"
                             : detail});
  }

  {
    SampleSet E = make_sample_set(sc, rng, n_samples, Rat(-1, 8), Rat(3),
                                  SampleIntent::SampleOfV, true);
    SkReport sk = sk_member(x, gens, E, D);
    bool ok = sk.member != SkReport::Member::False;
    rep.checks.push_back(
        {"sk-x-membership", ok ? CheckStatus::Evidence : CheckStatus::Fail,
         ok ? std::to_string(E.points.size()) + " sampled points pass; " +
                  sk.note
            : "a sampled point failed membership"});
  }

  rep.checks.push_back(
      {"x-not-in-ideal", CheckStatus::TheoremLevel,
       "non-membership of x in (x^2, m) is theorem-level; not "
       "machine-checked here"});
  return rep;
}

}  // namespace skolemlab::skolem
