#include "skolemlab/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>

namespace skolemlab::ratfunc {

using valued_field::kv_one;
using valued_field::kv_zero;

namespace {

using residue_field::FieldElement;
using residue_field::FieldPtr;
using residue_field::fld_upoly_divmod;
using residue_field::fld_upoly_gcd;
using UPoly = valued_field::ValuedElement::UPoly;

UPoly ustretch(const UPoly& p, long e, const FieldElement& zero) {
  if (p.empty() || e == 1) return p;
  UPoly r((p.size() - 1) * e + 1, zero);
  for (size_t i = 0; i < p.size(); ++i) r[i * e] = p[i];
  return r;
}

// Evaluate P at an/ad working entirely in F[u]: returns num/den of
// P(an/ad) * (common coefficient denominator), i.e. an unnormalized ratio.
// One ValuedElement is built from it afterwards, avoiding a normalizing
// gcd per Horner step.
struct URatio {
  UPoly num, den;
};
URatio eval_in_u(const KPtr& k, const Poly& p, const UPoly& an,
                 const UPoly& ad, long m) {
  FieldElement z = k->base->zero();
  UPoly D{k->base->one()};
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    UPoly cd = ustretch(c.den(), m / c.ramification(), z);
    D = poly::mul(fld_upoly_divmod(k->base, D, fld_upoly_gcd(k->base, D, cd))
                      .quot,
                  cd);
  }
  long d = poly::degree(p);
  if (d < 0) return {UPoly{}, D};
  auto cleared_coeff = [&](long i) -> UPoly {
    if (i >= static_cast<long>(p.size()) || p[i].is_zero()) return {};
    long e = m / p[i].ramification();
    UPoly cof =
        fld_upoly_divmod(k->base, D, ustretch(p[i].den(), e, z)).quot;
    return poly::mul(ustretch(p[i].num(), e, z), cof);
  };
  UPoly R = cleared_coeff(d), adp{k->base->one()};
  for (long i = d - 1; i >= 0; --i) {
    R = poly::mul(R, an);
    adp = poly::mul(adp, ad);
    UPoly Ni = cleared_coeff(i);
    if (!Ni.empty()) R = poly::add(R, poly::mul(Ni, adp));
  }
  return {R, poly::mul(D, adp)};  // adp = ad^d after the loop
}

// Clear denominators: lift P in K[x] to F[u][x] at ramification m.
std::vector<UPoly> cleared(const KPtr& k, const Poly& p, long m) {
  FieldElement z = k->base->zero();
  UPoly d{k->base->one()};
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    UPoly cd = ustretch(c.den(), m / c.ramification(), z);
    d = poly::mul(fld_upoly_divmod(k->base, d, fld_upoly_gcd(k->base, d, cd))
                      .quot,
                  cd);
  }
  std::vector<UPoly> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    long e = m / p[i].ramification();
    UPoly cof =
        fld_upoly_divmod(k->base, d, ustretch(p[i].den(), e, z)).quot;
    r[i] = poly::mul(ustretch(p[i].num(), e, z), cof);
  }
  while (!r.empty() && r.back().empty()) r.pop_back();
  return r;
}

UPoly content(const FieldPtr& F, const std::vector<UPoly>& p) {
  UPoly g;
  for (const auto& c : p) {
    g = fld_upoly_gcd(F, g, c);
    if (poly::degree(g) == 0) break;  // already a unit
  }
  return g;
}

void make_primitive(const FieldPtr& F, std::vector<UPoly>& p) {
  UPoly c = content(F, p);
  if (poly::degree(c) < 1) return;
  for (auto& q : p)
    if (!q.empty()) q = fld_upoly_divmod(F, q, c).quot;
}

// Monic rootless (hence irreducible) cubic over a finite field, used as a
// modulus for fast coprimality certificates. `which` picks among them.
UPoly find_cubic_modulus(const residue_field::FieldPtr& F, int which) {
  static std::map<std::pair<const void*, int>, UPoly> cache;
  auto key = std::make_pair(static_cast<const void*>(F.get()), which);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  long q = F->order();
  int found = 0;
  for (long c = 0; c < q * q * q; ++c) {
    UPoly m{F->from_index(c % q), F->from_index((c / q) % q),
            F->from_index(c / (q * q)), F->one()};
    bool rootless = true;
    for (long e = 0; e < q && rootless; ++e)
      if (poly::eval(m, F->from_index(e)).is_zero()) rootless = false;
    if (rootless && found++ == which) {
      cache.emplace(key, m);
      return m;
    }
  }
  throw RatFuncError("no rootless cubic modulus");
}

// Inverse of a nonzero residue mod an irreducible q, by extended Euclid.
UPoly mod_inv(const UPoly& a, const UPoly& q) {
  const FieldPtr& F = q.back().field();
  UPoly r0 = q, r1 = a, s0, s1{a.back() / a.back()};  // s1 = 1
  while (!r1.empty()) {
    auto dm = fld_upoly_divmod(F, r0, r1);
    UPoly s2 = poly::sub(s0, poly::mul(dm.quot, s1));
    r0 = std::move(r1);
    r1 = std::move(dm.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return poly::scale(s0, r0[0].inv());
}

// Euclid over (F[u]/(q))[x] on reduced coefficient vectors: true iff the
// gcd is constant. Leading coefficients must be nonzero residues.
bool euclid_coprime(std::vector<UPoly> a, std::vector<UPoly> b,
                    const UPoly& q) {
  const FieldPtr& F = q.back().field();
  if (a.size() < b.size()) std::swap(a, b);
  auto trimv = [](std::vector<UPoly>& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
  };
  while (!b.empty()) {
    UPoly linv = mod_inv(b.back(), q);
    while (a.size() >= b.size() && !a.empty()) {
      UPoly c = fld_upoly_divmod(F, poly::mul(a.back(), linv), q).rem;
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = fld_upoly_divmod(
            F, poly::sub(a[shift + i], poly::mul(c, b[i])), q).rem;
      trimv(a);
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

// Reduce a K[x] polynomial mod q directly from num/den coefficients at
// ramification m, inverting denominators mod q. nullopt when a denominator
// or the leading coefficient vanishes mod q (inconclusive for this q).
std::optional<std::vector<UPoly>> reduce_ratio_mod(const KPtr& k,
                                                   const Poly& P, long m,
                                                   const UPoly& q) {
  FieldElement z = k->base->zero();
  std::vector<UPoly> r(P.size());
  for (size_t i = 0; i < P.size(); ++i) {
    if (P[i].is_zero()) continue;
    long e = m / P[i].ramification();
    UPoly n = fld_upoly_divmod(k->base, ustretch(P[i].num(), e, z), q).rem;
    UPoly d = fld_upoly_divmod(k->base, ustretch(P[i].den(), e, z), q).rem;
    if (d.empty()) return std::nullopt;
    if (n.empty()) continue;
    r[i] = fld_upoly_divmod(k->base, poly::mul(n, mod_inv(d, q)), q).rem;
  }
  if (r.empty() || r.back().empty()) return std::nullopt;
  return r;
}

// True if some modulus / specialization proves na, nb coprime in K[x];
// works on the raw num/den coefficients, no denominator clearing.
bool coprime_by_specialization(const KPtr& k, const Poly& na, const Poly& nb,
                               long m) {
  if (k->base->finite()) {
    // several moduli: one spurious nonconstant gcd mod q must not force
    // the expensive pseudo-remainder fallback
    for (int which = 0; which < 6; ++which) {
      UPoly q = find_cubic_modulus(k->base, which);
      auto a = reduce_ratio_mod(k, na, m, q);
      auto b = reduce_ratio_mod(k, nb, m, q);
      if (a && b && euclid_coprime(std::move(*a), std::move(*b), q))
        return true;
    }
    return false;
  }
  FieldElement z = k->base->zero();
  FieldElement u0 = k->base->zero();
  for (long idx = 0; idx < 8; ++idx) {
    if (idx > 0) u0 = u0 + k->base->one();
    auto specialize =
        [&](const Poly& p) -> std::optional<poly::Coeffs<FieldElement>> {
      poly::Coeffs<FieldElement> r(p.size(), z);
      for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        long e = m / p[i].ramification();
        FieldElement d = poly::eval(ustretch(p[i].den(), e, z), u0);
        if (d.is_zero()) return std::nullopt;
        r[i] = poly::eval(ustretch(p[i].num(), e, z), u0) / d;
      }
      if (r.empty() || r.back().is_zero()) return std::nullopt;
      return r;
    };
    auto sa = specialize(na), sb = specialize(nb);
    if (!sa || !sb) continue;
    if (poly::degree(poly::gcd(*sa, *sb)) == 0) return true;
  }
  return false;
}

// gcd in K[x] via primitive-part pseudo-remainders in F[u][x]; avoids the
// coefficient blow-up of fraction-field Euclid.
Poly fast_gcd(const KPtr& k, const Poly& na, const Poly& nb) {
  long m = 1;
  for (const Poly* p : {&na, &nb})
    for (const auto& c : *p)
      if (!c.is_zero()) m = std::lcm(m, c.ramification());
  // cheap certificate first: works on the raw num/den coefficients and
  // skips the (often expensive) denominator clearing entirely
  if (coprime_by_specialization(k, na, nb, m)) return {kv_one(k)};
  std::vector<UPoly> a = cleared(k, na, m), b = cleared(k, nb, m);
  make_primitive(k->base, a);
  make_primitive(k->base, b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // pseudo-remainder of a by b, with per-step leading-coefficient cancel
    while (a.size() >= b.size() && !a.empty()) {
      UPoly la = a.back(), lb = b.back();
      UPoly cg = fld_upoly_gcd(k->base, la, lb);
      if (poly::degree(cg) > 0) {
        la = fld_upoly_divmod(k->base, la, cg).quot;
        lb = fld_upoly_divmod(k->base, lb, cg).quot;
      }
      size_t shift = a.size() - b.size();
      for (auto& c : a) c = poly::mul(c, lb);
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = poly::sub(a[shift + i], poly::mul(b[i], la));
      while (!a.empty() && a.back().empty()) a.pop_back();
    }
    make_primitive(k->base, a);
    std::swap(a, b);
  }
  make_primitive(k->base, a);
  Poly g;
  g.reserve(a.size());
  for (auto& c : a)
    g.emplace_back(k, std::move(c), UPoly{k->base->one()}, m);
  return g;
}

}  // namespace

RatFunc::RatFunc(KPtr k, Poly num, Poly den, long degree_cap)
    : k_(std::move(k)), num_(std::move(num)), den_(std::move(den)) {
  poly::trim(num_);
  poly::trim(den_);
  if (den_.empty()) throw ZeroDenominator();
  if (poly::degree(num_) > degree_cap || poly::degree(den_) > degree_cap)
    throw DegreeOverflow();
  if (num_.empty()) {
    den_ = {kv_one(k_)};
    return;
  }
  auto g = fast_gcd(k_, num_, den_);
  if (poly::degree(g) > 0) {
    num_ = poly::divmod(num_, g).quot;
    den_ = poly::divmod(den_, g).quot;
  }
  ValuedElement lead = den_.back();
  if (!(lead == kv_one(k_))) {
    num_ = poly::scale(num_, kv_one(k_) / lead);
    den_ = poly::scale(den_, kv_one(k_) / lead);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(k_, poly::add(poly::mul(num_, o.den_), poly::mul(o.num_, den_)),
                 poly::mul(den_, o.den_));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = poly::neg(r.num_);
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(k_, poly::mul(num_, o.num_), poly::mul(den_, o.den_));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw ZeroDenominator();
  return RatFunc(k_, poly::mul(num_, o.den_), poly::mul(den_, o.num_));
}

std::string RatFunc::to_string() const {
  auto poly_str = [](const Poly& p) {
    if (p.empty()) return std::string("0");
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string c = p[i].to_string();
      if (i == 0) {
        s += c;
        continue;
      }
      if (c != "1") s += "(" + c + ")*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s.empty() ? std::string("0") : s;
  };
  if (is_polynomial() && den_[0] == kv_one(k_)) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

RatFunc rf_normalize(const KPtr& k, Poly num, Poly den, long degree_cap) {
  return RatFunc(std::move(k), std::move(num), std::move(den), degree_cap);
}

RatFunc rf_constant(const KPtr& k, const ValuedElement& c) {
  return RatFunc(k, {c}, {kv_one(k)});
}

RatFunc rf_x(const KPtr& k) {
  return RatFunc(k, {kv_zero(k), kv_one(k)}, {kv_one(k)});
}

EvalResult rf_eval(const RatFunc& phi, const ValuedElement& a) {
  const KPtr& k = phi.field();
  long m = a.ramification();
  for (const Poly* p : {&phi.num(), &phi.den()})
    for (const auto& c : *p)
      if (!c.is_zero()) m = std::lcm(m, c.ramification());
  FieldElement z = k->base->zero();
  UPoly an = ustretch(a.num(), m / a.ramification(), z);
  UPoly ad = ustretch(a.den(), m / a.ramification(), z);
  URatio n = eval_in_u(k, phi.num(), an, ad, m);
  URatio d = eval_in_u(k, phi.den(), an, ad, m);
  if (poly::is_zero(d.num)) {
    // num and den are coprime, so both vanishing at a point of K cannot
    // occur unless num is zero too via the zero function
    if (poly::is_zero(n.num) && !phi.is_zero())
      throw RatFuncError("normalized num and den both vanish");
    return Pole{};
  }
  return ValuedElement(k, poly::mul(n.num, d.den),
                       poly::mul(n.den, d.num), m);
}

ValAt rf_val_at(const RatFunc& phi, const ValuedElement& a) {
  EvalResult r = rf_eval(phi, a);
  if (is_pole(r)) return ValAtPole{};
  Val v = value_of(r).valuation();
  if (!v) return std::monostate{};
  return *v;
}

RatFunc rf_compose(const RatFunc& outer, const RatFunc& inner,
                   long degree_cap) {
  const KPtr& k = outer.field();
  const Poly& p = inner.num();
  const Poly& q = inner.den();
  long m = std::max(poly::degree(outer.num()), poly::degree(outer.den()));
  if (m < 0) return outer;  // zero outer

  // f(p/q) * q^m = sum f_i p^i q^(m-i)
  auto substituted = [&](const Poly& f) {
    Poly acc;
    Poly p_pow{kv_one(k)};
    std::vector<Poly> ppows;
    for (long i = 0; i <= m; ++i) {
      ppows.push_back(p_pow);
      if (i < m) p_pow = poly::mul(p_pow, p);
    }
    Poly q_pow{kv_one(k)};
    for (long i = m; i >= 0; --i) {
      if (i < static_cast<long>(f.size()) && !f[i].is_zero()) {
        Poly term = poly::mul(ppows[i], q_pow);
        acc = poly::add(acc, poly::scale(term, f[i]));
      }
      if (i > 0) q_pow = poly::mul(q_pow, q);
    }
    if (poly::degree(acc) > degree_cap) throw DegreeOverflow();
    return acc;
  };

  Poly new_num = substituted(outer.num());
  Poly new_den = substituted(outer.den());
  if (poly::is_zero(new_den)) throw UndefinedComposite();
  return RatFunc(k, std::move(new_num), std::move(new_den), degree_cap);
}

}  // namespace skolemlab::ratfunc
