#include "skolemlab/valued_field.hpp"

#include <algorithm>
#include <numeric>

namespace skolemlab::valued_field {

namespace {

long upoly_order(const ValuedElement::UPoly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) return static_cast<long>(i);
  return -1;  // zero polynomial
}

// Substitute u -> u^e (stretch exponents).
ValuedElement::UPoly stretch(const ValuedElement::UPoly& p, long e,
                             const FieldElement& zero) {
  if (p.empty() || e == 1) return p;
  ValuedElement::UPoly r((p.size() - 1) * e + 1, zero);
  for (size_t i = 0; i < p.size(); ++i) r[i * e] = p[i];
  return r;
}

// True iff every nonzero exponent of p is divisible by e.
bool supported_on_multiples(const ValuedElement::UPoly& p, long e) {
  for (size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero() && i % e != 0) return false;
  return true;
}

ValuedElement::UPoly contract(const ValuedElement::UPoly& p, long e) {
  ValuedElement::UPoly r;
  for (size_t i = 0; i < p.size(); i += e) r.push_back(p[i]);
  poly::trim(r);
  return r;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> fs;
  for (long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (fs.empty() || fs.back() != d) fs.push_back(d);
      n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

ValuedElement::ValuedElement(KPtr k, UPoly num, UPoly den, long ramification)
    : k_(std::move(k)), num_(std::move(num)), den_(std::move(den)),
      ram_(ramification) {
  poly::trim(num_);
  poly::trim(den_);
  if (den_.empty()) throw ValuedFieldError("zero denominator");
  if (ram_ < 1) throw ValuedFieldError("ramification must be positive");
  // group must allow 1/M
  if (!k_->group.contains(Rat(1, ram_)))
    throw ValuedFieldError("ramification not allowed by the value group");
  if (num_.empty()) {
    den_ = {k_->base->one()};
    ram_ = 1;
    return;
  }
  auto g = residue_field::fld_upoly_gcd(k_->base, num_, den_);
  if (poly::degree(g) > 0) {
    num_ = residue_field::fld_upoly_divmod(k_->base, num_, g).quot;
    den_ = residue_field::fld_upoly_divmod(k_->base, den_, g).quot;
  }
  // monic denominator
  FieldElement lead = den_.back();
  if (!(lead == k_->base->one())) {
    num_ = poly::scale(num_, lead.inv());
    den_ = poly::scale(den_, lead.inv());
  }
  // minimize M
  bool changed = true;
  while (changed && ram_ > 1) {
    changed = false;
    for (long p : prime_factors(ram_)) {
      if (supported_on_multiples(num_, p) && supported_on_multiples(den_, p)) {
        num_ = contract(num_, p);
        den_ = contract(den_, p);
        ram_ /= p;
        changed = true;
        break;
      }
    }
  }
}

Val ValuedElement::valuation() const {
  if (num_.empty()) return VAL_INFINITY;
  long on = upoly_order(num_);
  long od = upoly_order(den_);
  return Rat(on - od, ram_);
}

FieldElement ValuedElement::residue() const {
  if (num_.empty()) return k_->base->zero();
  long on = upoly_order(num_);
  long od = upoly_order(den_);
  if (on < od) throw NegativeValuation();
  if (on > od) return k_->base->zero();
  return num_[on] / den_[od];
}

static std::pair<ValuedElement::UPoly, ValuedElement::UPoly> lifted(
    const ValuedElement& x, long target_ram, const FieldElement& zero) {
  long e = target_ram / x.ramification();
  return {stretch(x.num(), e, zero), stretch(x.den(), e, zero)};
}

static void check_field(const ValuedElement& a, const ValuedElement& b) {
  if (!a.field() || !b.field() || !(*a.field() == *b.field()))
    throw ValuedFieldError("operands from different valued fields");
}

ValuedElement ValuedElement::operator+(const ValuedElement& o) const {
  check_field(*this, o);
  long m = std::lcm(ram_, o.ram_);
  FieldElement z = k_->base->zero();
  auto [an, ad] = lifted(*this, m, z);
  auto [bn, bd] = lifted(o, m, z);
  return ValuedElement(k_, poly::add(poly::mul(an, bd), poly::mul(bn, ad)),
                       poly::mul(ad, bd), m);
}

ValuedElement ValuedElement::operator-() const {
  ValuedElement r = *this;
  r.num_ = poly::neg(r.num_);
  return r;
}

ValuedElement ValuedElement::operator-(const ValuedElement& o) const {
  return *this + (-o);
}

ValuedElement ValuedElement::operator*(const ValuedElement& o) const {
  check_field(*this, o);
  long m = std::lcm(ram_, o.ram_);
  FieldElement z = k_->base->zero();
  auto [an, ad] = lifted(*this, m, z);
  auto [bn, bd] = lifted(o, m, z);
  return ValuedElement(k_, poly::mul(an, bn), poly::mul(ad, bd), m);
}

ValuedElement ValuedElement::operator/(const ValuedElement& o) const {
  check_field(*this, o);
  if (o.is_zero()) throw ValuedFieldError("division by zero");
  long m = std::lcm(ram_, o.ram_);
  FieldElement z = k_->base->zero();
  auto [an, ad] = lifted(*this, m, z);
  auto [bn, bd] = lifted(o, m, z);
  return ValuedElement(k_, poly::mul(an, bd), poly::mul(ad, bn), m);
}

bool ValuedElement::operator==(const ValuedElement& o) const {
  if (!k_ || !o.k_) return !k_ && !o.k_;
  return *k_ == *o.k_ && ram_ == o.ram_ && num_ == o.num_ && den_ == o.den_;
}

std::string ValuedElement::to_string() const {
  auto upoly_str = [&](const UPoly& p) {
    if (p.empty()) return std::string("0");
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      bool one_coeff = p[i] == k_->base->one();
      if (i == 0 || !one_coeff) {
        bool needs_parens = !p[i].in_base() && i > 0;
        s += needs_parens ? "(" + p[i].to_string() + ")" : p[i].to_string();
      }
      if (i >= 1) {
        if (!one_coeff) s += "*";
        s += "t";
        Rat e(static_cast<long>(i), ram_);
        if (denominator(e) == 1) {
          if (e != 1) s += "^" + rat_to_string(e);
        } else {
          s += "^(" + rat_to_string(e) + ")";
        }
      }
    }
    return s.empty() ? std::string("0") : s;
  };
  std::string n = upoly_str(num_);
  if (poly::degree(den_) == 0 && den_[0] == k_->base->one()) return n;
  return "(" + n + ")/(" + upoly_str(den_) + ")";
}

ValuedElement kv_zero(const KPtr& k) {
  return ValuedElement(k, {}, {k->base->one()});
}
ValuedElement kv_one(const KPtr& k) {
  return ValuedElement(k, {k->base->one()}, {k->base->one()});
}
ValuedElement kv_from_residue(const KPtr& k, const FieldElement& c) {
  return ValuedElement(k, {c}, {k->base->one()});
}
ValuedElement kv_uniformizer(const KPtr& k) {
  return ValuedElement(k, {k->base->zero(), k->base->one()},
                       {k->base->one()});
}

Val kv_valuation(const ValuedElement& x) { return x.valuation(); }
FieldElement kv_residue(const ValuedElement& x) { return x.residue(); }

ValuedElement kv_make(const KPtr& k, const Rat& gamma,
                      const FieldElement& unit_residue) {
  if (!k->group.contains(gamma))
    throw valgroup::GroupMismatch("kv_make: valuation not in the group");
  if (unit_residue.is_zero())
    throw ValuedFieldError("kv_make: unit residue must be nonzero");
  long M = static_cast<long>(denominator(gamma));
  long e = static_cast<long>(numerator(gamma));
  FieldElement z = k->base->zero();
  ValuedElement::UPoly mono(static_cast<size_t>(std::abs(e)) + 1, z);
  mono.back() = unit_residue;
  if (e >= 0) return ValuedElement(k, mono, {k->base->one()}, M);
  mono.back() = k->base->one();
  return ValuedElement(k, {unit_residue}, mono, M);
}

Rat kv_pick_valuation_in_range(const GroupDescriptor& g, std::mt19937_64& rng,
                               const Rat& lo, const Rat& hi, long max_den) {
  // enumerate group elements with bounded denominator in (lo, hi)
  std::vector<long> dens{1};
  switch (g.kind) {
    case valgroup::GroupKind::Integers:
      break;
    case valgroup::GroupKind::Rationals:
      for (long d = 2; d <= max_den; ++d) dens.push_back(d);
      break;
    case valgroup::GroupKind::LocalizedIntegers: {
      // powers and products of the allowed primes up to max_den
      for (long d = 2; d <= max_den; ++d) {
        long m = d;
        for (long p : g.primes)
          while (m % p == 0) m /= p;
        if (m == 1) dens.push_back(d);
      }
      break;
    }
  }
  std::vector<Rat> candidates;
  for (long d : dens) {
    Int nlo = rat_floor(lo * d) - 1;
    Int nhi = rat_ceil(hi * d) + 1;
    for (Int n = nlo; n <= nhi; ++n) {
      Rat q(n, d);
      if (q > lo && q < hi) candidates.push_back(q);
    }
  }
  if (candidates.empty())
    throw Unsatisfiable("no group element in the requested range");
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

ValuedElement kv_sample(const KPtr& k, std::mt19937_64& rng,
                        const SampleConstraints& c) {
  Rat gamma(0);
  if (c.valuation) {
    gamma = *c.valuation;
  } else if (c.valuation_range) {
    gamma = kv_pick_valuation_in_range(k->group, rng,
                                       c.valuation_range->first,
                                       c.valuation_range->second);
  }
  if (!k->group.contains(gamma))
    throw Unsatisfiable("requested valuation not in the group");

  // random nonzero residue avoiding the given set
  FieldElement r = k->base->zero();
  for (int tries = 0; tries < 256; ++tries) {
    if (k->base->finite()) {
      std::uniform_int_distribution<long> d(1, k->base->order() - 1);
      r = k->base->from_index(d(rng));
    } else {
      std::uniform_int_distribution<long> d(-6, 6);
      std::vector<Rat> coords(k->base->degree());
      for (auto& x : coords) x = Rat(d(rng));
      r = k->base->from_coords(std::move(coords));
    }
    bool bad = r.is_zero();
    for (const auto& avoid : c.residue_avoid)
      if (r == avoid) bad = true;
    if (!bad) break;
    r = k->base->zero();
  }
  if (r.is_zero()) throw Unsatisfiable("could not satisfy residue_avoid");

  ValuedElement base = kv_make(k, gamma, r);
  // perturb with strictly higher-valuation noise so samples vary in shape
  std::uniform_int_distribution<int> extra(0, 2);
  int n_extra = extra(rng);
  ValuedElement noise = kv_zero(k);
  Rat step = k->group.kind == valgroup::GroupKind::Integers
                 ? Rat(1)
                 : Rat(1, 2);
  if (!k->group.contains(step)) step = Rat(1);
  for (int i = 1; i <= n_extra; ++i) {
    FieldElement cc = k->base->zero();
    if (k->base->finite()) {
      std::uniform_int_distribution<long> d(0, k->base->order() - 1);
      cc = k->base->from_index(d(rng));
    } else {
      std::uniform_int_distribution<long> d(-3, 3);
      cc = k->base->from_base(Rat(d(rng)));
    }
    if (cc.is_zero()) continue;
    noise = noise + kv_make(k, gamma + step * i, cc);
  }
  return base + noise;
}

}  // namespace skolemlab::valued_field
