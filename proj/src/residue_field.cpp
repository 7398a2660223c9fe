#include "skolemlab/residue_field.hpp"

#include <algorithm>
#include <utility>

namespace skolemlab::residue_field {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Base-scalar polynomial evaluation, used for irreducibility root checks.
Rat bpoly_eval(const FieldDescriptor& F, const std::vector<Rat>& poly,
               const Rat& at) {
  Rat acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = F.badd(F.bmul(acc, at), *it);
  return acc;
}

}  // namespace

std::shared_ptr<const FieldDescriptor> FieldDescriptor::prime_finite(long p) {
  if (!is_prime(p)) throw FieldError("p must be prime");
  auto d = std::make_shared<FieldDescriptor>();
  d->kind_ = FieldKind::PrimeFinite;
  d->p_ = p;
  d->degree_ = 1;
  return d;
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::ext_finite(
    long p, std::vector<Rat> minpoly, std::string gen) {
  if (!is_prime(p)) throw FieldError("p must be prime");
  size_t deg = minpoly.size() - 1;
  if (deg < 2 || deg > 4) throw FieldError("extension degree must be 2..4");
  auto d = std::make_shared<FieldDescriptor>();
  d->kind_ = FieldKind::ExtFinite;
  d->p_ = p;
  d->degree_ = deg;
  d->gen_ = std::move(gen);
  for (auto& c : minpoly) c = d->bnorm(c);
  if (minpoly.back() != 1) throw FieldError("minimal polynomial must be monic");
  // Irreducibility over F_p: no roots suffices for deg 2, 3. For deg 4,
  // additionally no monic irreducible quadratic factor (exhaustive trial
  // division; p^2 candidates at most 81 for the shipped scenes).
  for (long r = 0; r < p; ++r)
    if (bpoly_eval(*d, minpoly, Rat(r)) == 0)
      throw FieldError("minimal polynomial has a root mod p");
  if (deg == 4) {
    for (long b = 0; b < p; ++b) {
      for (long c = 0; c < p; ++c) {
        // divide minpoly by x^2 + b x + c over F_p
        std::vector<Rat> rem(minpoly);
        for (size_t i = rem.size(); i-- > 2;) {
          Rat q = rem[i];
          rem[i] = 0;
          rem[i - 1] = d->bnorm(rem[i - 1] - q * b);
          rem[i - 2] = d->bnorm(rem[i - 2] - q * c);
        }
        bool divides = rem[0] == 0 && rem[1] == 0;
        bool quad_irred = true;
        for (long r = 0; r < p && quad_irred; ++r)
          if (d->bnorm(Rat(r) * r + Rat(b) * r + c) == 0) quad_irred = false;
        if (divides && quad_irred)
          throw FieldError("minimal polynomial has a quadratic factor");
      }
    }
  }
  d->minpoly_ = std::move(minpoly);
  return d;
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::rationals() {
  auto d = std::make_shared<FieldDescriptor>();
  d->kind_ = FieldKind::Rationals;
  d->degree_ = 1;
  return d;
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::quadratic(
    const Rat& disc, std::string gen) {
  // x^2 - disc irreducible over Q iff disc is not a square of a rational.
  auto is_square = [](const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
  };
  if (disc == 0 ||
      (is_square(numerator(disc) * denominator(disc))))
    throw FieldError("discriminant is a rational square");
  auto d = std::make_shared<FieldDescriptor>();
  d->kind_ = FieldKind::QuadraticExt;
  d->degree_ = 2;
  d->gen_ = std::move(gen);
  d->minpoly_ = {-disc, Rat(0), Rat(1)};
  return d;
}

long FieldDescriptor::order() const {
  if (!finite()) throw FieldError("order() on an infinite field");
  long n = 1;
  for (size_t i = 0; i < degree_; ++i) n *= p_;
  return n;
}

Rat FieldDescriptor::bnorm(const Rat& a) const {
  if (p_ == 0) return a;
  // a is an integer residue here; reduce numerator mod p.
  Int n = numerator(a) % p_;
  Int d = denominator(a);
  if (d != 1) {
    // clear the denominator via its inverse mod p
    Rat inv = binv(Rat(d % p_));
    return bnorm(Rat(n) * inv);
  }
  if (n < 0) n += p_;
  return Rat(n);
}

Rat FieldDescriptor::binv(const Rat& a) const {
  if (p_ == 0) {
    if (a == 0) throw DivisionByZero();
    return 1 / a;
  }
  Rat an = bnorm(a);
  if (an == 0) throw DivisionByZero();
  // Fermat: a^(p-2) mod p
  Rat acc(1);
  long e = p_ - 2;
  Rat base = an;
  while (e > 0) {
    if (e & 1) acc = bnorm(acc * base);
    base = bnorm(base * base);
    e >>= 1;
  }
  return acc;
}

FieldElement FieldDescriptor::zero() const {
  return from_base(Rat(0));
}

FieldElement FieldDescriptor::one() const { return from_base(Rat(1)); }

FieldElement FieldDescriptor::from_base(const Rat& a) const {
  std::vector<Rat> c(degree_, Rat(0));
  c[0] = bnorm(a);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldDescriptor::from_coords(std::vector<Rat> c) const {
  if (c.size() != degree_) throw FieldError("coordinate length mismatch");
  for (auto& x : c) x = bnorm(x);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldDescriptor::generator() const {
  if (degree_ < 2) throw FieldError("base field has no generator");
  std::vector<Rat> c(degree_, Rat(0));
  c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldDescriptor::from_index(long i) const {
  if (!finite()) throw FieldError("from_index on an infinite field");
  std::vector<Rat> c(degree_);
  for (size_t k = 0; k < degree_; ++k) {
    c[k] = Rat(i % p_);
    i /= p_;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rat& c) { return c == 0; });
}

bool FieldElement::in_base() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

static void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw FieldMismatch();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(*this, o);
  std::vector<Rat> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = field_->badd(coords_[i], o.coords_[i]);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = field_->bneg(coords_[i]);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(*this, o);
  size_t n = field_->degree();
  std::vector<Rat> prod(2 * n - 1, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      prod[i + j] = field_->badd(prod[i + j],
                                 field_->bmul(coords_[i], o.coords_[j]));
  // reduce by the monic minimal polynomial: w^n = -(m_0 + ... + m_{n-1}w^{n-1})
  const auto& mp = field_->minpoly();
  for (size_t k = prod.size(); k-- > n;) {
    Rat lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (size_t j = 0; j < n; ++j)
      prod[k - n + j] =
          field_->badd(prod[k - n + j], field_->bmul(field_->bneg(lead), mp[j]));
  }
  prod.resize(n);
  return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero();
  size_t n = field_->degree();
  if (n == 1) return FieldElement(field_, {field_->binv(coords_[0])});

  // Extended Euclid in (base)[w] between the minimal polynomial and this.
  using BPoly = std::vector<Rat>;
  const FieldDescriptor& F = *field_;
  auto trim = [](BPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto sub_scaled = [&](BPoly& a, const BPoly& b, const Rat& s, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i)
      a[i + shift] = F.badd(a[i + shift], F.bmul(F.bneg(s), b[i]));
  };

  BPoly r0 = F.minpoly();  // degree n
  BPoly r1 = coords_;
  trim(r1);
  BPoly s0 = {}, s1 = {Rat(1)};  // s-coefficients track r = s * this (mod mp)
  while (true) {
    // divide r0 by r1
    BPoly q;
    BPoly rem = r0;
    trim(rem);
    while (rem.size() >= r1.size() && !rem.empty()) {
      size_t shift = rem.size() - r1.size();
      Rat c = F.bmul(rem.back(), F.binv(r1.back()));
      if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
      q[shift] = F.badd(q[shift], c);
      sub_scaled(rem, r1, c, shift);
      trim(rem);
    }
    // s2 = s0 - q * s1
    BPoly s2 = s0;
    for (size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) sub_scaled(s2, s1, q[i], i);
    trim(s2);
    if (rem.empty()) {
      // r1 is the gcd; minimal polynomial irreducible => gcd is a unit scalar
      if (r1.size() != 1)
        throw FieldError("minimal polynomial not irreducible");
      Rat unit_inv = F.binv(r1[0]);
      std::vector<Rat> out(n, Rat(0));
      for (size_t i = 0; i < s1.size() && i < n; ++i)
        out[i] = F.bmul(s1[i], unit_inv);
      return FieldElement(field_, std::move(out));
    }
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inv();
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

std::string FieldElement::to_string() const {
  std::string s;
  const std::string& g = field_->generator_symbol();
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || coords_[i] != 1) s += rat_to_string(coords_[i]);
    if (i >= 1) {
      if (coords_[i] != 1) s += "*";
      s += g;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

FieldElement fld_poly_eval(const std::vector<FieldElement>& poly,
                           const FieldElement& at) {
  FieldElement acc = at.field()->zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

std::vector<FieldElement> fld_find_rootless_monic(const FieldPtr& F,
                                                  int max_degree) {
  if (max_degree < 2) throw NotFound("max_degree too small");
  if (F->finite()) {
    long q = F->order();
    for (int deg = 2; deg <= max_degree; ++deg) {
      // enumerate monic polynomials x^deg + c_{deg-1}x^{deg-1} + ... + c_0
      long total = 1;
      for (int i = 0; i < deg; ++i) total *= q;
      for (long code = 0; code < total; ++code) {
        std::vector<FieldElement> poly;
        long c = code;
        for (int i = 0; i < deg; ++i) {
          poly.push_back(F->from_index(c % q));
          c /= q;
        }
        poly.push_back(F->one());
        bool rootless = true;
        for (long e = 0; e < q && rootless; ++e)
          if (fld_poly_eval(poly, F->from_index(e)).is_zero())
            rootless = false;
        if (rootless) return poly;
      }
    }
    throw NotFound("no rootless monic polynomial up to the degree bound");
  }
  if (F->kind() == FieldKind::Rationals) {
    // x^2 + 1
    return {F->one(), F->zero(), F->one()};
  }
  // Quadratic extension of Q: search small-height monic quadratics
  // x^2 + b, rootless iff -b is not a square in the field. Verified by the
  // rational-root/norm criterion: z^2 = -b with z = u + v*g, g^2 = d, means
  // u^2 + v^2 d = -b and 2uv = 0.
  const Rat d = -F->minpoly()[0];
  for (long bb = 1; bb <= 16; ++bb) {
    Rat b(bb);
    auto rat_is_square = [](const Rat& r) {
      if (r < 0) return false;
      Int n = numerator(r) * denominator(r);
      Int s = boost::multiprecision::sqrt(n);
      return s * s == n;
    };
    // v = 0: need -b a square in Q; u = 0: need -b/d a square in Q.
    bool has_root = rat_is_square(-b) || rat_is_square(-b / d);
    if (!has_root)
      return {F->from_base(b), F->zero(), F->one()};
  }
  throw NotFound("no rootless quadratic found over the quadratic extension");
}

namespace {

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

// Extracts long residues when F is a prime field and every coefficient is
// a canonical residue; false means fall back to generic arithmetic.
bool prime_residues(const FieldPtr& F, const std::vector<FieldElement>& v,
                    std::vector<long>& out) {
  if (F->kind() != FieldKind::PrimeFinite) return false;
  out.clear();
  out.reserve(v.size());
  for (const auto& e : v) {
    if (e.coords().empty()) {
      out.push_back(0);
      continue;
    }
    const Rat& c = e.coords()[0];
    if (denominator(c) != 1) return false;
    long r = static_cast<long>(numerator(c) % F->p());
    out.push_back(r < 0 ? r + F->p() : r);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return true;
}

std::vector<FieldElement> from_residues(const FieldPtr& F,
                                        const std::vector<long>& v) {
  std::vector<FieldElement> r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(F, std::vector<Rat>{Rat(x)});
  return r;
}

// Remainder of a by b mod p, in place; b is nonempty with unit lead.
void lrem(std::vector<long>& a, const std::vector<long>& b, long p,
          std::vector<long>* quot) {
  long linv = inv_mod(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    long c = a.back() * linv % p;
    if (quot) {
      if (quot->size() < shift + 1) quot->resize(shift + 1, 0);
      (*quot)[shift] = ((*quot)[shift] + c) % p;
    }
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
}

}  // namespace

std::vector<FieldElement> fld_upoly_gcd(const FieldPtr& F,
                                        const std::vector<FieldElement>& a,
                                        const std::vector<FieldElement>& b) {
  std::vector<long> ra, rb;
  if (!prime_residues(F, a, ra) || !prime_residues(F, b, rb))
    return poly::gcd(a, b);
  long p = F->p();
  while (!rb.empty()) {
    lrem(ra, rb, p, nullptr);
    std::swap(ra, rb);
  }
  if (!ra.empty() && ra.back() != 1) {
    long linv = inv_mod(ra.back(), p);
    for (auto& x : ra) x = x * linv % p;
  }
  return from_residues(F, ra);
}

poly::DivMod<FieldElement> fld_upoly_divmod(
    const FieldPtr& F, const std::vector<FieldElement>& a,
    const std::vector<FieldElement>& b) {
  std::vector<long> ra, rb;
  if (!prime_residues(F, a, ra) || !prime_residues(F, b, rb))
    return poly::divmod(a, b);
  if (rb.empty()) throw std::domain_error("polynomial division by zero");
  std::vector<long> quot;
  lrem(ra, rb, F->p(), &quot);
  return {from_residues(F, quot), from_residues(F, ra)};
}

std::optional<std::vector<Rat>> fld_linear_solve(
    const std::vector<FieldElement>& vectors, const FieldElement& target) {
  if (vectors.empty()) {
    if (target.is_zero()) return std::vector<Rat>{};
    return std::nullopt;
  }
  const FieldPtr& F = vectors.front().field();
  for (const auto& v : vectors)
    if (v.field() != F) throw FieldMismatch();
  if (target.field() != F) throw FieldMismatch();

  size_t rows = F->degree();
  size_t cols = vectors.size();
  // augmented matrix over the base scalars
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = vectors[j].coords()[i];
  for (size_t i = 0; i < rows; ++i) m[i][cols] = target.coords()[i];

  std::vector<long> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    Rat inv = F->binv(m[r][c]);
    for (size_t j = c; j <= cols; ++j) m[r][j] = F->bmul(m[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j <= cols; ++j)
        m[i][j] = F->badd(m[i][j], F->bmul(F->bneg(f), m[r][j]));
    }
    pivot_col[r] = static_cast<long>(c);
    ++r;
  }
  // inconsistent rows
  for (size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;

  std::vector<Rat> sol(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) sol[pivot_col[i]] = m[i][cols];
  return sol;
}

}  // namespace skolemlab::residue_field
