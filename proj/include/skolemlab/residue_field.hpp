// Exact arithmetic in base and residue fields: F_p, small extensions F_{p^k},
// Q, and quadratic extensions of Q. Extension elements live in the power
// basis of the generator; the minimal polynomial is certified irreducible at
// descriptor construction.
#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skolemlab/poly.hpp"
#include "skolemlab/rational.hpp"

namespace skolemlab::residue_field {

enum class FieldKind { PrimeFinite, ExtFinite, Rationals, QuadraticExt };

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionByZero : FieldError {
  DivisionByZero() : FieldError("division by zero in field") {}
};
struct FieldMismatch : FieldError {
  FieldMismatch() : FieldError("operands belong to different fields") {}
};

class FieldElement;

// Base scalars are plain Rat values; finite-field descriptors reduce them
// mod p. Extension coordinates are base scalars in the power basis.
class FieldDescriptor
    : public std::enable_shared_from_this<FieldDescriptor> {
 public:
  static std::shared_ptr<const FieldDescriptor> prime_finite(long p);
  // minpoly low-to-high over F_p, monic, degree 2..4, irreducibility checked.
  static std::shared_ptr<const FieldDescriptor> ext_finite(
      long p, std::vector<Rat> minpoly, std::string gen = "w");
  static std::shared_ptr<const FieldDescriptor> rationals();
  // Quadratic x^2 - d over Q, d not a rational square.
  static std::shared_ptr<const FieldDescriptor> quadratic(
      const Rat& d, std::string gen = "i");

  FieldKind kind() const { return kind_; }
  long p() const { return p_; }
  size_t degree() const { return degree_; }
  const std::vector<Rat>& minpoly() const { return minpoly_; }
  const std::string& generator_symbol() const { return gen_; }
  bool finite() const {
    return kind_ == FieldKind::PrimeFinite || kind_ == FieldKind::ExtFinite;
  }
  // Field size for finite fields (p^degree); throws otherwise.
  long order() const;

  // ---- base-scalar arithmetic (F_p or Q) ----
  Rat bnorm(const Rat& a) const;  // canonical representative
  // In characteristic p the scalars are integer residues, so the common
  // case reduces to long arithmetic instead of rational normalization.
  Rat badd(const Rat& a, const Rat& b) const {
    if (p_ != 0 && denominator(a) == 1 && denominator(b) == 1)
      return Rat((bres(a) + bres(b)) % p_);
    return bnorm(a + b);
  }
  Rat bmul(const Rat& a, const Rat& b) const {
    if (p_ != 0 && denominator(a) == 1 && denominator(b) == 1)
      return Rat((bres(a) * bres(b)) % p_);
    return bnorm(a * b);
  }
  Rat bneg(const Rat& a) const {
    if (p_ != 0 && denominator(a) == 1) return Rat((p_ - bres(a)) % p_);
    return bnorm(-a);
  }
  Rat binv(const Rat& a) const;

  // ---- elements ----
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_base(const Rat& a) const;       // embed base scalar
  FieldElement from_coords(std::vector<Rat> c) const;
  FieldElement generator() const;                    // w (extensions only)
  FieldElement from_index(long i) const;  // i-th element, finite fields

 private:
  long bres(const Rat& a) const {  // integer residue in [0, p)
    long r = static_cast<long>(numerator(a) % p_);
    return r < 0 ? r + p_ : r;
  }

  FieldKind kind_ = FieldKind::Rationals;
  long p_ = 0;
  size_t degree_ = 1;
  std::vector<Rat> minpoly_;  // low-to-high, monic, length degree_+1
  std::string gen_ = "w";
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rat> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool in_base() const;  // all non-constant coordinates vanish

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rat> coords_;
};

// Monic polynomial over F with no root in F, degree <= max_degree.
// Finite fields: exhaustive search over monic quadratics (then cubics...).
// Q and Q(i): fixed/searched small-height witnesses, verified rootless.
struct NotFound : FieldError {
  using FieldError::FieldError;
};
std::vector<FieldElement> fld_find_rootless_monic(const FieldPtr& F,
                                                  int max_degree);

// Exact evaluation of a polynomial (low-to-high coefficients) at a point.
FieldElement fld_poly_eval(const std::vector<FieldElement>& poly,
                           const FieldElement& at);

// Univariate polynomial gcd / division over F, same contracts as poly::gcd
// and poly::divmod. Over prime fields the whole computation runs on long
// residues, which is far cheaper than element-by-element field arithmetic.
std::vector<FieldElement> fld_upoly_gcd(const FieldPtr& F,
                                        const std::vector<FieldElement>& a,
                                        const std::vector<FieldElement>& b);
poly::DivMod<FieldElement> fld_upoly_divmod(const FieldPtr& F,
                                            const std::vector<FieldElement>& a,
                                            const std::vector<FieldElement>& b);

// Solves target = sum c_i * vectors_i with c_i in the base subfield of the
// common extension; Gaussian elimination over the base scalars.
std::optional<std::vector<Rat>> fld_linear_solve(
    const std::vector<FieldElement>& vectors, const FieldElement& target);

}  // namespace skolemlab::residue_field
