// Ordered abelian value groups (subgroups of Q), their rational spans, and
// exact piecewise-linear minimum-valuation envelopes.
#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "skolemlab/rational.hpp"

namespace skolemlab::valgroup {

enum class GroupKind { Integers, Rationals, LocalizedIntegers };

struct GroupDescriptor {
  GroupKind kind = GroupKind::Integers;
  // Sorted, nonempty for LocalizedIntegers; Z[1/2] is {2}.
  std::vector<long> primes;

  static GroupDescriptor integers() { return {GroupKind::Integers, {}}; }
  static GroupDescriptor rationals() { return {GroupKind::Rationals, {}}; }
  static GroupDescriptor localized(std::vector<long> primes);

  // True iff the reduced denominator of r factors over the allowed primes.
  bool contains(const Rat& r) const;
  bool operator==(const GroupDescriptor&) const = default;
};

// An exact element of a value group Gamma, or of its rational span QGamma.
// Span elements are exempt from the denominator invariant.
struct GroupElement {
  Rat value;
  GroupDescriptor group;
  bool in_span = false;

  GroupElement() = default;
  GroupElement(Rat v, GroupDescriptor g, bool span = false);
};

struct GroupMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Ordering { LT, EQ, GT };

Ordering vg_compare(const GroupElement& a, const GroupElement& b);

// True iff gamma/n lies in gamma's group. Requires gamma in Gamma (not span).
bool vg_divisible(const GroupElement& gamma, long n);

// A line slope*gamma + intercept; slopes are integers (polynomial degrees).
struct Line {
  long slope = 0;
  Rat intercept;

  Rat at(const Rat& gamma) const { return Rat(slope) * gamma + intercept; }
  bool operator==(const Line&) const = default;
};

// Piecewise-linear function on Q. Stored as segments left-to-right;
// breakpoints strictly increasing, adjacent segments carry distinct lines.
// Envelopes built from lines are concave (slopes non-increasing); general
// differences need not be.
class PLFunction {
 public:
  // Canonical lower envelope (pointwise min) of a nonempty set of lines.
  static PLFunction lower_envelope(std::vector<Line> lines);
  // Single explicit piecewise form; used internally by pl_sub.
  static PLFunction from_pieces(std::vector<Line> pieces,
                                std::vector<Rat> breakpoints);

  Rat eval(const Rat& gamma) const;
  const std::vector<Line>& pieces() const { return pieces_; }
  const std::vector<Rat>& breakpoints() const { return breaks_; }
  // The input lines that survived envelope canonicalization (empty for
  // functions built by from_pieces/pl_sub).
  const std::vector<Line>& source_lines() const { return source_lines_; }

  bool is_concave() const;  // slopes non-increasing left-to-right
  bool operator==(const PLFunction& o) const {
    return pieces_ == o.pieces_ && breaks_ == o.breaks_;
  }

 private:
  std::vector<Line> pieces_;
  std::vector<Rat> breaks_;
  std::vector<Line> source_lines_;
};

PLFunction pl_from_lines(const std::vector<Line>& lines);
Rat pl_eval(const PLFunction& f, const Rat& gamma);
PLFunction pl_sub(const PLFunction& f, const PLFunction& g);

struct KinkReport {
  long left_slope = 0;
  long right_slope = 0;
  Rat value_at_beta;
};

KinkReport pl_kink_report(const PLFunction& f, const Rat& beta);

}  // namespace skolemlab::valgroup
