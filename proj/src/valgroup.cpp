#include "skolemlab/valgroup.hpp"

#include <algorithm>
#include <map>

namespace skolemlab::valgroup {

GroupDescriptor GroupDescriptor::localized(std::vector<long> primes) {
  if (primes.empty())
    throw std::invalid_argument("LocalizedIntegers needs a nonempty prime set");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long p : primes) {
    if (p < 2) throw std::invalid_argument("invalid prime in localization");
  }
  return {GroupKind::LocalizedIntegers, std::move(primes)};
}

bool GroupDescriptor::contains(const Rat& r) const {
  switch (kind) {
    case GroupKind::Rationals:
      return true;
    case GroupKind::Integers:
      return denominator(r) == 1;
    case GroupKind::LocalizedIntegers: {
      Int d = denominator(r);
      for (long p : primes) {
        while (d % p == 0) d /= p;
      }
      return d == 1;
    }
  }
  return false;
}

GroupElement::GroupElement(Rat v, GroupDescriptor g, bool span)
    : value(std::move(v)), group(std::move(g)), in_span(span) {
  if (!in_span && !group.contains(value))
    throw GroupMismatch("value " + rat_to_string(value) +
                        " not in the declared group");
}

Ordering vg_compare(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group && !(a.in_span && b.in_span))
    throw GroupMismatch("comparing elements of different groups");
  if (a.value < b.value) return Ordering::LT;
  if (a.value > b.value) return Ordering::GT;
  return Ordering::EQ;
}

bool vg_divisible(const GroupElement& gamma, long n) {
  if (gamma.in_span)
    throw GroupMismatch("divisibility is a Gamma question, not a span one");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return gamma.group.contains(gamma.value / n);
}

PLFunction PLFunction::lower_envelope(std::vector<Line> lines) {
  if (lines.empty())
    throw std::invalid_argument("envelope of an empty line set");

  // One line per slope: ties keep the smaller intercept.
  std::map<long, Rat> best;
  for (const auto& ln : lines) {
    auto it = best.find(ln.slope);
    if (it == best.end() || ln.intercept < it->second)
      best[ln.slope] = ln.intercept;
  }
  // Steepest slope is active at -infinity; sweep slopes descending and keep
  // the usual convex-hull stack on intersection points.
  std::vector<Line> cand;
  for (auto it = best.rbegin(); it != best.rend(); ++it)
    cand.push_back({it->first, it->second});

  std::vector<Line> hull;
  std::vector<Rat> breaks;
  auto cross = [](const Line& a, const Line& b) {
    // a.slope > b.slope; gamma where the two lines meet
    return (b.intercept - a.intercept) / Rat(a.slope - b.slope);
  };
  for (const auto& ln : cand) {
    for (;;) {
      if (hull.empty()) {
        hull.push_back(ln);
        break;
      }
      Rat x = cross(hull.back(), ln);
      if (!breaks.empty() && x <= breaks.back()) {
        // The previous line never wins: its segment would be empty.
        hull.pop_back();
        breaks.pop_back();
        continue;
      }
      breaks.push_back(x);
      hull.push_back(ln);
      break;
    }
  }

  PLFunction f;
  f.pieces_ = hull;
  f.breaks_ = breaks;
  f.source_lines_ = hull;
  return f;
}

PLFunction PLFunction::from_pieces(std::vector<Line> pieces,
                                   std::vector<Rat> breakpoints) {
  if (pieces.size() != breakpoints.size() + 1 || pieces.empty())
    throw std::invalid_argument("piece/breakpoint count mismatch");
  // Merge adjacent equal lines.
  std::vector<Line> ps{pieces.front()};
  std::vector<Rat> bs;
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i + 1] == ps.back()) continue;
    bs.push_back(breakpoints[i]);
    ps.push_back(pieces[i + 1]);
  }
  PLFunction f;
  f.pieces_ = std::move(ps);
  f.breaks_ = std::move(bs);
  return f;
}

Rat PLFunction::eval(const Rat& gamma) const {
  size_t i = 0;
  while (i < breaks_.size() && gamma > breaks_[i]) ++i;
  return pieces_[i].at(gamma);
}

bool PLFunction::is_concave() const {
  for (size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (pieces_[i].slope < pieces_[i + 1].slope) return false;
  return true;
}

PLFunction pl_from_lines(const std::vector<Line>& lines) {
  return PLFunction::lower_envelope(lines);
}

Rat pl_eval(const PLFunction& f, const Rat& gamma) { return f.eval(gamma); }

PLFunction pl_sub(const PLFunction& f, const PLFunction& g) {
  std::set<Rat> bset(f.breakpoints().begin(), f.breakpoints().end());
  bset.insert(g.breakpoints().begin(), g.breakpoints().end());
  std::vector<Rat> breaks(bset.begin(), bset.end());

  auto piece_at = [](const PLFunction& h, size_t seg_index,
                     const std::vector<Rat>& bs) {
    // Line of h active on the open segment with index seg_index of the merged
    // breakpoint list; probe just right of the segment's left endpoint.
    Rat probe = seg_index == 0 ? (bs.empty() ? Rat(0) : bs.front() - 1)
                               : bs[seg_index - 1];
    size_t i = 0;
    const auto& hb = h.breakpoints();
    while (i < hb.size() && probe >= hb[i]) ++i;
    return h.pieces()[i];
  };

  std::vector<Line> pieces;
  for (size_t s = 0; s <= breaks.size(); ++s) {
    Line lf = piece_at(f, s, breaks);
    Line lg = piece_at(g, s, breaks);
    pieces.push_back({lf.slope - lg.slope, lf.intercept - lg.intercept});
  }
  return PLFunction::from_pieces(std::move(pieces), breaks);
}

KinkReport pl_kink_report(const PLFunction& f, const Rat& beta) {
  const auto& bs = f.breakpoints();
  size_t right = 0;
  while (right < bs.size() && beta > bs[right]) ++right;
  size_t left = right;
  if (right < bs.size() && beta == bs[right]) right += 1;
  return {f.pieces()[left].slope, f.pieces()[right].slope, f.eval(beta)};
}

}  // namespace skolemlab::valgroup
