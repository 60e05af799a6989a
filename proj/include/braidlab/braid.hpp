#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "braidlab/coxeter.hpp"

namespace braidlab {

// Positive braid monoid element: canonical form is the ShortLex-least member
// of the braid-move class.  All defining relations preserve length, so the
// length of any representative word is an invariant.
struct PosBraidElement {
  Word canonical;

  int length() const { return static_cast<int>(canonical.size()); }
  bool is_identity() const { return canonical.empty(); }
  friend bool operator==(const PosBraidElement& a, const PosBraidElement& b) {
    return a.canonical == b.canonical;
  }
  friend bool operator<(const PosBraidElement& a, const PosBraidElement& b) {
    return shortlex_less(a.canonical, b.canonical);
  }
};

using DescentSet = GenSet;

// Result of the descent-divisibility check: the descent set of b must be
// finite type, and the lift of every element of the parabolic it generates
// must left-divide b.
struct DescentLiftReport {
  bool pass = false;
  DescentSet descents;
  bool descents_finite_type = false;
  size_t checked = 0;
  Word counterexample;  // empty when pass
};

// Monoid-level operations for one diagram, layered over a CoxeterContext.
// Braid classes, canonical forms and divisor tables are memoized.
class BraidContext {
 public:
  explicit BraidContext(const CoxeterContext& cox);

  const CoxeterContext& cox() const { return *cox_; }
  const CoxeterDiagram& diagram() const { return cox_->diagram(); }

  PosBraidElement canonical(const Word& w) const;
  PosBraidElement multiply(const PosBraidElement& a, const PosBraidElement& b) const;

  // Sorted braid-move class of b.
  const std::vector<Word>& braid_class(const PosBraidElement& b) const;

  // Left divisibility a <= b, i.e. b = a c for some positive c.
  bool left_divides(const PosBraidElement& a, const PosBraidElement& b) const;

  // The complement c with a c = b; requires left_divides(a, b).
  PosBraidElement quotient(const PosBraidElement& a, const PosBraidElement& b) const;

  // b is square-free: no member of its class contains ss.
  bool is_reduced(const PosBraidElement& b) const;

  // Bijection from W onto the square-free braid elements.  A reduced group
  // word admits no deletion, so its group class and braid class coincide
  // and the canonical forms agree letter for letter.
  PosBraidElement reduced_lift(const CoxeterElement& w) const;

  // Generators dividing b on the left.
  DescentSet descent_set(const PosBraidElement& b) const;

  // All left divisors of b, sorted by (length, ShortLex).  Includes the
  // identity and b itself.
  std::vector<PosBraidElement> prefixes(const PosBraidElement& b) const;

  // The unique maximal square-free left divisor.  Uniqueness is verified by
  // exhaustive comparison; failure throws NonUniqueMaximum.
  PosBraidElement maximal_reduced_prefix(const PosBraidElement& b) const;

  DescentLiftReport verify_descent_divisibility(const PosBraidElement& b) const;

  // When b is the lift of the longest element of a finite-type parabolic
  // W_J, returns J (the support of b); otherwise nullopt.  The identity
  // yields the empty set.
  std::optional<GenSet> delta_subset(const PosBraidElement& b) const;

  GenSet support(const PosBraidElement& b) const { return GenSet::of_word(b.canonical); }

  // All monoid elements of length <= max_len, sorted by (length, ShortLex).
  std::vector<PosBraidElement> enumerate_elements(int max_len) const;

 private:
  struct DivisorTable {
    std::vector<std::vector<Word>> by_length;  // sorted canonical forms
  };
  const DivisorTable& divisors(const PosBraidElement& b) const;

  const CoxeterContext* cox_;
  ConcurrentMemo<Word, Word> canon_;
  ConcurrentMemo<Word, std::vector<Word>> class_;
  ConcurrentMemo<Word, DivisorTable> divisor_;
  ConcurrentMemo<Word, Word> quotient_;
};

}  // namespace braidlab
