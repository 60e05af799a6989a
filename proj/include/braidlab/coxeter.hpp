#pragma once

#include <optional>
#include <span>
#include <vector>

#include "braidlab/diagram.hpp"
#include "braidlab/util.hpp"

namespace braidlab {

// Group element, identified by its canonical (ShortLex-least) reduced word.
struct CoxeterElement {
  Word canonical;

  int length() const { return static_cast<int>(canonical.size()); }
  bool is_identity() const { return canonical.empty(); }
  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.canonical == b.canonical;
  }
  friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) {
    return shortlex_less(a.canonical, b.canonical);
  }
};

// Appends every word obtained from w by one braid move, i.e. by rewriting a
// window  stst... <-> tsts...  of length m(s,t).  Pairs with infinite order
// admit no move.
void append_braid_neighbors(const CoxeterDiagram& d, const Word& w, std::vector<Word>& out);

// Everything about the group W attached to one diagram.  Canonical forms are
// memoized; the tables are safe to share across threads.
class CoxeterContext {
 public:
  explicit CoxeterContext(CoxeterDiagram d, size_t class_budget = 200'000);

  const CoxeterDiagram& diagram() const { return diagram_; }
  size_t class_budget() const { return class_budget_; }

  // Canonical form of an arbitrary word, by Tits' algorithm: search the
  // braid-move class; as soon as any member shows a repeated adjacent
  // letter, delete that pair and recurse.  A word none of whose class
  // members has such a pair is reduced.
  CoxeterElement reduce(const Word& w) const;

  CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b) const;
  CoxeterElement inverse(const CoxeterElement& a) const;

  // Weak order: a <= b iff l(b) = l(a) + l(a^-1 b).
  bool prefix_leq(const CoxeterElement& a, const CoxeterElement& b) const;

  // True when lengths add across the whole sequence.
  bool is_reduced_sequence(std::span<const CoxeterElement> seq) const;

  GenSet support(const CoxeterElement& a) const { return GenSet::of_word(a.canonical); }
  bool in_parabolic(const CoxeterElement& a, GenSet j) const {
    return support(a).subset_of(j);
  }

  // Exact classification of the induced subdiagram against the finite-type
  // templates, component by component.
  bool is_finite_type(GenSet j) const;

  // All elements of the standard parabolic W_J of length <= max_len,
  // ShortLex-sorted.  Letters outside J never appear in canonical forms of
  // W_J elements, so the BFS stays inside J.
  std::vector<CoxeterElement> enumerate_elements(GenSet j, int max_len) const;

  // Longest element of W_J (finite type required), by greedy ascent.
  CoxeterElement longest_element(GenSet j) const;

  // Every finite-type subset of the generator set, sorted by size then mask.
  std::vector<GenSet> finite_type_closure() const;

 private:
  Word reduce_word(const Word& w) const;

  CoxeterDiagram diagram_;
  size_t class_budget_;
  ConcurrentMemo<Word, Word> canon_;
  ConcurrentMemo<uint32_t, bool> finite_type_;
  ConcurrentMemo<uint32_t, Word> longest_;
};

}  // namespace braidlab
