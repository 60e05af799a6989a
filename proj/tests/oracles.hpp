#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is a plain breadth-first closure over rewriting steps with
// no memoization, sharing nothing with the production code paths beyond the
// diagram accessors.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "braidlab/diagram.hpp"

namespace oracle {

using braidlab::CoxeterDiagram;
using braidlab::Gen;
using braidlab::Word;

// All words obtained from w by rewriting one alternating window st st s...
// of length m(s,t) into the window starting with the other letter.
inline std::vector<Word> move_neighbors(const CoxeterDiagram& d, const Word& w) {
  std::vector<Word> out;
  for (size_t i = 0; i < w.size(); ++i) {
    const Gen a = static_cast<Gen>(w[i]);
    for (Gen b = 0; b < static_cast<Gen>(d.rank()); ++b) {
      if (b == a) continue;
      const int m = d.order(a, b);
      if (m == CoxeterDiagram::kInfinity) continue;
      if (i + static_cast<size_t>(m) > w.size()) continue;
      bool window = true;
      for (int k = 0; k < m && window; ++k)
        window = w[i + k] == static_cast<char>(k % 2 ? b : a);
      if (!window) continue;
      Word moved = w;
      for (int k = 0; k < m; ++k) moved[i + k] = static_cast<char>(k % 2 ? a : b);
      out.push_back(moved);
    }
  }
  return out;
}

// Closure of start under braid moves, optionally also deleting adjacent
// equal pairs.  With deletions this is the full nil-move closure, so the
// shortest stratum consists of the reduced words for the group element.
inline std::set<Word> closure(const CoxeterDiagram& d, const Word& start, bool delete_pairs) {
  std::set<Word> seen{start};
  std::vector<Word> todo{start};
  while (!todo.empty()) {
    Word w = todo.back();
    todo.pop_back();
    for (Word& n : move_neighbors(d, w))
      if (seen.insert(n).second) todo.push_back(std::move(n));
    if (!delete_pairs) continue;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] != w[i + 1]) continue;
      Word shorter = w.substr(0, i) + w.substr(i + 2);
      if (seen.insert(shorter).second) todo.push_back(std::move(shorter));
    }
  }
  return seen;
}

inline Word shortlex_least(const std::set<Word>& words) {
  Word best;
  bool first = true;
  for (const Word& w : words) {
    if (first || braidlab::shortlex_less(w, best)) best = w;
    first = false;
  }
  return best;
}

// Canonical form of the group element spelled by w.
inline Word group_canonical(const CoxeterDiagram& d, const Word& w) {
  std::set<Word> all = closure(d, w, true);
  size_t len = w.size();
  for (const Word& u : all) len = std::min(len, u.size());
  std::set<Word> shortest;
  for (const Word& u : all)
    if (u.size() == len) shortest.insert(u);
  return shortlex_least(shortest);
}

// Canonical form of the monoid element spelled by w (moves preserve length).
inline Word monoid_canonical(const CoxeterDiagram& d, const Word& w) {
  return shortlex_least(closure(d, w, false));
}

inline std::set<Word> monoid_class(const CoxeterDiagram& d, const Word& w) {
  return closure(d, w, false);
}

inline bool monoid_reduced(const CoxeterDiagram& d, const Word& w) {
  for (const Word& u : closure(d, w, false))
    for (size_t i = 0; i + 1 < u.size(); ++i)
      if (u[i] == u[i + 1]) return false;
  return true;
}

// Left divisibility in the monoid: some word for b starts with a word for a.
inline bool monoid_divides(const CoxeterDiagram& d, const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  const std::set<Word> ca = closure(d, a, false);
  for (const Word& u : closure(d, b, false))
    if (ca.count(u.substr(0, a.size()))) return true;
  return false;
}

inline std::set<Gen> monoid_descents(const CoxeterDiagram& d, const Word& w) {
  std::set<Gen> out;
  for (const Word& u : closure(d, w, false))
    if (!u.empty()) out.insert(static_cast<Gen>(u[0]));
  return out;
}

// Canonical forms of all left divisors of w, including 1 and w itself.
inline std::set<Word> monoid_divisors(const CoxeterDiagram& d, const Word& w) {
  std::set<Word> out;
  for (const Word& u : closure(d, w, false))
    for (size_t k = 0; k <= u.size(); ++k) out.insert(monoid_canonical(d, u.substr(0, k)));
  return out;
}

// Canonical forms of all monoid elements of length at most max_len.
inline std::set<Word> monoid_elements(const CoxeterDiagram& d, size_t max_len) {
  std::set<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (size_t n = 1; n <= max_len; ++n) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (Gen g = 0; g < static_cast<Gen>(d.rank()); ++g) {
        Word e = w;
        e.push_back(static_cast<char>(g));
        next.push_back(std::move(e));
      }
    for (const Word& w : next) out.insert(monoid_canonical(d, w));
    level = std::move(next);
  }
  return out;
}

// Strict chains 1 < b1 < ... < bk <= b of left divisors, reported as the
// sorted stop tuples, with a caller-supplied filter on quotient words and a
// switch for whether the chain ending exactly at b is admitted.
template <class QuotientOk>
inline std::set<std::vector<Word>> chains(const CoxeterDiagram& d, const Word& b,
                                          bool keep_terminal, QuotientOk ok) {
  const Word bc = monoid_canonical(d, b);
  std::set<std::vector<Word>> out;
  if (bc.empty()) {
    if (keep_terminal) out.insert({});
    return out;
  }
  const std::set<Word> divisors = monoid_divisors(d, bc);
  auto quotient_word = [&](const Word& lo, const Word& hi) -> Word {
    const std::set<Word> clo = closure(d, lo, false);
    for (const Word& u : closure(d, hi, false))
      if (clo.count(u.substr(0, lo.size()))) return monoid_canonical(d, u.substr(lo.size()));
    return Word{};
  };
  std::vector<Word> stops;
  auto rec = [&](auto&& self, const Word& at) -> void {
    for (const Word& next : divisors) {
      if (next == at || next.empty() || !monoid_divides(d, at, next)) continue;
      if (!ok(quotient_word(at, next))) continue;
      if (next == bc) {
        if (keep_terminal || !stops.empty()) out.insert(stops);
        continue;
      }
      stops.push_back(next);
      self(self, next);
      stops.pop_back();
    }
  };
  rec(rec, Word{});
  return out;
}

}  // namespace oracle
