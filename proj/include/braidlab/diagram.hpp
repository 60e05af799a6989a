#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

// A generator is an index into the diagram's declared generator list.
using Gen = int;

// Words store one generator index per char.  The declaration order of the
// generators doubles as the letter order for ShortLex comparisons, so plain
// string comparison on equal-length words is the lexicographic tie-break.
using Word = std::string;

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct ShortLex {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

// Subset of the generator set, as a bit mask.  Rank is capped well below 32.
struct GenSet {
  uint32_t bits = 0;

  GenSet() = default;
  explicit GenSet(uint32_t b) : bits(b) {}

  bool contains(Gen g) const { return bits >> g & 1u; }
  void add(Gen g) { bits |= 1u << g; }
  void remove(Gen g) { bits &= ~(1u << g); }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcount(bits); }
  bool subset_of(GenSet o) const { return (bits & ~o.bits) == 0; }
  GenSet intersect(GenSet o) const { return GenSet(bits & o.bits); }
  GenSet unite(GenSet o) const { return GenSet(bits | o.bits); }

  std::vector<Gen> members() const {
    std::vector<Gen> out;
    for (uint32_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctz(b));
    return out;
  }

  static GenSet of_word(const Word& w) {
    GenSet s;
    for (char c : w) s.add(static_cast<Gen>(c));
    return s;
  }

  friend bool operator==(GenSet a, GenSet b) { return a.bits == b.bits; }
  friend bool operator<(GenSet a, GenSet b) { return a.bits < b.bits; }
};

// A Coxeter diagram: generator names plus the symmetric order matrix m.
// m(s,s) = 1, and off-diagonal entries are >= 2 or the infinity sentinel.
class CoxeterDiagram {
 public:
  static constexpr int kInfinity = 0;  // sentinel; never a large integer

  // Text format, one directive per line:
  //   gens: s t u
  //   m: s t 3
  //   m: t u inf
  // Unspecified off-diagonal pairs default to 2.  '#' starts a comment.
  static CoxeterDiagram parse(std::string_view text);
  static CoxeterDiagram load(const std::string& path);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(Gen g) const { return names_[g]; }
  const std::vector<std::string>& names() const { return names_; }

  // m(a,b); kInfinity when no relation binds the pair.
  int order(Gen a, Gen b) const { return m_[a * rank() + b]; }
  bool finite_order(Gen a, Gen b) const { return order(a, b) != kInfinity; }

  std::optional<Gen> find(std::string_view name) const;
  GenSet all() const { return GenSet(rank() == 32 ? ~0u : (1u << rank()) - 1); }

  // Word IO.  Single-token input splits per character when every generator
  // name is one character; otherwise letters are whitespace-separated.
  Word parse_word(std::string_view text) const;
  std::string print_word(const Word& w) const;  // identity prints as "1"
  std::string print_set(GenSet s) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> m_;
};

}  // namespace braidlab
