#include "braidlab/chain_poset.hpp"

#include <algorithm>
#include <sstream>

namespace braidlab {

const char* variant_code(WordVariant v) {
  switch (v) {
    case WordVariant::Full: return "full";
    case WordVariant::Stripped: return "s";
    case WordVariant::Reduced: return "r";
    case WordVariant::FiniteType: return "f";
    case WordVariant::FiniteTypeReduced: return "fr";
    case WordVariant::Delta: return "delta";
  }
  return "?";
}

WordVariant variant_from_code(const std::string& code) {
  if (code == "full") return WordVariant::Full;
  if (code == "s") return WordVariant::Stripped;
  if (code == "r") return WordVariant::Reduced;
  if (code == "f") return WordVariant::FiniteType;
  if (code == "fr") return WordVariant::FiniteTypeReduced;
  if (code == "delta") return WordVariant::Delta;
  throw Error("unknown variant '" + code + "'");
}

namespace {

bool quotient_admitted(const BraidContext& bc, WordVariant v, const PosBraidElement& q) {
  switch (v) {
    case WordVariant::Full:
    case WordVariant::Stripped:
      return true;
    case WordVariant::Reduced:
      return bc.is_reduced(q);
    case WordVariant::FiniteType:
      return bc.cox().is_finite_type(bc.support(q));
    case WordVariant::FiniteTypeReduced:
      return bc.is_reduced(q) && bc.cox().is_finite_type(bc.support(q));
    case WordVariant::Delta:
      return bc.delta_subset(q).has_value();
  }
  return false;
}

std::string mask_key(const std::vector<uint64_t>& mask) {
  return std::string(reinterpret_cast<const char*>(mask.data()), mask.size() * sizeof(uint64_t));
}

bool mask_subset(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

std::vector<PosBraidElement> chain_to_quotients(const BraidContext& bc,
                                                const PosBraidElement& b,
                                                const std::vector<PosBraidElement>& stops) {
  std::vector<PosBraidElement> out;
  PosBraidElement prev;  // identity
  for (const auto& stop : stops) {
    out.push_back(bc.quotient(prev, stop));
    prev = stop;
  }
  if (!(prev == b)) out.push_back(bc.quotient(prev, b));
  return out;
}

std::vector<PosBraidElement> quotients_to_stops(const BraidContext& bc,
                                                const std::vector<PosBraidElement>& quotients) {
  std::vector<PosBraidElement> stops;
  PosBraidElement acc;
  for (size_t i = 0; i + 1 < quotients.size(); ++i) {
    acc = bc.multiply(acc, quotients[i]);
    stops.push_back(acc);
  }
  return stops;
}

int ChainPoset::find_mask(const std::vector<uint64_t>& mask) const {
  if (mask_index_.empty() && !chains.empty()) {
    for (size_t i = 0; i < masks.size(); ++i) mask_index_[mask_key(masks[i])] = static_cast<int>(i);
  }
  auto it = mask_index_.find(mask_key(mask));
  return it == mask_index_.end() ? -1 : it->second;
}

ChainPoset ChainPoset::induced(const std::vector<int>& keep) const {
  ChainPoset sub;
  sub.base = base;
  sub.variant = variant;
  sub.divisors = divisors;
  for (int i : keep) {
    sub.chains.push_back(chains[i]);
    sub.masks.push_back(masks[i]);
  }
  sub.order = order.induced(keep);
  return sub;
}

std::string ChainPoset::label(const BraidContext& bc, int i) const {
  const auto& q = chains[i].quotients;
  std::string out = "(";
  for (size_t k = 0; k < q.size(); ++k) {
    if (k) out += ",";
    out += bc.diagram().print_word(q[k].canonical);
  }
  return out + ")";
}

ChainPoset build_word_poset(const BraidContext& bc, const PosBraidElement& b,
                            WordVariant variant, size_t element_budget) {
  ChainPoset p;
  p.base = b;
  p.variant = variant;
  for (const auto& d : bc.prefixes(b))
    if (!d.is_identity() && !(d == b)) p.divisors.push_back(d);

  const int nd = static_cast<int>(p.divisors.size());
  const int words = std::max(1, (nd + 63) / 64);
  const bool prune = variant != WordVariant::Full && variant != WordVariant::Stripped;

  // Strict divisibility and admissibility of quotients between divisors.
  std::vector<std::vector<char>> step_ok(nd + 1, std::vector<char>(nd, 0));
  for (int j = 0; j < nd; ++j)
    step_ok[0][j] = !prune || quotient_admitted(bc, variant, p.divisors[j]);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) {
      if (p.divisors[i].length() >= p.divisors[j].length()) continue;
      if (!bc.left_divides(p.divisors[i], p.divisors[j])) continue;
      step_ok[i + 1][j] =
          !prune || quotient_admitted(bc, variant, bc.quotient(p.divisors[i], p.divisors[j]));
    }
  std::vector<char> tail_ok(nd + 1, 0);
  if (b.is_identity()) {
    tail_ok[0] = 1;  // the one-point poset on the empty chain
  } else {
    tail_ok[0] = !prune || quotient_admitted(bc, variant, b);
    for (int i = 0; i < nd; ++i)
      tail_ok[i + 1] = !prune || quotient_admitted(bc, variant, bc.quotient(p.divisors[i], b));
  }

  std::vector<int> stack;
  auto emit = [&](const std::vector<int>& interior) {
    if (variant == WordVariant::Stripped && interior.empty()) return;
    FactorizationChain chain;
    std::vector<uint64_t> mask(words, 0);
    for (int i : interior) {
      chain.stops.push_back(p.divisors[i]);
      mask[i / 64] |= uint64_t(1) << (i % 64);
    }
    chain.quotients = chain_to_quotients(bc, b, chain.stops);
    p.chains.push_back(std::move(chain));
    p.masks.push_back(std::move(mask));
    if (p.chains.size() > element_budget)
      throw PosetTooLarge("chain count exceeded budget of " + std::to_string(element_budget));
  };

  // Depth-first over strictly length-increasing divisor sequences; partial
  // quotients are validated as soon as both endpoints are fixed, the final
  // quotient at emission time.
  auto dfs = [&](auto&& self, int last) -> void {
    if (tail_ok[last + 1]) emit(stack);
    for (int j = last + 1; j < nd; ++j) {
      if (!step_ok[last + 1][j]) continue;
      stack.push_back(j);
      self(self, j);
      stack.pop_back();
    }
  };
  dfs(dfs, -1);

  const int n = static_cast<int>(p.chains.size());
  p.order = Poset(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && mask_subset(p.masks[j], p.masks[i]) && p.masks[i] != p.masks[j])
        p.order.add_less(i, j);
  return p;
}

bool sequence_leq(const BraidContext& bc, const FactorizationChain& x,
                  const FactorizationChain& y) {
  const auto& qx = x.quotients;
  const auto& qy = y.quotients;
  size_t i = 0;
  for (const auto& target : qy) {
    PosBraidElement acc;
    int want = target.length();
    while (acc.length() < want) {
      if (i >= qx.size()) return false;
      acc = bc.multiply(acc, qx[i++]);
    }
    if (!(acc == target)) return false;
  }
  return i == qx.size();
}

std::string to_dot(const BraidContext& bc, const ChainPoset& p) {
  std::ostringstream out;
  out << "digraph chains {\n  rankdir=BT;\n";
  for (size_t i = 0; i < p.chains.size(); ++i)
    out << "  n" << i << " [label=\"" << p.label(bc, static_cast<int>(i)) << "\"];\n";
  for (auto [i, j] : p.order.covers()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace braidlab
