#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/poset.hpp"

namespace braidlab {

// Which factorizations of b are admitted, by a predicate on every quotient.
enum class WordVariant {
  Full,               // every chain
  Stripped,           // every chain except 1 < b itself
  Reduced,            // quotients square-free
  FiniteType,         // quotient supports of finite type
  FiniteTypeReduced,  // both of the above
  Delta,              // quotients are lifted longest elements
};

const char* variant_code(WordVariant v);
WordVariant variant_from_code(const std::string& code);

// A strict chain 1 < b_1 < ... < b_{n-1} < b of left divisors, stored as the
// interior stops.  The equivalent sequence form lists the n quotients of
// consecutive stops; either determines the other.
struct FactorizationChain {
  std::vector<PosBraidElement> stops;      // interior only
  std::vector<PosBraidElement> quotients;  // full sequence, multiplies to b
};

// Recomputes one description from the other (for round-trip checks).
std::vector<PosBraidElement> chain_to_quotients(const BraidContext& bc,
                                                const PosBraidElement& b,
                                                const std::vector<PosBraidElement>& stops);
std::vector<PosBraidElement> quotients_to_stops(const BraidContext& bc,
                                                const std::vector<PosBraidElement>& quotients);

// The poset of admitted chains, ordered opposite to stop-set containment:
// x <= y iff every stop of y is a stop of x (finer chains below coarser).
struct ChainPoset {
  PosBraidElement base;
  WordVariant variant = WordVariant::Full;
  std::vector<PosBraidElement> divisors;      // interior stop universe
  std::vector<FactorizationChain> chains;     // aligned with poset elements
  std::vector<std::vector<uint64_t>> masks;   // stop sets over `divisors`
  Poset order;

  int find_mask(const std::vector<uint64_t>& mask) const;  // -1 when absent
  ChainPoset induced(const std::vector<int>& keep) const;

  std::string label(const BraidContext& bc, int i) const;  // "(s,ts)"

 private:
  mutable std::unordered_map<std::string, int> mask_index_;
};

ChainPoset build_word_poset(const BraidContext& bc, const PosBraidElement& b,
                            WordVariant variant, size_t element_budget = 50'000);

// Sequence-form order: a single weakly increasing surjection collapses
// blocks of x's quotients onto y's; block lengths are forced, so at most one
// candidate exists.  Agrees with the stop-set order (checked in tests).
bool sequence_leq(const BraidContext& bc, const FactorizationChain& x,
                  const FactorizationChain& y);

std::string to_dot(const BraidContext& bc, const ChainPoset& p);

}  // namespace braidlab
