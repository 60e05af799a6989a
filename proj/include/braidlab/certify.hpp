#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/chain_poset.hpp"
#include "braidlab/homology.hpp"
#include "braidlab/simplicial.hpp"

namespace braidlab {

enum class Verdict {
  ContractibleByClosure,
  ContractibleByCollapse,
  NotContractible,
  Inconclusive,
};

const char* verdict_name(Verdict v);
inline bool is_contractible(Verdict v) {
  return v == Verdict::ContractibleByClosure || v == Verdict::ContractibleByCollapse;
}

// One verified deformation step: a monotone idempotent self-map of the live
// subposet that moves each recorded element to a comparable image and fixes
// everything else.  Applying the step removes the moved sources.
struct ClosureOp {
  enum class Kind {
    InsertStop,    // chains gain a common stop inserted after the identity
    RemovePoint,   // one irreducible element retracts onto a neighbor
  };
  Kind kind = Kind::RemovePoint;
  Word inserted;                           // InsertStop only: the new stop
  std::vector<std::pair<int, int>> moved;  // x -> f(x) with x != f(x)
  bool inflationary = false;               // images above sources when true
};

struct HomotopyCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ClosureOp> ops;           // closure route, applied in order
  int cone_point = -1;                  // survivor comparable to all others
  std::vector<CollapsePair> collapses;  // collapse route on the order complex
  Betti betti;                          // filled when homology ran
  Pi1Probe pi1;                         // filled when the probe ran

  // "cone", "closure", "collapse", "homology", or "" for a bare Inconclusive.
  std::string certificate_kind() const;
};

enum class ClosureStrategy {
  Auto,           // cone detection, stop insertion, then dismantling
  InsertOnly,     // chain-level stop insertions plus cone detection
  DismantleOnly,  // no chain structure used
};

struct CertifyOptions {
  ClosureStrategy strategy = ClosureStrategy::Auto;
  size_t face_budget = 5'000'000;
  size_t pi1_move_budget = 10'000;
};

// Poset-level contraction: returns a certificate whose ops end in a cone
// point, or nullopt when the search gets stuck.
std::optional<HomotopyCertificate> closure_certificate(const Poset& p);
std::optional<HomotopyCertificate> closure_certificate(
    const BraidContext& bc, const ChainPoset& p,
    ClosureStrategy strategy = ClosureStrategy::Auto);

// Greedy free-face collapsing of the complex down to one vertex.
std::optional<HomotopyCertificate> collapse_certificate(const SimplicialComplex& k);

// Full ladder: closure, then collapse, then exact homology with a
// fundamental-group probe.  NotContractible always carries a nonzero reduced
// Betti number; a vanishing-homology complex that resists every certificate
// stays Inconclusive.
HomotopyCertificate certify(const Poset& p, const CertifyOptions& opt = {});
HomotopyCertificate certify(const BraidContext& bc, const ChainPoset& p,
                            const CertifyOptions& opt = {});

// Replays a closure route against the poset it certifies: every op must be a
// comparative monotone idempotent self-map of the then-live part, and the
// final live part must be a cone over cert.cone_point.
bool verify_closure_witness(const Poset& p, const HomotopyCertificate& cert);

}  // namespace braidlab
