#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/certify.hpp"
#include "braidlab/chain_poset.hpp"

namespace braidlab {

// Which group elements label the arrows: those with finite-type support, or
// all of W.
enum class PresentationKind { Fin, Full };

const char* presentation_kind_name(PresentationKind k);

// One-vertex partial 1-category, truncated at a weight cutoff.  Arrows are
// group elements of length <= cutoff; the composite of two arrows is their
// product exactly when the pair is reduced and the product is again an
// arrow.  Arrow 0 is the identity.
class PartialCategory {
 public:
  PartialCategory(const BraidContext& bc, PresentationKind kind, int cutoff);

  const BraidContext& braid() const { return *bc_; }
  PresentationKind kind() const { return kind_; }
  int cutoff() const { return cutoff_; }

  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const CoxeterElement& arrow(int i) const { return arrows_[i]; }
  int weight(int i) const { return arrows_[i].length(); }
  int identity() const { return 0; }
  int find_arrow(const CoxeterElement& w) const;  // -1 when absent

  // -1 when undefined.
  int compose(int a, int b) const { return table_[a * arrows_.size() + b]; }

  // Test hook: overwrite one entry to seed a fault.
  void override_compose(int a, int b, int result);

  // Left fold over the tuple; -1 as soon as a step is undefined.
  int fold_composite(const std::vector<int>& edges) const;

 private:
  const BraidContext* bc_;
  PresentationKind kind_;
  int cutoff_;
  std::vector<CoxeterElement> arrows_;  // ShortLex sorted, identity first
  std::vector<int> table_;
};

// Merges edges pairwise: each entry of merge_order names the position whose
// arrow is composed with its right neighbor.  Returns -1 when any merge is
// undefined.  Every full parenthesization arises as some merge order.
int parenthesized_composite(const PartialCategory& c, std::vector<int> edges,
                            const std::vector<int>& merge_order);

// The set of outcomes over every full parenthesization, sorted; undefined
// folds contribute -1.  A one-element result means all trees agree.
std::vector<int> parenthesization_outcomes(const PartialCategory& c,
                                           const std::vector<int>& edges);

struct AxiomWitness {
  std::vector<int> arrows;
  std::string detail;
};

// Outcome of the exhaustive axiom scan: table well-formedness with neutral
// identity, the two three-arrow filling conditions, and agreement of all
// parenthesizations on tuples up to max_n.
struct AxiomAudit {
  bool p1 = true;
  bool p2 = true;
  bool p0 = true;
  size_t pairs_checked = 0;
  size_t triples_checked = 0;
  size_t tuples_checked = 0;
  std::optional<AxiomWitness> p1_witness;
  std::optional<AxiomWitness> p2_witness;
  std::optional<AxiomWitness> p0_witness;

  bool pass() const { return p1 && p2 && p0; }
};

AxiomAudit audit_axioms(const PartialCategory& c, int max_n = 4);

// Spine objects are tuples of arrow ids (loops at the unique vertex).  A
// morphism x -> y is a weakly increasing map on vertex indices, pinned at
// the endpoints, whose blocks of x-edges compose to the matching y-edge; an
// empty block forces the identity edge.  Returned maps list the images of
// y's vertices 0..ny.
std::vector<std::vector<int>> spine_homs(const PartialCategory& c,
                                         const std::vector<int>& x,
                                         const std::vector<int>& y);

// Vertex-map composition for f : x -> y and g : y -> z.
std::vector<int> compose_vertex_maps(const std::vector<int>& f_star,
                                     const std::vector<int>& g_star);

// All spine objects with at most max_edges edges and total weight at most
// weight_cutoff; nondegenerate drops tuples containing the identity edge.
std::vector<std::vector<int>> enumerate_spines(const PartialCategory& c,
                                               int weight_cutoff, int max_edges,
                                               bool nondegenerate);

// Hypothesis for collapsing degenerate edges: no composable pair of
// nonidentity arrows may compose to the identity.  Throws HypothesisFailed.
void check_no_invertible_pairs(const PartialCategory& c);

// The retraction underlying the degenerate-edge collapse: drops identity
// edges from a tuple.
std::vector<int> contract_identities(const PartialCategory& c, const std::vector<int>& tuple);

// Ordered partitions of a spine into composable blocks, encoded by interior
// cut masks and ordered by refinement (more cuts below fewer).  The
// all-singletons partition must appear and be initial.
struct NecklaceFiber {
  std::vector<uint32_t> cuts;
  Poset order;
  int initial = -1;
  HomotopyCertificate cert;

  bool pass() const { return initial >= 0 && is_contractible(cert.verdict); }
};

NecklaceFiber necklace_fiber(const PartialCategory& c, const std::vector<int>& spine);

// Nondegenerate spines whose braid product is b, with the hom-induced order.
struct SpineFiber {
  std::vector<std::vector<int>> objects;
  Poset order;
};

SpineFiber spine_fiber(const BraidContext& bc, const PartialCategory& c,
                       const PosBraidElement& b);

// Compares the fiber over b with the matching factorization poset (quotients
// finite type and square-free for Fin, square-free for Full): object
// bijection by quotient names, hom sets of size at most one agreeing with
// the poset order, and a contractibility certificate for the fiber.
struct FiberReport {
  bool pass = false;
  PosBraidElement base;
  size_t objects = 0;
  HomotopyCertificate cert;
  std::string detail;  // first discrepancy
};

FiberReport fiber_check(const BraidContext& bc, const PartialCategory& c,
                        const PosBraidElement& b);

// Connected components of weight-k nondegenerate spines under adjacent pair
// merges, compared with the braid elements of length k.
struct Pi0Report {
  int length = 0;
  size_t tuples = 0;
  size_t components = 0;
  size_t braid_elements = 0;
  bool pass = false;
  std::string detail;
};

std::vector<Pi0Report> presentation_pi0(const BraidContext& bc, const PartialCategory& c,
                                        int max_len);

// Test hook: overwrites the first generator-pair composite that admits the
// reversed product, mimicking a corrupted table.  Returns a description of
// the corruption, or nullopt when no entry qualifies.
std::optional<std::string> inject_table_fault(PartialCategory& cat);

}  // namespace braidlab
