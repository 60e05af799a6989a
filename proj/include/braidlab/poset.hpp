#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

// Square bit matrix with 64-bit row blocks.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), stride_((n + 63) / 64), bits_(size_t(n) * stride_, 0) {}

  bool get(int i, int j) const { return bits_[size_t(i) * stride_ + j / 64] >> (j % 64) & 1; }
  void set(int i, int j) { bits_[size_t(i) * stride_ + j / 64] |= uint64_t(1) << (j % 64); }
  const uint64_t* row(int i) const { return bits_.data() + size_t(i) * stride_; }
  int stride() const { return stride_; }

 private:
  int n_ = 0;
  int stride_ = 0;
  std::vector<uint64_t> bits_;
};

// Finite poset on elements 0..n-1.  Stores the full reflexive order relation
// in both directions for fast up-set and down-set scans.  All topological
// operations downstream consume only this comparability data.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n);

  int size() const { return n_; }
  bool leq(int i, int j) const { return i == j || up_.get(i, j); }
  bool strictly_less(int i, int j) const { return i != j && up_.get(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  // Declare i < j.  Callers add the full transitive relation; validate()
  // checks the axioms afterwards.
  void add_less(int i, int j);

  // Reflexivity is implicit; verifies antisymmetry and transitivity.
  bool validate() const;

  Poset opposite() const;
  Poset induced(const std::vector<int>& keep) const;

  // Hasse diagram: covering pairs (i, j) with i < j.
  std::vector<std::pair<int, int>> covers() const;

  // Element comparable to everything, if any: makes the order complex a cone.
  std::optional<int> cone_point() const;

  const uint64_t* up_row(int i) const { return up_.row(i); }
  const uint64_t* down_row(int i) const { return down_.row(i); }
  int stride() const { return up_.stride(); }

 private:
  int n_ = 0;
  BitMatrix up_;    // up_.get(i,j) iff i < j strictly
  BitMatrix down_;  // transpose
};

// One comparative monotone idempotent retraction step: `removed` maps to
// `image`, everything else stays put.  When `inflationary` the image lies
// above the removed point, otherwise below.
struct RetractionStep {
  int removed;
  int image;
  bool inflationary;
};

struct DismantleResult {
  std::vector<RetractionStep> steps;
  std::vector<int> core;  // elements that survived, ascending
};

// Greedily removes irreducible points: x goes away when its strict up-set
// (or down-set) within the live part has a minimum (maximum).  Each removal
// is a closure operator on the remaining subposet, hence a deformation
// retraction of the nerve.
DismantleResult dismantle(const Poset& p);

// Verifies that a retraction sequence is sound for p: each step's self-map
// is monotone, idempotent, comparative, and lands in the still-live part.
bool verify_retraction(const Poset& p, const std::vector<RetractionStep>& steps);

enum class SliceSide {
  Above,  // elements x with t <= f(x)
  Below,  // elements x with f(x) <= t
};

// Comma construction along a monotone map f: dom -> cod given by element
// images.  Returns the kept dom indices; the induced subposet comes from
// Poset::induced.
std::vector<int> slice_elements(const Poset& dom, const Poset& cod,
                                const std::vector<int>& f, int t, SliceSide side);

// Poset of subsets of {0..k-1} ordered by inclusion, as bit masks in value
// order; optionally without the empty set.
Poset subset_poset(int k, bool include_empty, std::vector<uint32_t>* masks_out);

}  // namespace braidlab
