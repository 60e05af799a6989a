#pragma once

#include <optional>
#include <vector>

#include "braidlab/poset.hpp"

namespace braidlab {

// Finite abstract simplicial complex.  Faces are sorted vertex lists, stored
// complete (every subface present) and grouped by dimension.
struct SimplicialComplex {
  int n_vertices = 0;
  std::vector<std::vector<std::vector<int>>> by_dim;  // by_dim[d] sorted lexicographically

  int dim() const { return static_cast<int>(by_dim.size()) - 1; }
  size_t face_count() const;
  bool empty() const { return by_dim.empty(); }

  // Faces with no proper coface; no facet contains another.
  std::vector<std::vector<int>> facets() const;
};

// Downward closure of the given facets.  Rejects facet lists with
// containments and out-of-range vertices.
SimplicialComplex complex_from_facets(int n_vertices, const std::vector<std::vector<int>>& facets);

// Nerve of a poset: vertices are elements, faces are chains.
SimplicialComplex order_complex(const Poset& p, size_t face_budget = 5'000'000);

// One elementary collapse: free face and its unique proper coface.
struct CollapsePair {
  std::vector<int> free_face;
  std::vector<int> coface;
};

// Greedy collapse, highest dimension first.  Succeeds when everything but a
// single vertex is removed; returns the sequence of collapses.
std::optional<std::vector<CollapsePair>> greedy_collapse(const SimplicialComplex& k);

}  // namespace braidlab
