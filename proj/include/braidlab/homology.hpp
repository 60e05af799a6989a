#pragma once

#include <cstdint>
#include <vector>

#include "braidlab/simplicial.hpp"

namespace braidlab {

// Reduced Betti numbers, indexed from degree -1 (so reduced[0] is the
// dimension of the reduced homology of the empty complex).
struct Betti {
  std::vector<int64_t> reduced;

  int64_t degree(int d) const {
    int i = d + 1;
    return i >= 0 && i < static_cast<int>(reduced.size()) ? reduced[i] : 0;
  }
  bool all_zero() const {
    for (auto b : reduced)
      if (b) return false;
    return true;
  }
};

// Reduced rational homology via exact rank computation of the boundary
// matrices of the augmented chain complex.
Betti homology(const SimplicialComplex& k);

// Edge-path group probe: spanning tree, one generator per extra edge, one
// relator per triangle, then greedy Tietze simplification within the move
// budget.  trivial == true is a proof; false is merely "not established".
struct Pi1Probe {
  bool trivial = false;
  size_t presentation_size = 0;  // generators + total relator length
};

Pi1Probe pi1_probe(const SimplicialComplex& k, size_t move_budget = 10'000);

}  // namespace braidlab
