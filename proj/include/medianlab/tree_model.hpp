#pragma once

#include <string>
#include <vector>

#include "medianlab/algebra.hpp"

namespace medianlab {

/// Ball of radius `depth` in the 4-regular tree (Cayley graph of the free
/// group on a, b; capital letters are inverses), optionally times {+1, -1}.
struct TreeModel {
  MedianAlgebra algebra;
  std::vector<std::string> labels;  // reduced word ("e" for the root), "+"/"-" suffix with sign
  std::size_t tree_size = 0;        // points per sign layer
};

/// Points are listed breadth first in letter order a, A, b, B; with signs the
/// +1 layer precedes the -1 layer. The embedding has one coordinate per tree
/// edge (far endpoint is a prefix of the point) plus one sign coordinate.
/// Throws TooLarge for depth > 5.
TreeModel tree_model(unsigned depth, bool with_sign);

}  // namespace medianlab
