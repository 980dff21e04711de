#pragma once

#include "sbo/rational_function.hpp"

namespace sbo {

using RFMatrix = std::vector<std::vector<RationalFunction>>;

// In-place reduced row echelon form over the rational function field,
// scanning columns in `order` (all columns ascending when empty). Returns
// the pivot columns, one per nonzero row.
std::vector<int> rref(RFMatrix& m, std::size_t cols, std::vector<int> order = {});

std::size_t rank(RFMatrix m, std::size_t cols);

// Nullspace basis; vector for free column f has entry 1 at f.
std::vector<std::vector<RationalFunction>> nullspace(RFMatrix m, std::size_t cols, std::vector<int> order = {});

}  // namespace sbo
