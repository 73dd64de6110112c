#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tlb/core.hpp"
#include "tlb/relation.hpp"

namespace tlb {

  // (coordinate, value) pairs with strictly increasing coordinates.
  using SparseVector = std::vector<std::pair<Index, std::int64_t>>;

  // Rank over the rationals by fraction-free elimination. Each incoming
  // vector is reduced against the stored echelon rows, pivoting on the first
  // nonzero coordinate, and divided by the gcd of its entries.
  std::size_t exact_rank(std::vector<SparseVector> const& vectors);

  // Row-major flattening of a p^n x p^n relation into a 0-1 vector.
  SparseVector flatten(Relation const& r);

}  // namespace tlb
