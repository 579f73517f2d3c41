#pragma once

#include <compare>
#include <cstdint>

namespace permudiag {

// Cell of a board, 1-indexed (row, col) as in matrix coordinates:
// row 1 is the top row, column 1 the leftmost column.
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

}  // namespace permudiag
