#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permudiag/permutation.hpp"
#include "permudiag/polynomial.hpp"
#include "permudiag/types.hpp"

namespace permudiag {

/// Finite cell set inside [n] x [n], stored as a sorted cell list plus
/// per-row column bitmasks (n <= 16 by the sweep caps). Immutable after
/// construction.
class Board {
 public:
  explicit Board(int n) : n_(n), row_masks_(n + 1, 0) {}
  Board(int n, std::vector<Cell> cells);

  int n() const { return n_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(int row, int col) const {
    return (row_masks_[row] >> col) & 1u;
  }
  uint32_t row_mask(int row) const { return row_masks_[row]; }
  /// Cells of ([n] x [n]) \ this.
  Board complement() const;
  /// Column indices occupied in the given row, ascending.
  std::vector<int> row_cols(int row) const;

  bool operator==(const Board&) const = default;

  /// JSON: {"n": n, "cells": [[r, c], ...]} with cells sorted
  /// lexicographically; bit-exact across runs.
  std::string to_json() const;
  static Board from_json(const std::string& text);

 private:
  int n_;
  std::vector<Cell> cells_;
  std::vector<uint32_t> row_masks_;
};

/// SE (Rothe) diagram E_w: cells (i, w_j) with i < j and w_j < w_i.
Board se_diagram(const Permutation& w);
/// SW diagram O_w: cells (i, w_j) with i < j and w_j > w_i.
Board sw_diagram(const Permutation& w);

struct RookVector {
  std::vector<long long> r;  // r[k] = k-rook placements, k = 0..n
  bool operator==(const RookVector&) const = default;
};

/// Non-attacking rook placement counts by size, via column DP over
/// row-occupancy bitmasks.
RookVector rook_numbers(const Board& b);

/// Placements of n non-attacking rooks on ([n] x [n]) \ B, computed both by
/// inclusion-exclusion over rook numbers and by direct enumeration; the two
/// routes must agree.
long long rp_avoiding(const Board& b);

/// Board on [n-1] x [n-1] after removing the given row and column.
Board delete_rc(const Board& b, Cell cell);

/// True iff some row permutation and column permutation map a onto b.
bool equivalent_up_to_rc_perm(const Board& a, const Board& b);

struct PartitionShape {
  std::vector<int> parts;  // weakly increasing
  bool operator==(const PartitionShape&) const = default;
};

struct StructuralFlags {
  bool se_property = false;
  bool skew_shape = false;
  bool sw_is_partition = false;
  std::optional<PartitionShape> lambda;
};

StructuralFlags structural_flags(const Permutation& w);

}  // namespace permudiag
