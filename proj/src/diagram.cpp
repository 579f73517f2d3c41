#include "permudiag/diagram.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <numeric>

#include "permudiag/errors.hpp"

namespace permudiag {

Board::Board(int n, std::vector<Cell> cells)
    : n_(n), cells_(std::move(cells)), row_masks_(n + 1, 0) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  for (const Cell& c : cells_) {
    if (c.row < 1 || c.row > n_ || c.col < 1 || c.col > n_) {
      throw IndexOutOfRange("cell outside [n] x [n]");
    }
    row_masks_[c.row] |= 1u << c.col;
  }
}

Board Board::complement() const {
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(n_) * n_ - cells_.size());
  for (int r = 1; r <= n_; ++r) {
    for (int c = 1; c <= n_; ++c) {
      if (!contains(r, c)) cells.push_back({r, c});
    }
  }
  return Board(n_, std::move(cells));
}

std::vector<int> Board::row_cols(int row) const {
  std::vector<int> out;
  for (int c = 1; c <= n_; ++c) {
    if (contains(row, c)) out.push_back(c);
  }
  return out;
}

std::string Board::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto cells = nlohmann::json::array();
  for (const Cell& c : cells_) cells.push_back({c.row, c.col});
  j["cells"] = std::move(cells);
  return j.dump();
}

Board Board::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Cell> cells;
  for (const auto& rc : j.at("cells")) {
    cells.push_back({rc.at(0).get<int>(), rc.at(1).get<int>()});
  }
  return Board(j.at("n").get<int>(), std::move(cells));
}

Board se_diagram(const Permutation& w) {
  int n = w.size();
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) < w(i)) cells.push_back({i, w(j)});
    }
  }
  return Board(n, std::move(cells));
}

Board sw_diagram(const Permutation& w) {
  int n = w.size();
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(j) > w(i)) cells.push_back({i, w(j)});
    }
  }
  return Board(n, std::move(cells));
}

RookVector rook_numbers(const Board& b) {
  int n = b.n();
  // dp[mask] = placements using the processed columns with rooks in
  // exactly the rows of mask.
  std::vector<long long> dp(size_t{1} << n, 0);
  dp[0] = 1;
  for (int c = 1; c <= n; ++c) {
    std::vector<int> rows;
    for (int r = 1; r <= n; ++r) {
      if (b.contains(r, c)) rows.push_back(r - 1);
    }
    if (rows.empty()) continue;
    for (size_t mask = dp.size(); mask-- > 0;) {
      if (dp[mask] == 0) continue;
      for (int r : rows) {
        if (!(mask >> r & 1)) dp[mask | (size_t{1} << r)] += dp[mask];
      }
    }
  }
  RookVector rv;
  rv.r.assign(n + 1, 0);
  for (size_t mask = 0; mask < dp.size(); ++mask) {
    rv.r[std::popcount(mask)] += dp[mask];
  }
  return rv;
}

namespace {

// Full placements avoiding b by direct bitmask DP over permutations.
long long rp_direct(const Board& b) {
  int n = b.n();
  std::vector<long long> dp(size_t{1} << n, 0);
  dp[0] = 1;
  for (size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == 0) continue;
    int row = std::popcount(mask) + 1;
    if (row > n) continue;
    for (int col = 1; col <= n; ++col) {
      if (mask >> (col - 1) & 1) continue;
      if (b.contains(row, col)) continue;
      dp[mask | (size_t{1} << (col - 1))] += dp[mask];
    }
  }
  return dp[dp.size() - 1];
}

}  // namespace

long long rp_avoiding(const Board& b) {
  int n = b.n();
  RookVector rv = rook_numbers(b);
  std::vector<long long> factorial(n + 1, 1);
  for (int i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;
  long long by_inclusion_exclusion = 0;
  for (int i = 0; i <= n; ++i) {
    long long term = rv.r[i] * factorial[n - i];
    by_inclusion_exclusion += (i % 2 == 0) ? term : -term;
  }
  long long by_enumeration = rp_direct(b);
  assert(by_inclusion_exclusion == by_enumeration);
  if (by_inclusion_exclusion != by_enumeration) {
    throw Error("rp_avoiding: inclusion-exclusion and enumeration disagree");
  }
  return by_inclusion_exclusion;
}

Board delete_rc(const Board& b, Cell cell) {
  if (cell.row < 1 || cell.row > b.n() || cell.col < 1 || cell.col > b.n()) {
    throw IndexOutOfRange("delete_rc cell");
  }
  std::vector<Cell> cells;
  for (const Cell& c : b.cells()) {
    if (c.row == cell.row || c.col == cell.col) continue;
    cells.push_back({c.row - (c.row > cell.row ? 1 : 0),
                     c.col - (c.col > cell.col ? 1 : 0)});
  }
  return Board(b.n() - 1, std::move(cells));
}

namespace {

// Backtracking search for a row permutation sigma and column permutation tau
// with sigma(A) tau = B, pruning on row-profile multisets.
bool rc_perm_search(const Board& a, const Board& b) {
  int n = a.n();
  // Row signature: sorted column multiset sizes won't do alone; match rows
  // by size first, then backtrack over column assignment.
  std::vector<int> a_row_size(n + 1), b_row_size(n + 1);
  for (int r = 1; r <= n; ++r) {
    a_row_size[r] = std::popcount(a.row_mask(r));
    b_row_size[r] = std::popcount(b.row_mask(r));
  }
  {
    auto sa = a_row_size, sb = b_row_size;
    std::sort(sa.begin() + 1, sa.end());
    std::sort(sb.begin() + 1, sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> a_col_size(n + 1, 0), b_col_size(n + 1, 0);
  for (const Cell& c : a.cells()) a_col_size[c.col]++;
  for (const Cell& c : b.cells()) b_col_size[c.col]++;
  {
    auto sa = a_col_size, sb = b_col_size;
    std::sort(sa.begin() + 1, sa.end());
    std::sort(sb.begin() + 1, sb.end());
    if (sa != sb) return false;
  }

  // col_map[c] = image column in b, 0 if unassigned.
  std::vector<int> col_map(n + 1, 0), col_used(n + 1, 0), row_used(n + 1, 0);

  // Assign rows of a in order of decreasing size.
  std::vector<int> row_order(n);
  std::iota(row_order.begin(), row_order.end(), 1);
  std::sort(row_order.begin(), row_order.end(),
            [&](int x, int y) { return a_row_size[x] > a_row_size[y]; });

  std::function<bool(int)> assign = [&](int idx) -> bool {
    if (idx == n) return true;
    int ra = row_order[idx];
    std::vector<int> acols = a.row_cols(ra);
    for (int rb = 1; rb <= n; ++rb) {
      if (row_used[rb] || b_row_size[rb] != a_row_size[ra]) continue;
      uint32_t bmask = b.row_mask(rb);
      // Check compatibility with existing column assignments and extend.
      std::vector<int> newly;
      bool ok = true;
      uint32_t btaken = 0;
      for (int c : acols) {
        if (col_map[c]) {
          if (!(bmask >> col_map[c] & 1)) {
            ok = false;
            break;
          }
          btaken |= 1u << col_map[c];
        }
      }
      if (ok) {
        // Map each unassigned column of this row to a distinct free column
        // of rb's mask; try all matchings via recursion on the small list.
        std::vector<int> need;
        for (int c : acols) {
          if (!col_map[c]) need.push_back(c);
        }
        std::vector<int> avail;
        for (int c = 1; c <= n; ++c) {
          if ((bmask >> c & 1) && !col_used[c] && !(btaken >> c & 1)) {
            avail.push_back(c);
          }
        }
        std::function<bool(size_t)> match = [&](size_t t) -> bool {
          if (t == need.size()) {
            row_used[rb] = 1;
            if (assign(idx + 1)) return true;
            row_used[rb] = 0;
            return false;
          }
          int ca = need[t];
          for (int cb : avail) {
            if (col_used[cb]) continue;
            if (a_col_size[ca] != b_col_size[cb]) continue;
            col_map[ca] = cb;
            col_used[cb] = 1;
            if (match(t + 1)) return true;
            col_map[ca] = 0;
            col_used[cb] = 0;
          }
          return false;
        };
        if (match(0)) return true;
      }
    }
    return false;
  };

  // Column permutation must also respect cells jointly; the final column
  // assignment for columns never touched by any row is free, but every cell
  // has been matched row-by-row, and empty columns map to empty columns by
  // the size profile, so reaching idx == n is a complete certificate.
  return assign(0);
}

}  // namespace

bool equivalent_up_to_rc_perm(const Board& a, const Board& b) {
  if (a.n() != b.n()) return false;
  if (a.size() != b.size()) return false;
  return rc_perm_search(a, b);
}

namespace {

// Compact a board onto its occupied rows and columns (deletes empty rows
// and columns but keeps relative order).
std::vector<std::vector<int>> compact_rows(const Board& b) {
  std::vector<int> cols_present;
  for (int c = 1; c <= b.n(); ++c) {
    bool any = false;
    for (int r = 1; r <= b.n(); ++r) {
      if (b.contains(r, c)) any = true;
    }
    if (any) cols_present.push_back(c);
  }
  std::vector<int> col_index(b.n() + 1, 0);
  for (size_t i = 0; i < cols_present.size(); ++i) {
    col_index[cols_present[i]] = static_cast<int>(i) + 1;
  }
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= b.n(); ++r) {
    std::vector<int> cols = b.row_cols(r);
    if (cols.empty()) continue;
    for (int& c : cols) c = col_index[c];
    rows.push_back(std::move(cols));
  }
  return rows;
}

bool has_se_property(const Board& b) {
  for (const Cell& bend : b.cells()) {
    for (int c2 = bend.col + 1; c2 <= b.n(); ++c2) {
      if (!b.contains(bend.row, c2)) continue;
      for (int r2 = bend.row + 1; r2 <= b.n(); ++r2) {
        if (b.contains(r2, bend.col) && !b.contains(r2, c2)) return false;
      }
    }
  }
  return true;
}

// Skew Young shape in French notation, up to removing empty rows/columns:
// every occupied row is a contiguous column interval and both endpoints
// weakly increase downward.
bool is_french_skew(const Board& b) {
  auto rows = compact_rows(b);
  int prev_lo = 0, prev_hi = 0;
  for (const auto& cols : rows) {
    int lo = cols.front(), hi = cols.back();
    if (hi - lo + 1 != static_cast<int>(cols.size())) return false;
    if (lo < prev_lo || hi < prev_hi) return false;
    prev_lo = lo;
    prev_hi = hi;
  }
  return true;
}

// True iff the row supports form a chain under inclusion, i.e. the board is
// a partition shape up to row and column permutation.
bool rows_form_chain(const Board& b, std::vector<int>* sizes) {
  int n = b.n();
  std::vector<uint32_t> masks;
  for (int r = 1; r <= n; ++r) masks.push_back(b.row_mask(r));
  std::sort(masks.begin(), masks.end(), [](uint32_t x, uint32_t y) {
    return std::popcount(x) < std::popcount(y);
  });
  for (size_t i = 0; i + 1 < masks.size(); ++i) {
    if ((masks[i] & masks[i + 1]) != masks[i]) return false;
  }
  if (sizes) {
    sizes->clear();
    for (uint32_t m : masks) sizes->push_back(std::popcount(m));
  }
  return true;
}

}  // namespace

StructuralFlags structural_flags(const Permutation& w) {
  StructuralFlags f;
  Board e = se_diagram(w);
  Board o = sw_diagram(w);
  f.se_property = has_se_property(e);
  f.skew_shape = is_french_skew(e);
  std::vector<int> sizes;
  f.sw_is_partition = rows_form_chain(o, &sizes);
  if (f.sw_is_partition) {
    f.lambda = PartitionShape{sizes};
  }
  return f;
}

}  // namespace permudiag
