// Independent brute-force oracles used only by tests. Everything here is
// deliberately written along different lines from the library code it
// cross-checks: subset enumeration instead of DP, whole-graph DFS instead
// of cycle. patterns, cover closure instead of the dominance criterion.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "permudiag/diagram.hpp"
#include "permudiag/invgraph.hpp"
#include "permudiag/permutation.hpp"
#include "permudiag/polynomial.hpp"

namespace oracles {

using permudiag::Board;
using permudiag::Cell;
using permudiag::IntPolynomial;
using permudiag::Permutation;

// Pattern containment by iterating k-subsets of positions as bitmasks.
inline bool contains_pattern_bitmask(const Permutation& w,
                                     const Permutation& p) {
  int n = w.size(), k = p.size();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sub.push_back(w(i + 1));
    }
    bool iso = true;
    for (int a = 0; a < k && iso; ++a) {
      for (int b = a + 1; b < k && iso; ++b) {
        if ((sub[a] < sub[b]) != (p(a + 1) < p(b + 1))) iso = false;
      }
    }
    if (iso) return true;
  }
  return false;
}

// Rook numbers by enumerating all cell subsets.
inline std::vector<long long> rook_numbers_subsets(const Board& b) {
  int m = b.size();
  std::vector<long long> r(b.n() + 1, 0);
  const auto& cells = b.cells();
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Cell> chosen;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) chosen.push_back(cells[i]);
    }
    bool ok = true;
    for (size_t a = 0; a < chosen.size() && ok; ++a) {
      for (size_t c = a + 1; c < chosen.size() && ok; ++c) {
        if (chosen[a].row == chosen[c].row || chosen[a].col == chosen[c].col) {
          ok = false;
        }
      }
    }
    if (ok && chosen.size() < r.size()) r[chosen.size()]++;
  }
  return r;
}

// Full n-rook placements avoiding b, by scanning all permutations.
inline long long rp_avoiding_permanent(const Board& b) {
  long long count = 0;
  for (const Permutation& s : permudiag::all_permutations(b.n())) {
    bool ok = true;
    for (int i = 1; i <= b.n() && ok; ++i) {
      if (b.contains(i, s(i))) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// Acyclicity of an orientation via Kahn-style peeling.
inline bool dfs_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (auto [a, c] : arcs) {
    out[a].push_back(c);
    indeg[c]++;
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int u : out[v]) {
      if (--indeg[u] == 0) stack.push_back(u);
    }
  }
  return seen == n;
}

// Chromatic polynomial via the subset expansion over edge sets:
// chi(t) = sum_{S subset E} (-1)^{|S|} t^{c(S)}.
inline IntPolynomial chromatic_subset_expansion(
    int n, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  std::vector<long long> coeff(n + 1, 0);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> parent(n + 1);
    for (int v = 1; v <= n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int comps = n;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    coeff[comps] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return IntPolynomial(coeff);
}

// Bruhat order as the reflexive-transitive closure of length-raising
// transposition covers, computed over all of S_n.
class BruhatCoverClosure {
 public:
  explicit BruhatCoverClosure(int n) : perms_(permudiag::all_permutations(n)) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms_.size(); ++i) index[perms_[i].word()] = i;
    leq_.assign(perms_.size(), std::vector<char>(perms_.size(), 0));
    for (size_t i = 0; i < perms_.size(); ++i) leq_[i][i] = 1;
    // Repeatedly propagate covers u -> u * t_{ab} with length +1.
    std::vector<std::vector<int>> covers_up(perms_.size());
    for (size_t i = 0; i < perms_.size(); ++i) {
      const Permutation& u = perms_[i];
      for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
          std::vector<int> word = u.word();
          std::swap(word[a - 1], word[b - 1]);
          Permutation v(word);
          if (v.length() == u.length() + 1) covers_up[i].push_back(index[word]);
        }
      }
    }
    // Close by increasing length.
    std::vector<size_t> order(perms_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return perms_[x].length() > perms_[y].length();
    });
    for (size_t i : order) {
      for (int up : covers_up[i]) {
        for (size_t k = 0; k < perms_.size(); ++k) {
          if (leq_[up][k]) leq_[i][k] = 1;
        }
      }
    }
    for (size_t i = 0; i < perms_.size(); ++i) index_[perms_[i].word()] = i;
  }

  bool leq(const Permutation& u, const Permutation& w) const {
    return leq_[index_.at(u.word())][index_.at(w.word())];
  }

 private:
  std::vector<Permutation> perms_;
  std::map<std::vector<int>, size_t> index_;
  std::vector<std::vector<char>> leq_;
};

}  // namespace oracles
