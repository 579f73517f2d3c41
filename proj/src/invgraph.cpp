#include "permudiag/invgraph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "permudiag/diagram.hpp"
#include "permudiag/errors.hpp"

namespace permudiag {

InversionGraph::InversionGraph(int n, std::vector<std::pair<int, int>> edges,
                               std::optional<Permutation> source)
    : n_(n), edges_(std::move(edges)), adj_(n + 1, 0), source_(std::move(source)) {
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n_ || a == b) throw IndexOutOfRange("bad edge");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
  }
}

InversionGraph inversion_graph(const Permutation& w) {
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : length_stats(w).inversions) edges.emplace_back(i, j);
  return InversionGraph(w.size(), std::move(edges), w);
}

InversionGraph InversionGraph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n_; ++a) {
    for (int b = a + 1; b <= n_; ++b) {
      if (!has_edge(a, b)) edges.emplace_back(a, b);
    }
  }
  return InversionGraph(n_, std::move(edges));
}

bool InversionGraph::satisfies_transitivity() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!has_edge(i, j)) continue;
      for (int k = j + 1; k <= n_; ++k) {
        if (has_edge(j, k) && !has_edge(i, k)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Chromatic polynomial by deletion-contraction.
//
// Internal graphs are adjacency masks over vertices 0..n-1. The memo key is
// the adjacency encoding after sorting vertices by their color-refinement
// signature; any two graphs that share a key are isomorphic, so caching on
// it is sound even though isomorphic graphs may occasionally miss.
// ---------------------------------------------------------------------------

namespace {

struct SmallGraph {
  int n = 0;
  std::vector<uint32_t> adj;  // bit v set in adj[u] iff edge {u, v}

  int edge_count() const {
    int m = 0;
    for (int v = 0; v < n; ++v) m += std::popcount(adj[v]);
    return m / 2;
  }
};

uint64_t encode_under_order(const SmallGraph& g, const std::vector<int>& ord) {
  uint64_t bits = 0;
  int idx = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++idx) {
      if (g.adj[ord[i]] >> ord[j] & 1u) bits |= uint64_t{1} << idx;
    }
  }
  return (uint64_t(g.n) << 56) | bits;
}

uint64_t refined_key(const SmallGraph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = std::popcount(g.adj[v]);
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u = 0; u < g.n; ++u) {
        if (g.adj[v] >> u & 1u) nb.push_back(color[u]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      next[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    }
    if (next == color) break;
    color = next;
  }
  std::vector<int> ord(g.n);
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  return encode_under_order(g, ord);
}

using ChromaticMemo = std::unordered_map<uint64_t, IntPolynomial>;

// Memo partitioned per worker thread; sweeps stay deterministic because the
// cache only ever stores exact results.
ChromaticMemo& memo() {
  static thread_local ChromaticMemo m;
  return m;
}

IntPolynomial chromatic_connected(SmallGraph g);

IntPolynomial chromatic_rec(const SmallGraph& g) {
  // Split into connected components; chi is multiplicative over them.
  std::vector<int> comp(g.n, -1);
  int ncomp = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.n; ++u) {
        if ((g.adj[v] >> u & 1u) && comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp == 1) return chromatic_connected(g);
  IntPolynomial out = IntPolynomial::one();
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v) {
      if (comp[v] == c) verts.push_back(v);
    }
    SmallGraph h;
    h.n = static_cast<int>(verts.size());
    h.adj.assign(h.n, 0);
    for (int i = 0; i < h.n; ++i) {
      for (int j = i + 1; j < h.n; ++j) {
        if (g.adj[verts[i]] >> verts[j] & 1u) {
          h.adj[i] |= 1u << j;
          h.adj[j] |= 1u << i;
        }
      }
    }
    out = out * chromatic_connected(h);
  }
  return out;
}

IntPolynomial chromatic_connected(SmallGraph g) {
  int m = g.edge_count();
  if (m == 0) return IntPolynomial::monomial(g.n);
  if (m == g.n - 1) {
    // Tree: t (t-1)^{n-1}.
    IntPolynomial out({0, 1});
    for (int i = 0; i < g.n - 1; ++i) out = out * IntPolynomial({-1, 1});
    return out;
  }
  if (m == g.n * (g.n - 1) / 2) return IntPolynomial::falling_factorial(g.n);

  uint64_t key = refined_key(g);
  auto it = memo().find(key);
  if (it != memo().end()) return it->second;

  // Pick the edge with maximal degree sum; contraction then approaches a
  // complete graph quickly.
  int ba = -1, bb = -1, best = -1;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (!(g.adj[a] >> b & 1u)) continue;
      int score = std::popcount(g.adj[a]) + std::popcount(g.adj[b]);
      if (score > best) {
        best = score;
        ba = a;
        bb = b;
      }
    }
  }

  SmallGraph del = g;
  del.adj[ba] &= ~(1u << bb);
  del.adj[bb] &= ~(1u << ba);

  SmallGraph con;
  con.n = g.n - 1;
  con.adj.assign(con.n, 0);
  // Merge bb into ba, then drop bb by relabeling the tail.
  auto relabel = [&](int v) { return v < bb ? v : v - 1; };
  for (int a = 0; a < g.n; ++a) {
    if (a == bb) continue;
    for (int b = a + 1; b < g.n; ++b) {
      if (b == bb) continue;
      bool edge = (g.adj[a] >> b & 1u) != 0;
      if (a == ba) edge = edge || (g.adj[bb] >> b & 1u);
      if (b == ba) edge = edge || (g.adj[bb] >> a & 1u);
      if (edge) {
        int x = relabel(a), y = relabel(b);
        con.adj[x] |= 1u << y;
        con.adj[y] |= 1u << x;
      }
    }
  }
  // ba itself keeps bb's other neighbors.
  for (int b = 0; b < g.n; ++b) {
    if (b == ba || b == bb) continue;
    if (g.adj[bb] >> b & 1u) {
      int x = relabel(ba), y = relabel(b);
      con.adj[x] |= 1u << y;
      con.adj[y] |= 1u << x;
    }
  }

  IntPolynomial out = chromatic_rec(del) - chromatic_rec(con);
  memo().emplace(key, out);
  return out;
}

SmallGraph to_small(const InversionGraph& g) {
  SmallGraph s;
  s.n = g.n();
  s.adj.assign(s.n, 0);
  for (auto [a, b] : g.edges()) {
    s.adj[a - 1] |= 1u << (b - 1);
    s.adj[b - 1] |= 1u << (a - 1);
  }
  return s;
}

long long count_acyclic_direct(const InversionGraph& g) {
  int m = g.edge_count();
  long long count = 0;
  std::vector<int> indeg(g.n() + 1, 0);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    // Kahn peeling.
    std::vector<std::vector<int>> out(g.n() + 1);
    std::fill(indeg.begin(), indeg.end(), 0);
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edges()[e];
      int from = (mask >> e & 1u) ? a : b;
      int to = (mask >> e & 1u) ? b : a;
      out[from].push_back(to);
      indeg[to]++;
    }
    std::vector<int> stack;
    for (int v = 1; v <= g.n(); ++v) {
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
    if (seen == g.n()) ++count;
  }
  return count;
}

}  // namespace

IntPolynomial chromatic_polynomial(const InversionGraph& g,
                                   ChromaticBasis basis) {
  IntPolynomial by_deletion_contraction = chromatic_rec(to_small(g));
  if (basis == ChromaticBasis::Monomial) return by_deletion_contraction;
  if (!g.source()) throw NotFromPermutation();
  const Permutation& w = *g.source();
  RookVector rv = rook_numbers(sw_diagram(w));
  IntPolynomial sum;
  int n = g.n();
  for (int i = 0; i <= n; ++i) {
    sum = sum + IntPolynomial::falling_factorial(i) * rv.r[n - i];
  }
  if (sum != by_deletion_contraction) {
    throw Error("chromatic bases disagree for w = " + w.to_string());
  }
  return sum;
}

long long count_acyclic_orientations(const InversionGraph& g) {
  IntPolynomial chi = chromatic_polynomial(g, ChromaticBasis::Monomial);
  long long value = chi.eval(-1);
  long long ao = (g.n() % 2 == 0) ? value : -value;
  if (g.edge_count() <= 20) {
    long long direct = count_acyclic_direct(g);
    if (direct != ao) {
      throw Error("acyclic orientation count mismatch");
    }
  }
  return ao;
}

bool acyclicity_by_small_cycles(const Orientation& o) {
  const InversionGraph& g = o.graph;
  if (!g.satisfies_transitivity()) throw NotAnInversionGraph();
  if (o.direction.size() != g.edges().size()) {
    throw SizeMismatch("direction vector does not match edge list");
  }
  int n = g.n();
  // dir(a, b) for a < b: true iff directed a -> b.
  std::map<std::pair<int, int>, bool> dir;
  for (size_t e = 0; e < g.edges().size(); ++e) {
    dir[g.edges()[e]] = o.direction[e];
  }
  auto arc = [&](int u, int v) {
    // edge exists and is directed u -> v
    int a = std::min(u, v), b = std::max(u, v);
    auto it = dir.find({a, b});
    if (it == dir.end()) return false;
    return it->second == (u < v);
  };
  // Directed 3-cycles.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (!g.has_edge(b, c) || !g.has_edge(a, c)) continue;
        if (arc(a, b) && arc(b, c) && arc(c, a)) return false;
        if (arc(b, a) && arc(c, b) && arc(a, c)) return false;
      }
    }
  }
  // Alternating directed 4-cycles: the two smallest vertices of the
  // 4-subset are the cycle's local minima.
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          // lows {a, b}, highs {c, d}; two cyclic pairings
          if (arc(a, c) && arc(c, b) && arc(b, d) && arc(d, a)) return false;
          if (arc(a, d) && arc(d, b) && arc(b, c) && arc(c, a)) return false;
        }
      }
    }
  }
  return true;
}

SpinePartitionCounts spine_partition_counts(const Permutation& w) {
  int n = w.size();
  InversionGraph g = inversion_graph(w);
  InversionGraph comp = g.complement();
  SpinePartitionCounts out;
  out.spines_by_edges.assign(n, 0);
  out.partitions_by_blocks.assign(n, 0);

  // Spines: subsets of complement edges in which every vertex has at most
  // one smaller and at most one larger neighbor.
  int m = comp.edge_count();
  if (m > 24) throw SizeBound("complement too large for spine enumeration");
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> smaller(n + 1, 0), larger(n + 1, 0);
    bool ok = true;
    int k = 0;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      auto [a, b] = comp.edges()[e];
      ++k;
      if (++larger[a] > 1 || ++smaller[b] > 1) ok = false;
    }
    if (ok && k < n) out.spines_by_edges[k]++;
  }

  // Partitions of [n] into independent sets, counted by block count, via
  // restricted-growth strings.
  std::vector<int> block_of(n + 1, 0);
  std::vector<uint32_t> block_mask(n + 2, 0);
  std::function<void(int, int)> grow = [&](int v, int blocks) {
    if (v > n) {
      out.partitions_by_blocks[blocks - 1]++;
      return;
    }
    for (int b = 1; b <= blocks + 1; ++b) {
      if (block_mask[b] & g.neighbors(v)) continue;
      block_mask[b] |= 1u << v;
      grow(v + 1, std::max(blocks, b));
      block_mask[b] &= ~(1u << v);
    }
  };
  grow(1, 0);
  return out;
}

bool is_chordal(const InversionGraph& g) {
  int n = g.n();
  std::vector<uint32_t> adj(n + 1);
  for (int v = 1; v <= n; ++v) adj[v] = g.neighbors(v);
  uint32_t alive = 0;
  for (int v = 1; v <= n; ++v) alive |= 1u << v;
  for (int round = 0; round < n; ++round) {
    int pick = 0;
    for (int v = 1; v <= n && !pick; ++v) {
      if (!(alive >> v & 1u)) continue;
      uint32_t nb = adj[v] & alive;
      bool simplicial = true;
      for (int a = 1; a <= n && simplicial; ++a) {
        if (!(nb >> a & 1u)) continue;
        for (int b = a + 1; b <= n && simplicial; ++b) {
          if ((nb >> b & 1u) && !(adj[a] >> b & 1u)) simplicial = false;
        }
      }
      if (simplicial) pick = v;
    }
    if (!pick) return false;
    alive &= ~(1u << pick);
  }
  return true;
}

}  // namespace permudiag
