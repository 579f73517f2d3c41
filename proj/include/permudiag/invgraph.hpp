#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permudiag/permutation.hpp"
#include "permudiag/polynomial.hpp"

namespace permudiag {

/// Graph on [n] whose edges are the inversions of a permutation. The source
/// permutation is kept when the graph is built by inversion_graph(); graphs
/// arising from other constructions carry no source.
class InversionGraph {
 public:
  InversionGraph(int n, std::vector<std::pair<int, int>> edges,
                 std::optional<Permutation> source = std::nullopt);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int a, int b) const { return adj_[a] >> b & 1u; }
  uint32_t neighbors(int v) const { return adj_[v]; }
  const std::optional<Permutation>& source() const { return source_; }

  /// Edge complement on the same vertex set (source not preserved).
  InversionGraph complement() const;
  /// Transitivity law: {i,j},{j,k} edges with i<j<k forces {i,k}.
  bool satisfies_transitivity() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // (a, b) with a < b, sorted
  std::vector<uint32_t> adj_;
  std::optional<Permutation> source_;
};

InversionGraph inversion_graph(const Permutation& w);

enum class ChromaticBasis { Monomial, FallingFactorial };

/// Chromatic polynomial of an inversion graph. The Monomial basis runs
/// deletion-contraction with memoization; FallingFactorial computes the
/// rook-number expansion over O_w and expands it (requires a source
/// permutation, else NotFromPermutation). Both expansions are asserted to
/// agree.
IntPolynomial chromatic_polynomial(const InversionGraph& g,
                                   ChromaticBasis basis);

/// (-1)^n chi(-1); additionally checked against direct enumeration of all
/// 2^|E| orientations when |E| <= 20.
long long count_acyclic_orientations(const InversionGraph& g);

/// Orientation of an inversion graph: direction[e] is true when edge e is
/// directed from its smaller endpoint to its larger one ("right").
struct Orientation {
  InversionGraph graph;
  std::vector<bool> direction;
};

/// Acyclicity test by absence of directed 3-cycles and alternating directed
/// 4-cycles; valid for inversion graphs only (throws NotAnInversionGraph).
bool acyclicity_by_small_cycles(const Orientation& o);

struct SpinePartitionCounts {
  std::vector<long long> spines_by_edges;      // s_0..s_{n-1}
  std::vector<long long> partitions_by_blocks; // p_1..p_n (index 0 = p_1)
};

/// s_k = k-edge spine subgraphs of the complement graph; p_i = partitions of
/// [n] into i independent sets of G_w.
SpinePartitionCounts spine_partition_counts(const Permutation& w);

/// Chordality via perfect-elimination-ordering search.
bool is_chordal(const InversionGraph& g);

}  // namespace permudiag
