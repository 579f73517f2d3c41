#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permudiag/types.hpp"

namespace permudiag {

/// Permutation of [n] in one-line notation. Positions and values are
/// 1-indexed throughout, matching the usual matrix coordinates for
/// permutation diagrams.
class Permutation {
 public:
  /// Identity permutation of size n.
  explicit Permutation(int n);
  /// Validates that word is a bijection on [n]; throws NotAPermutation.
  explicit Permutation(std::vector<int> word);

  /// Accepts a digit string ("3412", n <= 9) or comma/space-separated
  /// integers ("10,2,3,...").
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }
  /// Value at position i, 1-indexed.
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  bool is_identity() const;
  /// Position of the value v, 1-indexed.
  int position_of(int v) const;
  Permutation inverse() const;
  /// s_i * w: swaps the letters in positions i and i+1.
  Permutation swapped_adjacent(int i) const;
  /// Order-isomorphic (n-1)-permutation after removing position pos.
  Permutation deleted(int pos) const;
  Permutation reversed() const;

  /// Positions i with w_i > w_{i+1}.
  std::vector<int> descents() const;
  /// First descent position, or 0 for the identity.
  int first_descent() const;
  long long length() const;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return word_ < o.word_; }

 private:
  std::vector<int> word_;
};

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

struct LengthStats {
  std::vector<std::pair<int, int>> inversions;  // position pairs (i, j), i < j
  long long ell = 0;
  long long anti_inversions = 0;
};

LengthStats length_stats(const Permutation& w);

/// True iff some subsequence of w is order-isomorphic to p.
/// Exhaustive subsequence scan; throws PatternLongerThanWord if |p| > |w|.
bool contains_pattern(const Permutation& w, const Permutation& p);

struct ClassificationFlags {
  bool grassmannian = false;     // at most one descent
  bool smooth = false;           // avoids 3412 and 4231
  bool gasharov_reiner = false;  // avoids 4231, 35142, 42513, 351624
  bool avoids_321 = false;
  bool avoids_3412 = false;
};

ClassificationFlags classify(const Permutation& w);

enum class PairKind { Light, Heavy, Neither };

/// Classification of the first descent of w as a reduction pair.
/// The descent involves the entries y = (i, w_i) and x = (i+1, w_{i+1}).
/// Some descents satisfy both the light and the heavy conditions; `kind`
/// then reports Heavy, and the two satisfies_* flags carry the full story.
struct ReductionPairInfo {
  int descent_position = 0;
  PairKind kind = PairKind::Neither;
  Cell y;
  Cell x;
  int j = 0;          // minimal index with w_j > w_{i+1}; meaningful when heavy
  int k_witness = 0;  // witness for the heavy interval condition
  bool satisfies_light = false;
  bool satisfies_heavy = false;
};

/// Throws IdentityHasNoDescent when w is the identity.
ReductionPairInfo reduction_pair(const Permutation& w);

/// The (n-1)-permutation extracted from a heavy first descent: remove the
/// entry at position i+1 and cycle w_j into position i. Requires the heavy
/// conditions to hold (throws NotHeavyReductionPair).
Permutation v_of(const Permutation& w);

}  // namespace permudiag
