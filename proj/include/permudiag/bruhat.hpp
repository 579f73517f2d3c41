#pragma once

#include <vector>

#include "permudiag/permutation.hpp"
#include "permudiag/polynomial.hpp"

namespace permudiag {

/// Strong Bruhat order via the prefix-dominance criterion.
/// Throws SizeMismatch when |u| != |w|.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// The interval [identity, top], grouped by length.
struct BruhatInterval {
  Permutation top;
  std::vector<Permutation> members;          // lexicographic order
  std::vector<long long> counts_by_length;   // index = ell(u)
};

/// Built by filtering all of S_n through bruhat_leq; n <= 8 (SizeBound).
BruhatInterval bruhat_interval(const Permutation& w);

/// Poincare polynomial P_w(t) = sum over u <= w of t^ell(u).
IntPolynomial poincare(const Permutation& w);

/// Shared Poincare table for sweeps over a whole symmetric group.
class PoincareTable {
 public:
  explicit PoincareTable(int n);
  const std::vector<Permutation>& perms() const { return perms_; }
  /// Interval membership for perms()[i] <= perms()[j].
  bool leq(size_t i, size_t j) const { return leq_[j][i]; }
  const IntPolynomial& poly(const Permutation& w) const;
  long long interval_size(const Permutation& w) const;

 private:
  int n_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<char>> leq_;  // leq_[j][i]: perms_[i] <= perms_[j]
  std::vector<IntPolynomial> poly_;
  size_t index_of(const Permutation& w) const;
};

struct PoincareRecursionReport {
  PairKind kind = PairKind::Neither;
  bool applicable = false;
  bool light_identity = false;       // P_w = P_{s_i w} + t^d P_{w-y}
  bool heavy_four_term = false;      // the inclusion-exclusion identity
  bool heavy_simplified = false;     // P_w = t P_{s_i w} + P_{v(w)}
  bool all_hold = false;
};

/// Checks the applicable reduction-pair identities for a GR permutation
/// whose first descent is a reduction pair; NotApplicable otherwise.
PoincareRecursionReport verify_poincare_recursions(const Permutation& w);

/// Every u <= w has u_j < w_i for j < i and u_j > w_{i+1} for j > i+1,
/// where i is the first descent. Requires the descent to be a reduction
/// pair (NotApplicable otherwise).
bool sjostrand_box_check(const Permutation& w);

}  // namespace permudiag
