#pragma once

#include <optional>
#include <vector>

#include "permudiag/diagram.hpp"
#include "permudiag/permutation.hpp"
#include "permudiag/polynomial.hpp"
#include "permudiag/types.hpp"

namespace permudiag {

struct PrimeField {
  int p;
  explicit PrimeField(int p);  // trial-division primality check (NotPrime)
};

/// n x n matrix over F_p, row-major, entries in 0..p-1. When a support
/// board is present, entries on its cells must be zero.
struct PrimeFieldMatrix {
  int n;
  PrimeField field;
  std::vector<int> entries;
  std::optional<Board> zero_on;

  PrimeFieldMatrix(int n, PrimeField field);
  int at(int r, int c) const { return entries[(r - 1) * n + (c - 1)]; }
  void set(int r, int c, int v);
};

/// Row rank by Gaussian elimination with modular inverses.
int rank(const PrimeFieldMatrix& a);

inline constexpr long long kDefaultNodeBudget = 1'000'000'000;

/// Number of n x n matrices over F_p with support avoiding D and the given
/// rank, by row-wise backtracking over an echelon basis of the partial row
/// space. Refuses with SearchTooLarge when the p^(free cells) leaf estimate
/// exceeds the budget.
long long count_matrices(int n, const Board& avoid, const PrimeField& field,
                         int target_rank,
                         long long budget = kDefaultNodeBudget);

/// mat_w(p): invertible matrices avoiding O_w.
long long mat_eval(const Permutation& w, const PrimeField& field,
                   long long budget = kDefaultNodeBudget);

/// M_w(p) = mat_w(p) / (p-1)^n; the division must be exact (NonDivisible).
long long M_eval(const Permutation& w, const PrimeField& field,
                 long long budget = kDefaultNodeBudget);

/// q^{C(n,2)+ell(w)} P_w(1/q) as a polynomial; GR permutations only
/// (NotGasharovReiner).
IntPolynomial M_poly_theorem(const Permutation& w);

enum class RecursionMode { Polynomial, Evaluation };

struct MatrixRecursionReport {
  PairKind kind = PairKind::Neither;
  RecursionMode mode = RecursionMode::Polynomial;
  bool light_identity = false;  // M_w = q M_{s_i w} + q^{n-1} M_{w-y}
  bool heavy_identity = false;  // M_w = M_{s_i w} + q^n M_{v(w)}
  std::vector<int> primes_checked;
  bool all_hold = false;
};

/// Light/heavy matrix recursions, as polynomial identities when every
/// participant is GR, otherwise numerically at p in {2, 3}.
MatrixRecursionReport verify_matrix_recursions(
    const Permutation& w, long long budget = kDefaultNodeBudget);

/// #{A in M(n, O_w) : A_z != 0} = (p-1) p^n #M(n-1, O_w - z) at a heavy
/// first descent, with z = (i+1, w_i).
bool verify_gauss_elim_count(const Permutation& w, const PrimeField& field,
                             long long budget = kDefaultNodeBudget);

/// The difference lemma #M(n,D) - p #M(n,D+y) = sum of S_{a->0} - S_{0->a}
/// over invertible minors, verified by full enumeration (n <= 3).
bool verify_qdiff_lemma(int n, const Board& d, Cell y,
                        const PrimeField& field);

struct LowRankReport {
  long long count = 0;
  bool divisible = false;
  long long quotient = 0;
  long long rook_count = 0;
  bool congruent = false;
};

/// Divisibility of the rank-r count by (p-1)^r and the mod-(p-1) congruence
/// of the quotient with r-rook placements on the complement of O_w.
LowRankReport lowrank_divisibility(const Permutation& w, int r,
                                   const PrimeField& field,
                                   long long budget = kDefaultNodeBudget);

}  // namespace permudiag
