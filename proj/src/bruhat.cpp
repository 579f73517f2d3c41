#include "permudiag/bruhat.hpp"

#include <algorithm>
#include <map>

#include "permudiag/errors.hpp"

namespace permudiag {

namespace {

// Sorted prefix table: row i holds the sorted first i values.
std::vector<std::vector<int>> sorted_prefixes(const Permutation& w) {
  int n = w.size();
  std::vector<std::vector<int>> table(n + 1);
  std::vector<int> acc;
  for (int i = 1; i <= n; ++i) {
    acc.insert(std::upper_bound(acc.begin(), acc.end(), w(i)), w(i));
    table[i] = acc;
  }
  return table;
}

bool dominated(const std::vector<std::vector<int>>& u,
               const std::vector<std::vector<int>>& w) {
  for (size_t i = 1; i < u.size(); ++i) {
    for (size_t k = 0; k < u[i].size(); ++k) {
      if (u[i][k] > w[i][k]) return false;
    }
  }
  return true;
}

}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw SizeMismatch();
  return dominated(sorted_prefixes(u), sorted_prefixes(w));
}

BruhatInterval bruhat_interval(const Permutation& w) {
  if (w.size() > 8) throw SizeBound("interval enumeration capped at n = 8");
  BruhatInterval interval{w, {}, {}};
  auto wp = sorted_prefixes(w);
  interval.counts_by_length.assign(w.length() + 1, 0);
  for (const auto& u : all_permutations(w.size())) {
    if (dominated(sorted_prefixes(u), wp)) {
      interval.counts_by_length[u.length()]++;
      interval.members.push_back(u);
    }
  }
  return interval;
}

IntPolynomial poincare(const Permutation& w) {
  return IntPolynomial(bruhat_interval(w).counts_by_length);
}

PoincareTable::PoincareTable(int n) : n_(n), perms_(all_permutations(n)) {
  std::vector<std::vector<std::vector<int>>> prefixes;
  prefixes.reserve(perms_.size());
  for (const auto& p : perms_) prefixes.push_back(sorted_prefixes(p));
  leq_.assign(perms_.size(), std::vector<char>(perms_.size(), 0));
  poly_.resize(perms_.size());
  for (size_t j = 0; j < perms_.size(); ++j) {
    std::vector<long long> counts(perms_[j].length() + 1, 0);
    for (size_t i = 0; i < perms_.size(); ++i) {
      if (dominated(prefixes[i], prefixes[j])) {
        leq_[j][i] = 1;
        counts[perms_[i].length()]++;
      }
    }
    poly_[j] = IntPolynomial(counts);
  }
}

size_t PoincareTable::index_of(const Permutation& w) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), w);
  if (it == perms_.end() || !(*it == w)) throw SizeMismatch("wrong n");
  return static_cast<size_t>(it - perms_.begin());
}

const IntPolynomial& PoincareTable::poly(const Permutation& w) const {
  return poly_[index_of(w)];
}

long long PoincareTable::interval_size(const Permutation& w) const {
  return poly_[index_of(w)].eval(1);
}

PoincareRecursionReport verify_poincare_recursions(const Permutation& w) {
  if (!classify(w).gasharov_reiner || w.is_identity()) throw NotApplicable();
  auto info = reduction_pair(w);
  if (info.kind == PairKind::Neither) throw NotApplicable();

  PoincareRecursionReport report;
  report.kind = info.kind;
  report.applicable = true;
  int i = info.descent_position;
  IntPolynomial pw = poincare(w);
  long long ell = w.length();

  if (info.satisfies_light) {
    Permutation wy = w.deleted(i);
    IntPolynomial rhs = poincare(w.swapped_adjacent(i)) +
                        poincare(wy).shifted(ell - wy.length());
    report.light_identity = (pw == rhs);
  }
  if (info.satisfies_heavy) {
    Permutation wx = w.deleted(i + 1);
    Permutation wy = w.deleted(i);
    IntPolynomial pxy;
    long long ellxy = 0;
    if (w.size() >= 3) {
      Permutation wxy = w.deleted(i + 1).deleted(i);
      pxy = poincare(wxy);
      ellxy = wxy.length();
    } else {
      pxy = IntPolynomial::one();  // the empty permutation
      ellxy = 0;
    }
    IntPolynomial rhs = poincare(w.swapped_adjacent(i)) +
                        poincare(wx).shifted(ell - wx.length()) +
                        poincare(wy).shifted(ell - wy.length()) -
                        pxy.shifted(ell - ellxy);
    report.heavy_four_term = (pw == rhs);
    IntPolynomial simplified =
        poincare(w.swapped_adjacent(i)).shifted(1) + poincare(v_of(w));
    report.heavy_simplified = (pw == simplified);
  }
  report.all_hold =
      (!info.satisfies_light || report.light_identity) &&
      (!info.satisfies_heavy ||
       (report.heavy_four_term && report.heavy_simplified));
  return report;
}

bool sjostrand_box_check(const Permutation& w) {
  if (w.is_identity()) throw NotApplicable();
  auto info = reduction_pair(w);
  if (info.kind == PairKind::Neither) throw NotApplicable();
  int i = info.descent_position;
  for (const auto& u : bruhat_interval(w).members) {
    for (int j = 1; j < i; ++j) {
      if (u(j) >= w(i)) return false;
    }
    for (int j = i + 2; j <= w.size(); ++j) {
      if (u(j) <= w(i + 1)) return false;
    }
  }
  return true;
}

}  // namespace permudiag
