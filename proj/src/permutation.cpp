#include "permudiag/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permudiag/errors.hpp"

namespace permudiag {

namespace {

void validate_word(const std::vector<int>& word) {
  int n = static_cast<int>(word.size());
  if (n < 1) throw NotAPermutation("empty word");
  std::vector<char> seen(n + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw NotAPermutation("value out of range: " + std::to_string(v));
    }
    if (seen[v]) {
      throw NotAPermutation("repeated value: " + std::to_string(v));
    }
    seen[v] = 1;
  }
}

// Rank-compress distinct values onto 1..k preserving order.
std::vector<int> order_isomorphic(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    out[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
        sorted.begin() + 1);
  }
  return out;
}

}  // namespace

Permutation::Permutation(int n) : word_(n) {
  if (n < 1) throw NotAPermutation("size must be at least 1");
  std::iota(word_.begin(), word_.end(), 1);
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  validate_word(word_);
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> word;
  bool separated = text.find_first_of(", \t") != std::string::npos;
  if (separated) {
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
      std::istringstream fields(piece);
      std::string tok;
      while (fields >> tok) {
        try {
          word.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw NotAPermutation("bad token: " + tok);
        }
      }
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw NotAPermutation("bad character in word: " + text);
      }
      word.push_back(c - '0');
    }
  }
  return Permutation(word);
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (word_[i - 1] != i) return false;
  }
  return true;
}

int Permutation::position_of(int v) const {
  for (int i = 1; i <= size(); ++i) {
    if (word_[i - 1] == v) return i;
  }
  throw IndexOutOfRange("value not present: " + std::to_string(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::swapped_adjacent(int i) const {
  if (i < 1 || i >= size()) throw IndexOutOfRange("swap position");
  std::vector<int> w = word_;
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::deleted(int pos) const {
  if (size() < 2) throw CannotDeleteFromSingleton();
  if (pos < 1 || pos > size()) throw IndexOutOfRange("delete position");
  std::vector<int> w;
  w.reserve(size() - 1);
  for (int i = 1; i <= size(); ++i) {
    if (i != pos) w.push_back(word_[i - 1]);
  }
  return Permutation(order_isomorphic(w));
}

Permutation Permutation::reversed() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return Permutation(std::move(w));
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i) {
    if (word_[i - 1] > word_[i]) out.push_back(i);
  }
  return out;
}

int Permutation::first_descent() const {
  for (int i = 1; i < size(); ++i) {
    if (word_[i - 1] > word_[i]) return i;
  }
  return 0;
}

long long Permutation::length() const {
  long long ell = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (word_[i] > word_[j]) ++ell;
    }
  }
  return ell;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() <= 9) {
    for (int v : word_) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

LengthStats length_stats(const Permutation& w) {
  LengthStats stats;
  int n = w.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) stats.inversions.emplace_back(i, j);
    }
  }
  stats.ell = static_cast<long long>(stats.inversions.size());
  stats.anti_inversions = static_cast<long long>(n) * (n - 1) / 2 - stats.ell;
  return stats;
}

namespace {

// Scan for a subsequence of w order-isomorphic to p, pruning on the
// relative-order constraints against the already-chosen positions.
bool pattern_search(const Permutation& w, const Permutation& p, int depth,
                    std::vector<int>& chosen) {
  int n = w.size();
  int k = p.size();
  if (depth == k) return true;
  int start = depth == 0 ? 1 : chosen[depth - 1] + 1;
  for (int pos = start; pos + (k - depth - 1) <= n; ++pos) {
    bool ok = true;
    for (int t = 0; t < depth; ++t) {
      bool pat_less = p(t + 1) < p(depth + 1);
      bool word_less = w(chosen[t]) < w(pos);
      if (pat_less != word_less) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[depth] = pos;
    if (pattern_search(w, p, depth + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) throw PatternLongerThanWord();
  std::vector<int> chosen(p.size());
  return pattern_search(w, p, 0, chosen);
}

ClassificationFlags classify(const Permutation& w) {
  ClassificationFlags f;
  f.grassmannian = w.descents().size() <= 1;
  int n = w.size();
  auto avoids = [&](std::vector<int> pat) {
    if (static_cast<int>(pat.size()) > n) return true;
    return !contains_pattern(w, Permutation(std::move(pat)));
  };
  f.avoids_321 = avoids({3, 2, 1});
  f.avoids_3412 = avoids({3, 4, 1, 2});
  bool avoids_4231 = avoids({4, 2, 3, 1});
  f.smooth = f.avoids_3412 && avoids_4231;
  f.gasharov_reiner = avoids_4231 && avoids({3, 5, 1, 4, 2}) &&
                      avoids({4, 2, 5, 1, 3}) && avoids({3, 5, 1, 6, 2, 4});
  return f;
}

namespace {

// Light conditions at the first descent i: nothing before i exceeds w_i
// (automatic for a first descent) and no later entry lies strictly
// between w_{i+1} and w_i.
bool light_holds(const Permutation& w, int i) {
  int n = w.size();
  for (int j = 1; j < i; ++j) {
    if (w(j) > w(i)) return false;
  }
  for (int j = i + 2; j <= n; ++j) {
    if (w(j) > w(i + 1) && w(j) < w(i)) return false;
  }
  return true;
}

// Heavy conditions at the first descent i. The interval condition is
// implemented with the witness range w_{i+1} <= k <= w_i.
bool heavy_holds(const Permutation& w, int i, int* k_out) {
  int n = w.size();
  for (int j = i + 2; j <= n; ++j) {
    if (w(j) < w(i + 1)) return false;
  }
  for (int j = 1; j < i; ++j) {
    if (w(j) > w(i)) return false;
  }
  for (int k = w(i + 1); k <= w(i); ++k) {
    bool ok = true;
    for (int j = 1; j < i && ok; ++j) {
      if (w(j) > w(i + 1) && w(j) <= k) ok = false;
    }
    for (int j = i + 2; j <= n && ok; ++j) {
      if (w(j) > k && w(j) < w(i)) ok = false;
    }
    if (ok) {
      if (k_out) *k_out = k;
      return true;
    }
  }
  return false;
}

}  // namespace

ReductionPairInfo reduction_pair(const Permutation& w) {
  int i = w.first_descent();
  if (i == 0) throw IdentityHasNoDescent();
  ReductionPairInfo info;
  info.descent_position = i;
  info.y = Cell{i, w(i)};
  info.x = Cell{i + 1, w(i + 1)};
  info.satisfies_light = light_holds(w, i);
  info.satisfies_heavy = heavy_holds(w, i, &info.k_witness);
  if (info.satisfies_heavy) {
    info.kind = PairKind::Heavy;
    for (int j = 1; j <= i; ++j) {
      if (w(j) > w(i + 1)) {
        info.j = j;
        break;
      }
    }
  } else if (info.satisfies_light) {
    info.kind = PairKind::Light;
  } else {
    info.kind = PairKind::Neither;
  }
  return info;
}

Permutation v_of(const Permutation& w) {
  auto info = reduction_pair(w);
  if (!info.satisfies_heavy) throw NotHeavyReductionPair();
  int i = info.descent_position;
  int j = info.j;
  std::vector<int> values;
  values.reserve(w.size() - 1);
  for (int t = 1; t <= j - 1; ++t) values.push_back(w(t));
  for (int t = j + 1; t <= i; ++t) values.push_back(w(t));
  values.push_back(w(j));
  for (int t = i + 2; t <= w.size(); ++t) values.push_back(w(t));
  return Permutation(order_isomorphic(values));
}

}  // namespace permudiag
