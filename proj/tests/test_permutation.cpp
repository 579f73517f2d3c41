#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "permudiag/errors.hpp"
#include "permudiag/permutation.hpp"

using namespace permudiag;

TEST_CASE("parse") {
  CHECK(Permutation::parse("3412").word() == std::vector<int>{3, 4, 1, 2});
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").size() == 10);
  CHECK(Permutation::parse("3 1 2").word() == std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(Permutation::parse("3312"), NotAPermutation);
  CHECK_THROWS_AS(Permutation::parse("103"), NotAPermutation);
  CHECK_THROWS_AS(Permutation::parse(""), NotAPermutation);
  CHECK_THROWS_AS(Permutation::parse("1,2,x"), NotAPermutation);
}

TEST_CASE("length stats") {
  auto s = length_stats(Permutation::parse("3412"));
  CHECK(s.ell == 4);
  CHECK(s.anti_inversions == 2);
  CHECK(s.inversions == std::vector<std::pair<int, int>>{
                            {1, 3}, {1, 4}, {2, 3}, {2, 4}});

  CHECK(length_stats(Permutation(5)).ell == 0);
  CHECK(length_stats(Permutation(5)).anti_inversions == 10);
  CHECK(length_stats(Permutation::parse("3142")).ell == 3);
}

TEST_CASE("basic transforms") {
  Permutation w = Permutation::parse("3412");
  CHECK(w.inverse() == Permutation::parse("3412"));
  CHECK(Permutation::parse("3142").inverse() == Permutation::parse("2413"));
  CHECK(w.swapped_adjacent(2) == Permutation::parse("3142"));
  CHECK(w.first_descent() == 2);
  CHECK(Permutation(4).first_descent() == 0);
  CHECK(w.deleted(3) == Permutation::parse("231"));
  CHECK(w.deleted(2) == Permutation::parse("312"));
  CHECK(Permutation(5).deleted(1) == Permutation(4));
  CHECK_THROWS_AS(Permutation(1).deleted(1), CannotDeleteFromSingleton);
  CHECK_THROWS_AS(w.deleted(5), IndexOutOfRange);
}

TEST_CASE("pattern containment") {
  CHECK(contains_pattern(Permutation::parse("4231"),
                         Permutation::parse("4231")));
  CHECK(!contains_pattern(Permutation::parse("351624"),
                          Permutation::parse("321")));
  CHECK(contains_pattern(Permutation::parse("5673412"),
                         Permutation::parse("4231")));
  CHECK_THROWS_AS(contains_pattern(Permutation::parse("21"),
                                   Permutation::parse("321")),
                  PatternLongerThanWord);
}

TEST_CASE("pattern containment agrees with bitmask oracle") {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& p : all_permutations(k)) patterns.push_back(p);
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (const auto& p : patterns) {
        if (p.size() > n) continue;
        CHECK(contains_pattern(w, p) ==
              oracles::contains_pattern_bitmask(w, p));
      }
    }
  }
}

TEST_CASE("classification flags") {
  auto f = classify(Permutation::parse("3412"));
  CHECK(f.grassmannian);
  CHECK(!f.smooth);
  CHECK(f.gasharov_reiner);
  CHECK(f.avoids_321);
  CHECK(!f.avoids_3412);

  CHECK(!classify(Permutation::parse("4231")).gasharov_reiner);
  auto id = classify(Permutation(6));
  CHECK(id.grassmannian);
  CHECK(id.smooth);
  CHECK(id.gasharov_reiner);
  CHECK(id.avoids_321);
  CHECK(id.avoids_3412);
}

TEST_CASE("reduction pairs") {
  auto heavy = reduction_pair(Permutation::parse("3412"));
  CHECK(heavy.kind == PairKind::Heavy);
  CHECK(heavy.descent_position == 2);
  CHECK(heavy.y == Cell{2, 4});
  CHECK(heavy.x == Cell{3, 1});
  CHECK(heavy.j == 1);

  auto light = reduction_pair(Permutation::parse("3241"));
  CHECK(light.kind == PairKind::Light);
  CHECK(light.descent_position == 1);
  CHECK(light.y == Cell{1, 3});
  CHECK(light.x == Cell{2, 2});

  // 4231: w_3 = 3 lies strictly between the descent values (breaks light),
  // w_4 = 1 lies below w_2 = 2 (breaks heavy).
  auto neither = reduction_pair(Permutation::parse("4231"));
  CHECK(neither.kind == PairKind::Neither);
  CHECK(neither.descent_position == 1);

  CHECK_THROWS_AS(reduction_pair(Permutation(3)), IdentityHasNoDescent);
}

TEST_CASE("heavy classification implies the prefix/run/value structure") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (w.is_identity()) continue;
      auto info = reduction_pair(w);
      if (info.kind != PairKind::Heavy) continue;
      int i = info.descent_position, j = info.j;
      for (int t = 1; t < j; ++t) CHECK(w(t) == t);
      for (int t = j; t <= i; ++t) CHECK(w(t) == w(i) - i + t);
      CHECK(w(i + 1) == j);
    }
  }
}

TEST_CASE("GR permutations always admit a reduction pair on w or inverse") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (w.is_identity() || !classify(w).gasharov_reiner) continue;
      bool ok = reduction_pair(w).kind != PairKind::Neither ||
                reduction_pair(w.inverse()).kind != PairKind::Neither;
      CHECK(ok);
    }
  }
}

TEST_CASE("v_of") {
  CHECK(v_of(Permutation::parse("3412")) == Permutation::parse("321"));
  CHECK_THROWS_AS(v_of(Permutation::parse("3241")), NotHeavyReductionPair);

  // When i = j the construction collapses to deleting position i + 1.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (w.is_identity()) continue;
      auto info = reduction_pair(w);
      if (info.kind != PairKind::Heavy || info.j != info.descent_position) {
        continue;
      }
      CHECK(v_of(w) == w.deleted(info.descent_position + 1));
    }
  }
}

TEST_CASE("ell plus anti-inversions is n choose 2") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      auto s = length_stats(w);
      CHECK(s.ell + s.anti_inversions == n * (n - 1) / 2);
      CHECK(s.ell == w.length());
    }
  }
}
