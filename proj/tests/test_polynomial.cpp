#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permudiag/polynomial.hpp"

using permudiag::IntPolynomial;

TEST_CASE("normalization and degree") {
  IntPolynomial p({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == IntPolynomial({1, 2}));
  CHECK(IntPolynomial({0, 0}).is_zero());
  CHECK(IntPolynomial::zero().degree() == -1);
}

TEST_CASE("arithmetic") {
  IntPolynomial a({1, 1});       // 1 + t
  IntPolynomial b({-1, 0, 1});   // t^2 - 1
  CHECK(a * a == IntPolynomial({1, 2, 1}));
  CHECK(a + b == IntPolynomial({0, 1, 1}));
  CHECK(b - b == IntPolynomial::zero());
  CHECK(a.shifted(2) == IntPolynomial({0, 0, 1, 1}));
  CHECK((a * -3) == IntPolynomial({-3, -3}));
  CHECK(a.eval(5) == 6);
  CHECK(b.eval(-1) == 0);
}

TEST_CASE("falling factorials") {
  CHECK(IntPolynomial::falling_factorial(0) == IntPolynomial::one());
  CHECK(IntPolynomial::falling_factorial(1) == IntPolynomial({0, 1}));
  // t(t-1)(t-2) = t^3 - 3t^2 + 2t
  CHECK(IntPolynomial::falling_factorial(3) == IntPolynomial({0, 2, -3, 1}));
  for (int i = 0; i <= 6; ++i) {
    // evaluates to i! at t = i and to 0 at t = 0..i-1 (for i >= 1)
    long long fact = 1;
    for (int k = 2; k <= i; ++k) fact *= k;
    CHECK(IntPolynomial::falling_factorial(i).eval(i) == fact);
    if (i >= 1) CHECK(IntPolynomial::falling_factorial(i).eval(i - 1) == 0);
  }
}

TEST_CASE("reversal and palindromicity") {
  IntPolynomial p({1, 3, 5, 4, 1});
  CHECK(p.reversed(4) == IntPolynomial({1, 4, 5, 3, 1}));
  CHECK(p.reversed(6) == IntPolynomial({0, 0, 1, 4, 5, 3, 1}));
  CHECK(!p.is_palindromic());
  CHECK(IntPolynomial({1, 2, 2, 1}).is_palindromic());
  CHECK(IntPolynomial({2}).is_palindromic());
}

TEST_CASE("unimodality") {
  CHECK(IntPolynomial({1, 4, 17, 52, 116, 203, 289, 346, 355, 316, 246, 167,
                       98, 49, 20, 6, 1})
            .is_unimodal());
  CHECK(!IntPolynomial({1, 0, 1}).is_unimodal());
  CHECK(IntPolynomial({3, 3, 3}).is_unimodal());
}

TEST_CASE("json round trip is bit-exact") {
  IntPolynomial p({1, 3, 5, 4, 1});
  CHECK(p.to_json() == "{\"coeffs\":[1,3,5,4,1]}");
  CHECK(IntPolynomial::from_json(p.to_json()) == p);
}

TEST_CASE("printing") {
  CHECK(IntPolynomial({1, 3, 5, 4, 1}).to_string() ==
        "t^4 + 4*t^3 + 5*t^2 + 3*t + 1");
  CHECK(IntPolynomial({0, -2, 1}).to_string("q") == "q^2 - 2*q");
  CHECK(IntPolynomial::zero().to_string() == "0");
}
