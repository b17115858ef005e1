#include <doctest.h>

#include <cstdlib>
#include <random>

#include "twobridge/rational.hpp"

using namespace twobridge;

TEST_CASE("eval_cf matches direct arithmetic") {
  CHECK(eval_cf(CFTerms({2, -3})) == Fraction(5, 3));
  CHECK(eval_cf(CFTerms({1, 1, 2})) == Fraction(5, 3));
  CHECK(eval_cf(CFTerms({4})) == Fraction(4, 1));
  CHECK(eval_cf(CFTerms({2, -2})) == Fraction(3, 2));    // 2 + 1/(-2)
  CHECK(eval_cf(CFTerms({6, -2})) == Fraction(11, 2));   // 6 - 1/2
  CHECK(eval_cf(CFTerms({-2, 2})) == Fraction(3, -2));   // -2 + 1/2
}

TEST_CASE("eval_cf reports zero tails and zero values") {
  CHECK_THROWS_AS(eval_cf(CFTerms({2, 1, -1})), EvaluationError);  // 1/( [1,-1] = 0 )
  CHECK_THROWS_AS(eval_cf(CFTerms({1, -1})), EvaluationError);     // value 0
  CHECK_THROWS_AS(CFTerms({2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CFTerms(std::vector<int64_t>{}), std::invalid_argument);
}

TEST_CASE("eval_cf never fails when every term has magnitude >= 2") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> len(1, 10);
  std::uniform_int_distribution<int64_t> mag(2, 12);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int64_t> terms(static_cast<size_t>(len(rng)));
    for (auto& t : terms) t = neg(rng) ? -mag(rng) : mag(rng);
    Fraction f = eval_cf(CFTerms(terms));
    CHECK(f.alpha > std::llabs(f.beta));  // |value| stays above 1
  }
}

TEST_CASE("positive expansion round-trips through eval_cf") {
  CHECK(positive_cf(Fraction(3, 2)) == CFTerms({1, 2}));
  CHECK(positive_cf(Fraction(5, 2)) == CFTerms({2, 2}));
  CHECK(positive_cf(Fraction(5, 3)) == CFTerms({1, 1, 2}));
  CHECK_THROWS_AS(positive_cf(Fraction(3, -2)), std::invalid_argument);
  CHECK_THROWS_AS(positive_cf(Fraction(2, 3)), std::invalid_argument);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int64_t> num(2, 5000);
  for (int trial = 0; trial < 2000; ++trial) {
    int64_t alpha = num(rng);
    int64_t beta = std::uniform_int_distribution<int64_t>(1, alpha - 1)(rng);
    if (gcd64(alpha, beta) != 1) continue;
    CFTerms terms = positive_cf(Fraction(alpha, beta));
    for (size_t i = 0; i < terms.size(); ++i) CHECK(terms[i] >= 1);
    if (terms.size() > 1) CHECK(terms[terms.size() - 1] >= 2);
    CHECK(eval_cf(terms) == Fraction(alpha, beta));
  }
}

TEST_CASE("even expansion round-trips and is always even-length all-even") {
  CHECK(even_cf(Fraction(5, 2)) == CFTerms({2, 2}));
  CHECK(even_cf(Fraction(3, 2)) == CFTerms({2, -2}));
  CHECK(even_cf(Fraction(11, 2)) == CFTerms({6, -2}));
  // Odd denominators have no all-even expansion at all.
  CHECK_THROWS_AS(even_cf(Fraction(7, 3)), std::invalid_argument);
  CHECK_THROWS_AS(even_cf(Fraction(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(even_cf(Fraction(3, 4)), std::invalid_argument);  // |value| < 1

  std::mt19937 rng(99);
  std::uniform_int_distribution<int64_t> num(3, 4001);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    int64_t alpha = num(rng) | 1;
    int64_t beta = std::uniform_int_distribution<int64_t>(1, alpha / 2)(rng) * 2;
    if (gcd64(alpha, beta) != 1) continue;
    if (neg(rng)) beta = -beta;
    CFTerms terms = even_cf(Fraction(alpha, beta));
    CHECK(terms.size() % 2 == 0);
    for (size_t i = 0; i < terms.size(); ++i) {
      CHECK(terms[i] != 0);
      CHECK(terms[i] % 2 == 0);
    }
    CHECK(eval_cf(terms) == Fraction(alpha, beta));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 5) == 2);
  CHECK(mod_inverse(1, 7) == 1);
  CHECK(mod_inverse(2, 11) == 6);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(mod_inverse(5, 1), std::invalid_argument);

  // Brute-force oracle plus the involution property.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    int64_t a = std::uniform_int_distribution<int64_t>(2, 600)(rng);
    int64_t b = std::uniform_int_distribution<int64_t>(1, a - 1)(rng);
    if (gcd64(b, a) != 1) continue;
    int64_t x = mod_inverse(b, a);
    CHECK(x >= 1);
    CHECK(x <= a - 1);
    CHECK(mod_floor(b * x, a) == 1);
    int64_t brute = -1;
    for (int64_t y = 1; y < a; ++y)
      if (mod_floor(b * y, a) == 1) {
        brute = y;
        break;
      }
    CHECK(x == brute);
    CHECK(mod_inverse(x, a) == b);
  }
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK(checked_mul(1LL << 31, 1LL << 31) == (1LL << 62));
  CHECK_THROWS_AS(checked_mul(1LL << 32, 1LL << 31), std::overflow_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(eval_cf(CFTerms({INT64_MAX / 2, 2, INT64_MAX / 2})),
                  std::overflow_error);
}

TEST_CASE("fraction normalization") {
  Fraction f(-10, 4);
  CHECK(f.alpha == 5);
  CHECK(f.beta == -2);
  CHECK(Fraction(6, 4) == Fraction(3, 2));
  CHECK_THROWS(Fraction(1, 0));
  CHECK_THROWS(Fraction(0, 5));
}
