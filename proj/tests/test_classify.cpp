#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "twobridge/classify.hpp"
#include "twobridge/enumerate.hpp"
#include "twobridge/golden.hpp"

using namespace twobridge;

TEST_CASE("knot_class of the small knots") {
  TwoBridgeClass trefoil = knot_class(ConwaySequence({2, -2}));
  CHECK(trefoil.alpha == 3);
  CHECK(trefoil.beta_orbit_chiral == std::vector<int64_t>{2});
  CHECK(trefoil.beta_orbit_full == std::vector<int64_t>{1, 2});
  CHECK_FALSE(trefoil.achiral);
  CHECK(trefoil.crossing_number == 3);

  TwoBridgeClass fig8 = knot_class(ConwaySequence({2, 2}));
  CHECK(fig8.alpha == 5);
  CHECK(fig8.beta_orbit_chiral == std::vector<int64_t>{2, 3});
  CHECK(fig8.beta_orbit_full == std::vector<int64_t>{2, 3});
  CHECK(fig8.achiral);
  CHECK(fig8.crossing_number == 4);

  TwoBridgeClass seven4 = knot_class(ConwaySequence({6, -2}));
  CHECK(seven4.alpha == 11);
  CHECK(seven4.beta_orbit_chiral == std::vector<int64_t>{2, 6});
  CHECK_FALSE(seven4.achiral);
  CHECK(seven4.crossing_number == 7);
}

TEST_CASE("equality and mirrors") {
  CHECK(equal_knots(knot_class(5, 3), knot_class(5, 2), true));
  CHECK_FALSE(equal_knots(knot_class(3, 2), knot_class(5, 2), true));
  CHECK_FALSE(equal_knots(knot_class(3, 2), knot_class(5, 2), false));
  // S(7,2) and S(7,5) are mirror images: equal only when mirrors collapse.
  CHECK_FALSE(equal_knots(knot_class(7, 2), knot_class(7, 5), true));
  CHECK(equal_knots(knot_class(7, 2), knot_class(7, 5), false));
}

TEST_CASE("crossing numbers from positive expansions") {
  CHECK(knot_class(3, 2).crossing_number == 3);
  CHECK(knot_class(3, 1).crossing_number == 3);
  CHECK(knot_class(5, 2).crossing_number == 4);
  CHECK(knot_class(11, 2).crossing_number == 7);
  CHECK(knot_class(5, 1).crossing_number == 5);   // (2,5) torus knot
  CHECK(knot_class(7, 1).crossing_number == 7);
}

TEST_CASE("census keys") {
  CensusKey k = census_key(knot_class(5, 2));
  CHECK(k.alpha == 5);
  CHECK(k.orbit == std::vector<int64_t>{2, 3});
  CHECK(census_key(knot_class(3, 1)).orbit == std::vector<int64_t>{1, 2});
  CHECK(census_key(knot_class(7, 2)) == census_key(knot_class(7, 5)));
  CHECK(census_key(knot_class(7, 2)).hash() == census_key(knot_class(7, 5)).hash());
  CHECK(census_key(knot_class(7, 2)) != census_key(knot_class(9, 2)));
}

TEST_CASE("bad inputs") {
  CHECK_THROWS_AS(knot_class(4, 1), std::invalid_argument);   // even alpha
  CHECK_THROWS_AS(knot_class(1, 1), std::invalid_argument);   // unknot range
  CHECK_THROWS_AS(knot_class(9, 3), std::invalid_argument);   // not a unit
}

TEST_CASE("classification is constant on cliques") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> half_n(1, 5);
  std::uniform_int_distribution<int64_t> mag(1, 4);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 2 * half_n(rng);
    std::vector<int64_t> entries(static_cast<size_t>(n));
    for (auto& v : entries) v = 2 * mag(rng) * (neg(rng) ? -1 : 1);
    ConwaySequence p(entries);

    TwoBridgeClass base = knot_class(p);
    CensusKey key = census_key(base);
    CHECK(census_key(knot_class(reversed(p))) == key);
    CHECK(census_key(knot_class(negated(p))) == key);
    CHECK(census_key(knot_class(negated(reversed(p)))) == key);

    // Reversal preserves alpha and lands beta inside the full orbit.
    Fraction forward = slope(p);
    Fraction backward = slope(reversed(p));
    CHECK(forward.alpha == backward.alpha);
    int64_t b_rev = mod_floor(backward.beta, backward.alpha);
    CHECK(std::find(base.beta_orbit_full.begin(), base.beta_orbit_full.end(),
                    b_rev) != base.beta_orbit_full.end());

    // The mirror's chiral orbit is the negation mod alpha of the original's.
    TwoBridgeClass mirror = knot_class(negated(p));
    std::vector<int64_t> negated_orbit;
    for (int64_t b : base.beta_orbit_chiral)
      negated_orbit.push_back(base.alpha - b);
    std::sort(negated_orbit.begin(), negated_orbit.end());
    CHECK(mirror.beta_orbit_chiral == negated_orbit);

    CHECK(base.achiral == (base.beta_orbit_full == base.beta_orbit_chiral));

    // Orbits are closed under inversion and consist of units.
    for (int64_t b : base.beta_orbit_full) {
      CHECK(gcd64(b, base.alpha) == 1);
      int64_t inv = mod_inverse(b, base.alpha);
      CHECK(std::find(base.beta_orbit_full.begin(), base.beta_orbit_full.end(),
                      inv) != base.beta_orbit_full.end());
    }
  }
}

TEST_CASE("classification agrees with the tabulated small knots") {
  // Knot names carry their crossing numbers: 3a1 has 3, 8a16 has 8.
  for (const auto& row : golden::table5()) {
    ConwaySequence p(row.a);
    TwoBridgeClass cls = knot_class(p);
    CAPTURE(row.name);
    CHECK(cls.crossing_number == std::atoi(row.name));
    CHECK(cls.achiral == is_palindromic(p));
  }
}

TEST_CASE("even expansion recovers each enumerated presentation up to 12 crossings") {
  for (int64_t m = 4; m <= 12; m += 2) {
    for (int64_t n = 2; 2 * n <= m; n += 2) {
      for (const ConwaySequence& p : enumerate_umn({m, n})) {
        CFTerms again = even_cf(slope(p));
        CHECK(again.terms() == p.entries());
        ConwaySequence q(again.terms());
        CHECK(census_key(knot_class(q)) == census_key(knot_class(p)));
      }
    }
  }
}
