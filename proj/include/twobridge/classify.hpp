#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "twobridge/conway.hpp"

// Canonical classification of 2-bridge knots S(alpha, beta). Two classes
// denote the same knot iff alpha matches and beta^{+-1} agree mod alpha;
// the mirror image is S(alpha, -beta), and the knot is achiral exactly when
// beta^2 = -1 (mod alpha). Crossing numbers come from all-positive
// continued-fraction expansions, which give reduced alternating diagrams.

namespace twobridge {

struct TwoBridgeClass {
  int64_t alpha = 0;                        // odd, >= 3
  std::vector<int64_t> beta_orbit_chiral;   // sorted {b, b^-1} mod alpha
  std::vector<int64_t> beta_orbit_full;     // sorted {+-b^{+-1}} mod alpha
  bool achiral = false;
  int64_t crossing_number = 0;
};

// Dedup key for census counting, where a knot and its mirror count once.
struct CensusKey {
  int64_t alpha = 0;
  std::vector<int64_t> orbit;  // sorted full beta orbit

  auto operator<=>(const CensusKey&) const = default;
  size_t hash() const;
};

struct CensusKeyHash {
  size_t operator()(const CensusKey& k) const { return k.hash(); }
};

// Minimum over the full beta orbit of the positive-expansion term sums.
int64_t compute_crossing_number(int64_t alpha, std::span<const int64_t> orbit_full);

// Class of S(alpha, beta); beta may be any integer coprime to alpha.
TwoBridgeClass knot_class(int64_t alpha, int64_t beta);
TwoBridgeClass knot_class(const Fraction& slope);
TwoBridgeClass knot_class(const ConwaySequence& p);

// mirror_sensitive: equal as knots (alpha and chiral orbits match).
// Otherwise: equal up to reflection (full orbits match).
bool equal_knots(const TwoBridgeClass& x, const TwoBridgeClass& y,
                 bool mirror_sensitive);

CensusKey census_key(const TwoBridgeClass& x);

}  // namespace twobridge
