#include "twobridge/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace twobridge {

size_t CensusKey::hash() const {
  size_t h = static_cast<size_t>(alpha) * 0x9e3779b97f4a7c15ull;
  for (int64_t v : orbit) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::vector<int64_t> sorted_unique(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

int64_t compute_crossing_number(int64_t alpha, std::span<const int64_t> orbit_full) {
  int64_t best = 0;
  for (int64_t b : orbit_full) {
    CFTerms expansion = positive_cf(Fraction(alpha, b));
    int64_t total = 0;
    for (int64_t term : expansion.terms()) total += term;
    if (best == 0 || total < best) best = total;
  }
  return best;
}

TwoBridgeClass knot_class(int64_t alpha, int64_t beta) {
  if (alpha < 3 || alpha % 2 == 0)
    throw std::invalid_argument("2-bridge knot classes need odd alpha >= 3");
  int64_t b = mod_floor(beta, alpha);
  if (b == 0 || gcd64(b, alpha) != 1)
    throw std::invalid_argument("beta must be a unit mod alpha");
  int64_t inv = mod_inverse(b, alpha);

  TwoBridgeClass cls;
  cls.alpha = alpha;
  cls.beta_orbit_chiral = sorted_unique({b, inv});
  cls.beta_orbit_full = sorted_unique({b, inv, alpha - b, alpha - inv});
  // beta^2 = -1 (mod alpha) <=> beta^-1 = -beta, i.e. the chiral orbit is
  // already closed under negation.
  cls.achiral = inv == alpha - b;
  cls.crossing_number = compute_crossing_number(alpha, cls.beta_orbit_full);
  return cls;
}

TwoBridgeClass knot_class(const Fraction& slope) {
  return knot_class(slope.alpha, slope.beta);
}

TwoBridgeClass knot_class(const ConwaySequence& p) {
  return knot_class(slope(p));
}

bool equal_knots(const TwoBridgeClass& x, const TwoBridgeClass& y,
                 bool mirror_sensitive) {
  if (x.alpha != y.alpha) return false;
  return mirror_sensitive ? x.beta_orbit_chiral == y.beta_orbit_chiral
                          : x.beta_orbit_full == y.beta_orbit_full;
}

CensusKey census_key(const TwoBridgeClass& x) {
  return CensusKey{x.alpha, x.beta_orbit_full};
}

}  // namespace twobridge
