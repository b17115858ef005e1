#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/conway.hpp"

// Dowker-Thistlethwaite codes for even Conway presentations. A DT code of an
// m-crossing diagram pairs the odd labels 1,3,...,2m-1 with signed even
// labels: walking once around the oriented diagram, crossings are numbered
// 1..2m in passage order and an even number is negated when written while
// travelling over the crossing.
//
// Two independent constructions are provided: closed-form per-twist-region
// label formulas, and a literal walk over an explicit diagram model. They
// must agree, and the census test suite checks that exhaustively.

namespace twobridge {

class DTCode {
 public:
  // No validation here; validate_dt checks the permutation invariants, and
  // the generators assert them on their output.
  explicit DTCode(std::vector<int64_t> evens) : evens_(std::move(evens)) {}

  const std::vector<int64_t>& evens() const { return evens_; }
  size_t size() const { return evens_.size(); }  // m

  std::string str() const;  // "6 -8 2 -4"

  bool operator==(const DTCode&) const = default;

 private:
  std::vector<int64_t> evens_;
};

// Per twist region i and position k (left to right), the two labels carried
// by the k-th crossing: the one written on the leftwards middle strand and
// the one written on the rightwards outer strand.
struct CrossingLabels {
  struct Pair {
    int64_t middle;
    int64_t outer;
  };
  std::vector<std::vector<Pair>> regions;
  int64_t crossings = 0;  // m
};

// Closed-form labels. With A_i = |a_i|, s_i = sign(a_i):
//   middle_i(k) = (M_i + 1 - k) * s_i^k
//   outer_i(k)  = (O_i + k) * s_i^(k+1)        for k = 1..A_i
// where, writing S_odd for the sum of the odd-indexed A_j,
//   M_i = S_odd + sum_{j >= i} A_j
//   O_i = sum of odd-indexed A_j below i   (odd i)
//   O_i = M_1 + sum of even-indexed A_j below i   (even i).
// S_odd is the count accumulated by the first pass of the diagram walk over
// the outer strands of the odd regions; the traversal oracle cross-checks
// the offsets on every generated presentation.
// Throws std::logic_error if the computed labels fail their invariants.
CrossingLabels labels_from_formula(const ConwaySequence& p);

// Reads the signed even partner of each odd label 1,3,...,2m-1 off the
// closed-form labels.
DTCode dt_from_presentation(const ConwaySequence& p);

// Independent oracle: builds the oriented plait diagram crossing by
// crossing, walks it, and emits the code directly.
DTCode dt_via_traversal(const ConwaySequence& p);

// True iff the code is a plausible DT code: length >= 3 and the magnitudes
// are exactly {2, 4, ..., 2m}.
bool validate_dt(const DTCode& code);

}  // namespace twobridge
