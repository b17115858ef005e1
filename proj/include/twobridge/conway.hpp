#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/rational.hpp"

// Even Conway presentations C(a_1,...,a_n): plait diagrams described by a
// sequence of nonzero even integers of even length. Such a presentation is
// always a knot (never a 2-component link), and each 2-bridge knot type has
// exactly one even presentation up to the clique {a, a^r, -a, -a^r}, where
// a^r is the reversal and -a the entrywise negation (the mirror image).

namespace twobridge {

class ConwaySequence {
 public:
  // Validates eagerly: even length >= 2, every entry even and nonzero.
  explicit ConwaySequence(std::vector<int64_t> entries);

  // Parses the textual form "2,-2,4,-2".
  static ConwaySequence parse(std::string_view text);

  const std::vector<int64_t>& entries() const { return entries_; }
  size_t length() const { return entries_.size(); }     // n
  int64_t crossings() const { return crossings_; }      // m = sum |a_i|
  int64_t operator[](size_t i) const { return entries_[i]; }

  std::string str() const;  // "2,-2,4,-2"

  bool operator==(const ConwaySequence&) const = default;

 private:
  std::vector<int64_t> entries_;
  int64_t crossings_ = 0;
};

// Slope [a_1,...,a_n] = a_1 + 1/(a_2 + ...). For even presentations the
// numerator is always odd and at least 3.
Fraction slope(const ConwaySequence& p);

ConwaySequence reversed(const ConwaySequence& p);
ConwaySequence negated(const ConwaySequence& p);

bool is_palindromic(const ConwaySequence& p);      // a == a^r
bool is_antipalindromic(const ConwaySequence& p);  // a == -a^r

// Entry order used to pick clique representatives: compare by magnitude,
// then positive before negative.
bool clique_entry_less(int64_t x, int64_t y);

// Lexicographically under clique_entry_less, entry by entry.
bool clique_seq_less(std::span<const int64_t> x, std::span<const int64_t> y);

// True iff a is the canonical element of its clique: first entry positive
// and a not beaten by the other positive-first clique member.
bool is_clique_representative(std::span<const int64_t> a);

// The canonical element of {a, a^r, -a, -a^r}: restrict to the two members
// with positive first entry, pick the clique_seq_less smaller.
ConwaySequence clique_representative(const ConwaySequence& p);

}  // namespace twobridge
