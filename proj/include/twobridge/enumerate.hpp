#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "twobridge/conway.hpp"

// Generation of the sets U^{m,n}: clique representatives of even Conway
// presentations with n entries whose magnitudes sum to m. Compositions are
// streamed in colexicographic order and sign patterns as binary counters
// (bit j set = entry j negative), so emission order is reproducible; a
// sign variant is emitted iff it is its own clique representative, which
// needs no materialized dedup state.

namespace twobridge {

struct UmnSpec {
  int64_t m = 0;
  int64_t n = 0;

  bool operator==(const UmnSpec&) const = default;
};

// m, n even, m >= 4, 2 <= n <= m/2.
bool valid_umn(const UmnSpec& spec);

// Number of ordered tuples of positive even integers summing to m:
// binomial(m/2 - 1, n - 1).
int64_t composition_count(int64_t m, int64_t n);

// Streams every tuple of positive even integers of length n summing to m,
// colexicographically (the last entry varies slowest). Emits nothing when
// 2n > m. The span passed to emit is reused between calls.
template <typename F>
void for_each_even_composition(int64_t m, int64_t n, F&& emit) {
  if (n < 1 || m < 2 * n) return;
  std::vector<int64_t> buf(static_cast<size_t>(n));
  // rec(pos, left): fill buf[0..pos] with even positives summing to left,
  // choosing buf[pos] in ascending order.
  auto rec = [&](auto&& self, int64_t pos, int64_t left) -> void {
    if (pos == 0) {
      buf[0] = left;
      emit(std::span<const int64_t>(buf));
      return;
    }
    for (int64_t v = 2; v <= left - 2 * pos; v += 2) {
      buf[static_cast<size_t>(pos)] = v;
      self(self, pos - 1, left - v);
    }
  };
  rec(rec, n - 1, m);
}

// Streams the clique representatives of U^{m,n} as raw entry spans, in
// deterministic order. The span is reused between calls.
template <typename F>
void for_each_representative(const UmnSpec& spec, F&& emit) {
  if (spec.n < 1 || spec.n >= 63)
    throw std::invalid_argument("region count out of range");
  std::vector<int64_t> signed_buf(static_cast<size_t>(spec.n));
  for_each_even_composition(spec.m, spec.n, [&](std::span<const int64_t> comp) {
    uint64_t patterns = uint64_t{1} << comp.size();
    for (uint64_t bits = 0; bits < patterns; ++bits) {
      for (size_t j = 0; j < comp.size(); ++j)
        signed_buf[j] = (bits >> j) & 1 ? -comp[j] : comp[j];
      if (is_clique_representative(signed_buf))
        emit(std::span<const int64_t>(signed_buf));
    }
  });
}

// Materialized U^{m,n} in emission order.
std::vector<ConwaySequence> enumerate_umn(const UmnSpec& spec);

struct UmnStats {
  int64_t representatives = 0;
  int64_t palindromic = 0;
  int64_t antipalindromic = 0;
  int64_t raw_sequences = 0;  // compositions * 2^n
};

UmnStats count_umn(const UmnSpec& spec);

// The (m, n) pairs whose U^{m,n} can contain knots of crossing number at
// most max_c: even pairs with 2n <= m and m - n + 1 <= max_c.
std::vector<UmnSpec> census_domain(int max_c);

// Every even (m, n) with 2 <= n <= m/2 up to the largest m reached by
// census_domain(max_c); this is the full set of tabulated presentation
// families, including those whose knots all exceed max_c crossings.
std::vector<UmnSpec> full_domain(int max_c);

}  // namespace twobridge
