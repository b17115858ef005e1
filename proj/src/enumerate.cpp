#include "twobridge/enumerate.hpp"

#include <algorithm>

namespace twobridge {

bool valid_umn(const UmnSpec& spec) {
  return spec.m >= 4 && spec.n >= 2 && spec.m % 2 == 0 && spec.n % 2 == 0 &&
         2 * spec.n <= spec.m;
}

int64_t composition_count(int64_t m, int64_t n) {
  if (n < 1 || m < 2 * n) return 0;
  int64_t top = m / 2 - 1;
  int64_t k = n - 1;
  int64_t result = 1;
  for (int64_t i = 1; i <= k; ++i)
    result = checked_mul(result, top - k + i) / i;
  return result;
}

std::vector<ConwaySequence> enumerate_umn(const UmnSpec& spec) {
  std::vector<ConwaySequence> out;
  for_each_representative(spec, [&](std::span<const int64_t> a) {
    out.emplace_back(std::vector<int64_t>(a.begin(), a.end()));
  });
  return out;
}

namespace {

bool span_palindromic(std::span<const int64_t> a) {
  size_t n = a.size();
  for (size_t i = 0; i < n / 2; ++i)
    if (a[i] != a[n - 1 - i]) return false;
  return true;
}

bool span_antipalindromic(std::span<const int64_t> a) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    if (a[i] != -a[n - 1 - i]) return false;
  return true;
}

}  // namespace

UmnStats count_umn(const UmnSpec& spec) {
  UmnStats stats;
  stats.raw_sequences =
      checked_mul(composition_count(spec.m, spec.n),
                  static_cast<int64_t>(uint64_t{1} << spec.n));
  for_each_representative(spec, [&](std::span<const int64_t> a) {
    ++stats.representatives;
    if (span_palindromic(a)) ++stats.palindromic;
    if (span_antipalindromic(a)) ++stats.antipalindromic;
  });
  return stats;
}

std::vector<UmnSpec> census_domain(int max_c) {
  std::vector<UmnSpec> domain;
  for (int64_t m = 4;; m += 2) {
    bool any = false;
    for (int64_t n = 2; 2 * n <= m; n += 2) {
      if (m - n + 1 <= max_c) {
        domain.push_back({m, n});
        any = true;
      }
    }
    if (!any) break;
  }
  return domain;
}

std::vector<UmnSpec> full_domain(int max_c) {
  auto zigzag = census_domain(max_c);
  int64_t max_m = 0;
  for (const auto& spec : zigzag) max_m = std::max(max_m, spec.m);
  std::vector<UmnSpec> domain;
  for (int64_t m = 4; m <= max_m; m += 2)
    for (int64_t n = 2; 2 * n <= m; n += 2) domain.push_back({m, n});
  return domain;
}

}  // namespace twobridge
