#include "twobridge/conway.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace twobridge {

ConwaySequence::ConwaySequence(std::vector<int64_t> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2 || entries_.size() % 2 != 0)
    throw std::invalid_argument("even presentation needs even length >= 2");
  for (int64_t a : entries_) {
    if (a == 0 || a % 2 != 0)
      throw std::invalid_argument("even presentation entries must be even and nonzero");
    crossings_ = checked_add(crossings_, std::llabs(a));
  }
}

ConwaySequence ConwaySequence::parse(std::string_view text) {
  std::vector<int64_t> entries;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad sequence entry '" + std::string(item) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ConwaySequence(std::move(entries));
}

std::string ConwaySequence::str() const {
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Fraction slope(const ConwaySequence& p) {
  return eval_cf(CFTerms(p.entries()));
}

ConwaySequence reversed(const ConwaySequence& p) {
  std::vector<int64_t> e(p.entries().rbegin(), p.entries().rend());
  return ConwaySequence(std::move(e));
}

ConwaySequence negated(const ConwaySequence& p) {
  std::vector<int64_t> e;
  e.reserve(p.length());
  for (int64_t a : p.entries()) e.push_back(-a);
  return ConwaySequence(std::move(e));
}

bool is_palindromic(const ConwaySequence& p) {
  const auto& a = p.entries();
  return std::equal(a.begin(), a.end(), a.rbegin());
}

bool is_antipalindromic(const ConwaySequence& p) {
  const auto& a = p.entries();
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    if (a[i] != -a[n - 1 - i]) return false;
  return true;
}

bool clique_entry_less(int64_t x, int64_t y) {
  int64_t ax = std::llabs(x), ay = std::llabs(y);
  if (ax != ay) return ax < ay;
  return x > y;  // same magnitude: positive sorts first
}

bool clique_seq_less(std::span<const int64_t> x, std::span<const int64_t> y) {
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return clique_entry_less(x[i], y[i]);
  }
  return x.size() < y.size();
}

bool is_clique_representative(std::span<const int64_t> a) {
  if (a.front() < 0) return false;
  // The other positive-first clique member is a^r or -a^r, whichever starts
  // positive; a is canonical iff it is not beaten by that rival. Compare
  // in place, walking the rival from the back.
  size_t n = a.size();
  int64_t flip = a[n - 1] > 0 ? 1 : -1;  // rival[i] = flip * a[n-1-i]
  for (size_t i = 0; i < n; ++i) {
    int64_t rival = flip * a[n - 1 - i];
    if (a[i] != rival) return clique_entry_less(a[i], rival);
  }
  return true;  // rival equals a (palindromic or antipalindromic)
}

ConwaySequence clique_representative(const ConwaySequence& p) {
  const auto& a = p.entries();
  size_t n = a.size();
  std::vector<int64_t> first(a);
  if (first[0] < 0)
    for (int64_t& v : first) v = -v;
  std::vector<int64_t> second(n);
  int64_t flip = a[n - 1] > 0 ? 1 : -1;
  for (size_t i = 0; i < n; ++i) second[i] = flip * a[n - 1 - i];
  if (clique_seq_less(second, first)) first.swap(second);
  return ConwaySequence(std::move(first));
}

}  // namespace twobridge
