#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

// Exact rational and continued-fraction arithmetic on checked 64-bit
// integers. Everything the census needs stays far below 2^63 (the largest
// slope numerator reachable from 28-crossing presentations is a few million),
// so overflow is treated as a bug and throws instead of wrapping.

namespace twobridge {

// Thrown when evaluating a continued fraction hits a zero tail (1/0) or a
// zero overall value; only possible when some term has unit magnitude.
class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// floor division / remainder; mod_floor(a, b) lies in [0, b) for b > 0.
int64_t floor_div(int64_t a, int64_t b);
int64_t mod_floor(int64_t a, int64_t b);

int64_t gcd64(int64_t a, int64_t b);

// A reduced fraction alpha/beta with alpha > 0; the sign of the value is
// carried by beta. Zero is not representable.
struct Fraction {
  int64_t alpha;  // numerator, always positive
  int64_t beta;   // denominator, nonzero, sign of the value

  Fraction(int64_t numerator, int64_t denominator);

  bool operator==(const Fraction&) const = default;
};

// A finite continued-fraction term sequence a_1,...,a_n; every term nonzero.
class CFTerms {
 public:
  explicit CFTerms(std::vector<int64_t> terms);

  const std::vector<int64_t>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  int64_t operator[](size_t i) const { return terms_[i]; }

  bool operator==(const CFTerms&) const = default;

 private:
  std::vector<int64_t> terms_;
};

// Value of a_1 + 1/(a_2 + 1/(... + 1/a_n)), reduced. Evaluates tail-first
// with exact integer pairs. Throws EvaluationError on a zero tail or zero
// value; neither can occur when all |a_i| >= 2 (the tail magnitude then
// stays strictly above 1 at every step).
Fraction eval_cf(const CFTerms& t);

// The unique expansion of f with all terms >= 1 and the last term >= 2.
// Requires alpha > beta > 0.
CFTerms positive_cf(const Fraction& f);

// An all-even expansion of f, found by repeatedly taking the nearest even
// quotient (ties broken toward larger magnitude) and recursing on the
// reciprocal remainder. Requires alpha odd, beta even and alpha > |beta|;
// such fractions always have an expansion of even length, and fractions
// with odd denominator never do. eval_cf inverts this exactly.
CFTerms even_cf(const Fraction& f);

// x in [1, a-1] with b*x = 1 (mod a). Requires a >= 2 and b invertible.
int64_t mod_inverse(int64_t b, int64_t a);

}  // namespace twobridge
