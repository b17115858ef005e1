#include "twobridge/rational.hpp"

#include <cstdlib>
#include <string>

namespace twobridge {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw std::overflow_error(std::string("64-bit overflow in ") + op);
}

}  // namespace

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t mod_floor(int64_t a, int64_t b) {
  return a - floor_div(a, b) * b;
}

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Fraction::Fraction(int64_t numerator, int64_t denominator) {
  if (denominator == 0)
    throw EvaluationError("fraction with zero denominator");
  if (numerator == 0)
    throw EvaluationError("fraction with zero value is not representable");
  int64_t g = gcd64(numerator, denominator);
  numerator /= g;
  denominator /= g;
  if (numerator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  alpha = numerator;
  beta = denominator;
}

CFTerms::CFTerms(std::vector<int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty())
    throw std::invalid_argument("continued fraction needs at least one term");
  for (int64_t t : terms_)
    if (t == 0) throw std::invalid_argument("continued fraction term is zero");
}

Fraction eval_cf(const CFTerms& t) {
  // Tail value as p/q; prepending a term maps p/q -> a + q/p = (a*p + q)/p.
  // gcd(a*p + q, p) = gcd(q, p), so the pair stays coprime throughout.
  const auto& a = t.terms();
  int64_t p = a.back();
  int64_t q = 1;
  for (size_t i = a.size() - 1; i-- > 0;) {
    if (p == 0) throw EvaluationError("zero tail while evaluating [a_1,...]");
    int64_t np = checked_add(checked_mul(a[i], p), q);
    q = p;
    p = np;
  }
  return Fraction(p, q);
}

CFTerms positive_cf(const Fraction& f) {
  if (f.beta <= 0 || f.alpha <= f.beta)
    throw std::invalid_argument("positive_cf needs alpha > beta > 0");
  // Plain Euclidean quotients: every term >= 1 and the final one >= 2,
  // since remainders strictly decrease.
  std::vector<int64_t> terms;
  int64_t p = f.alpha;
  int64_t q = f.beta;
  while (q != 0) {
    terms.push_back(p / q);
    int64_t r = p % q;
    p = q;
    q = r;
  }
  return CFTerms(std::move(terms));
}

namespace {

// Even integer nearest to p/q, ties toward larger magnitude, exact.
int64_t nearest_even(int64_t p, int64_t q) {
  int64_t half = checked_mul(floor_div(p, checked_mul(2, q)), 2);  // largest even <= p/q
  // p/q lies in [half, half + 2); compare distances to half and half + 2
  // via |p - c*q| scaled by |q|.
  int64_t d_lo = std::llabs(checked_sub(p, checked_mul(half, q)));
  int64_t d_hi = std::llabs(checked_sub(p, checked_mul(half + 2, q)));
  if (d_lo < d_hi) return half;
  if (d_hi < d_lo) return half + 2;
  // Tie: p/q is an odd integer; prefer the candidate of larger magnitude.
  return std::llabs(half) > std::llabs(half + 2) ? half : half + 2;
}

}  // namespace

CFTerms even_cf(const Fraction& f) {
  if (f.alpha % 2 == 0)
    throw std::invalid_argument("even_cf needs odd alpha");
  if (f.beta % 2 != 0)
    throw std::invalid_argument(
        "even_cf needs an even denominator; fractions with odd denominator "
        "have no all-even expansion");
  if (f.alpha <= std::llabs(f.beta))
    throw std::invalid_argument("even_cf needs |value| > 1");
  // The value parity alternates (odd/even <-> even/odd), so |denominator|
  // strictly decreases and the walk ends on an even integer after an even
  // number of steps.
  std::vector<int64_t> terms;
  int64_t p = f.alpha;
  int64_t q = f.beta;
  while (true) {
    int64_t a = nearest_even(p, q);
    terms.push_back(a);
    int64_t r = checked_sub(p, checked_mul(a, q));
    if (r == 0) break;
    p = q;
    q = r;
  }
  return CFTerms(std::move(terms));
}

int64_t mod_inverse(int64_t b, int64_t a) {
  if (a < 2) throw std::invalid_argument("mod_inverse needs modulus >= 2");
  b = mod_floor(b, a);
  // Extended Euclid on (a, b), tracking only the coefficient of b.
  int64_t r0 = a, r1 = b;
  int64_t x0 = 0, x1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t x2 = x0 - q * x1;
    r0 = r1;
    r1 = r2;
    x0 = x1;
    x1 = x2;
  }
  if (r0 != 1)
    throw std::invalid_argument("mod_inverse of a non-invertible residue");
  return mod_floor(x0, a);
}

}  // namespace twobridge
