#include "ringlab/semilocal.hpp"

#include <algorithm>
#include <numeric>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "semilocal arithmetic overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "semilocal arithmetic overflow");
  return r;
}

}  // namespace

SemilocalRing::SemilocalRing(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  for (auto p : primes_) radical_ = checked_mul(radical_, p);
}

Fraction SemilocalRing::make(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorKind::encoding, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  for (auto p : primes_)
    if (den % p == 0)
      throw Error(ErrorKind::encoding,
                  "denominator " + std::to_string(den) + " is divisible by " + std::to_string(p));
  return Fraction{num, den};
}

bool SemilocalRing::is_canonical(const Fraction& f) const {
  if (f.den <= 0 || std::gcd(f.num, f.den) != 1) return false;
  return std::none_of(primes_.begin(), primes_.end(), [&](std::int64_t p) { return f.den % p == 0; });
}

Fraction SemilocalRing::add(const Fraction& a, const Fraction& b) const {
  const std::int64_t g = std::gcd(a.den, b.den);
  const std::int64_t num = checked_add(checked_mul(a.num, b.den / g), checked_mul(b.num, a.den / g));
  return make(num, checked_mul(a.den / g, b.den));
}

Fraction SemilocalRing::mul(const Fraction& a, const Fraction& b) const {
  const std::int64_t g1 = std::gcd(a.num, b.den);
  const std::int64_t g2 = std::gcd(b.num, a.den);
  const std::int64_t n1 = g1 ? a.num / g1 : a.num, d2 = g1 ? b.den / g1 : b.den;
  const std::int64_t n2 = g2 ? b.num / g2 : b.num, d1 = g2 ? a.den / g2 : a.den;
  return make(checked_mul(n1, n2), checked_mul(d1, d2));
}

Fraction SemilocalRing::neg(const Fraction& a) const { return Fraction{-a.num, a.den}; }

bool SemilocalRing::is_unit(const Fraction& a) const {
  if (a.num == 0) return false;
  return std::none_of(primes_.begin(), primes_.end(), [&](std::int64_t p) { return a.num % p == 0; });
}

Fraction SemilocalRing::inverse(const Fraction& a) const {
  if (!is_unit(a)) throw Error(ErrorKind::precondition, "element is not a unit");
  return make(a.den, a.num);
}

int SemilocalRing::valuation(const Fraction& a, std::int64_t p) const {
  if (a.num == 0) throw Error(ErrorKind::precondition, "valuation of zero");
  int v = 0;
  std::int64_t n = a.num;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace ringlab
