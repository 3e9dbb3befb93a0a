#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/element.hpp"

namespace ringlab {

/**
 * @brief The localization of the integers at the complement of finitely many
 * primes: fractions whose denominators avoid every prime in P.
 *
 * Arithmetic is exact on 64-bit integers; results that do not fit raise
 * ErrorKind::overflow.
 */
class SemilocalRing {
 public:
  explicit SemilocalRing(std::vector<std::int64_t> primes);

  /// Ascending prime set.
  const std::vector<std::int64_t>& primes() const { return primes_; }
  /// Product of the primes in P.
  std::int64_t radical() const { return radical_; }

  /// Reduces num/den; throws ErrorKind::encoding when den is 0 or shares a
  /// prime with P.
  Fraction make(std::int64_t num, std::int64_t den = 1) const;
  bool is_canonical(const Fraction& f) const;

  Fraction add(const Fraction& a, const Fraction& b) const;
  Fraction mul(const Fraction& a, const Fraction& b) const;
  Fraction neg(const Fraction& a) const;
  Fraction sub(const Fraction& a, const Fraction& b) const { return add(a, neg(b)); }

  bool is_unit(const Fraction& a) const;
  Fraction inverse(const Fraction& a) const;
  /// p-adic valuation of a nonzero element for p in P.
  int valuation(const Fraction& a, std::int64_t p) const;
  bool divisible(const Fraction& a, std::int64_t p) const { return a.num % p == 0; }

 private:
  std::vector<std::int64_t> primes_;
  std::int64_t radical_ = 1;
};

}  // namespace ringlab
