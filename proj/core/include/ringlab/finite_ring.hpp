#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ringlab/element.hpp"

namespace ringlab {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/**
 * @brief Finite commutative ring on the indices [0, size()).
 *
 * Index 0 is always the zero element. Rings up to kTableLimit elements carry
 * full addition and multiplication tables; larger rings evaluate through the
 * structural backend they were built from.
 */
class FiniteRing {
 public:
  static constexpr std::size_t kTableLimit = 1024;

  struct Arith {
    virtual ~Arith() = default;
    virtual std::size_t size() const = 0;
    virtual Index add(Index a, Index b) const = 0;
    virtual Index mul(Index a, Index b) const = 0;
    virtual Index neg(Index a) const = 0;
    virtual Index one() const = 0;
  };

  using Ptr = std::shared_ptr<const FiniteRing>;

  static Ptr integers_mod(std::uint64_t n);
  static Ptr poly_quotient(std::uint64_t p, const std::vector<std::int64_t>& modulus);
  /// Mixed-radix encoding, first factor most significant.
  static Ptr product(std::vector<Ptr> factors);
  /// Quotient by the additive subgroup @p ideal (an ideal of @p base).
  /// Cosets are numbered by ascending minimal representative; @p coset_of
  /// receives the canonical surjection when non-null.
  static Ptr quotient(Ptr base, const Bitset& ideal, std::vector<Index>* coset_of = nullptr);

  explicit FiniteRing(std::shared_ptr<const Arith> arith);

  std::size_t size() const { return size_; }
  Index zero() const { return 0; }
  Index one() const { return one_; }

  Index add(Index a, Index b) const {
    return tabled_ ? add_[static_cast<std::size_t>(a) * size_ + b] : arith_->add(a, b);
  }
  Index mul(Index a, Index b) const {
    return tabled_ ? mul_[static_cast<std::size_t>(a) * size_ + b] : arith_->mul(a, b);
  }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg_[b]); }
  Index pow(Index a, std::uint64_t k) const;

  bool is_unit(Index a) const { return inverse_[a] != kNone; }
  /// Returns kNone for non-units.
  Index inverse(Index a) const { return inverse_[a]; }
  bool is_idempotent(Index a) const { return mul(a, a) == a; }
  bool is_nilpotent(Index a) const { return nil_index_[a] != 0; }
  /// Smallest k with a^k = 0, or 0 when a is not nilpotent.
  unsigned nilpotency_index(Index a) const { return nil_index_[a]; }

  const std::vector<Index>& idempotents() const { return idempotents_; }
  const std::vector<Index>& units() const { return units_; }

  /// Factors when built by product(); empty otherwise.
  const std::vector<Ptr>& product_factors() const { return factors_; }

  static constexpr Index kNone = static_cast<Index>(-1);

 private:
  std::shared_ptr<const Arith> arith_;
  std::size_t size_ = 0;
  Index one_ = 0;
  bool tabled_ = false;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<Index> neg_;
  std::vector<Index> inverse_;
  std::vector<unsigned char> nil_index_;
  std::vector<Index> idempotents_;
  std::vector<Index> units_;
  std::vector<Ptr> factors_;
};

/// Mixed-radix helpers for product rings (first factor most significant).
std::vector<Index> split_product(const std::vector<FiniteRing::Ptr>& factors, Index a);
Index join_product(const std::vector<FiniteRing::Ptr>& factors, std::span<const Index> parts);

}  // namespace ringlab
