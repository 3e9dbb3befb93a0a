#include "ringlab/finite_ring.hpp"

#include <algorithm>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

class ZnArith final : public FiniteRing::Arith {
 public:
  explicit ZnArith(std::uint64_t n) : n_(n) {}
  std::size_t size() const override { return n_; }
  Index add(Index a, Index b) const override { return static_cast<Index>((a + std::uint64_t{b}) % n_); }
  Index mul(Index a, Index b) const override { return static_cast<Index>((std::uint64_t{a} * b) % n_); }
  Index neg(Index a) const override { return static_cast<Index>((n_ - a) % n_); }
  Index one() const override { return static_cast<Index>(1 % n_); }

 private:
  std::uint64_t n_;
};

// Elements are coefficient vectors of length deg, encoded little-endian in base p.
class PolyArith final : public FiniteRing::Arith {
 public:
  PolyArith(std::uint64_t p, std::vector<std::int64_t> modulus)
      : p_(p), deg_(modulus.size() - 1), modulus_(std::move(modulus)) {
    size_ = 1;
    for (std::size_t i = 0; i < deg_; ++i) size_ *= p_;
  }
  std::size_t size() const override { return size_; }
  Index add(Index a, Index b) const override {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < deg_; ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }
  Index neg(Index a) const override {
    auto x = decode(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return encode(x);
  }
  Index mul(Index a, Index b) const override {
    const auto x = decode(a), y = decode(b);
    std::vector<std::uint64_t> prod(2 * deg_, 0);
    for (std::size_t i = 0; i < deg_; ++i)
      for (std::size_t j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // reduce with the monic modulus from the top degree down
    for (std::size_t k = prod.size(); k-- > deg_;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::size_t i = 0; i < deg_; ++i) {
        const std::uint64_t m = static_cast<std::uint64_t>(modulus_[i]);
        prod[k - deg_ + i] = (prod[k - deg_ + i] + (p_ - (c * m) % p_)) % p_;
      }
    }
    prod.resize(deg_);
    return encode(prod);
  }
  Index one() const override { return 1; }

 private:
  std::vector<std::uint64_t> decode(Index a) const {
    std::vector<std::uint64_t> c(deg_);
    for (std::size_t i = 0; i < deg_; ++i) {
      c[i] = a % p_;
      a = static_cast<Index>(a / p_);
    }
    return c;
  }
  Index encode(const std::vector<std::uint64_t>& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = deg_; i-- > 0;) v = v * p_ + c[i];
    return static_cast<Index>(v);
  }

  std::uint64_t p_;
  std::size_t deg_;
  std::vector<std::int64_t> modulus_;
  std::size_t size_;
};

class ProductArith final : public FiniteRing::Arith {
 public:
  explicit ProductArith(std::vector<FiniteRing::Ptr> factors) : factors_(std::move(factors)) {
    size_ = 1;
    for (const auto& f : factors_) size_ *= f->size();
  }
  std::size_t size() const override { return size_; }
  Index add(Index a, Index b) const override {
    return combine(a, b, [](const FiniteRing& r, Index x, Index y) { return r.add(x, y); });
  }
  Index mul(Index a, Index b) const override {
    return combine(a, b, [](const FiniteRing& r, Index x, Index y) { return r.mul(x, y); });
  }
  Index neg(Index a) const override {
    auto parts = split_product(factors_, a);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = factors_[i]->neg(parts[i]);
    return join_product(factors_, parts);
  }
  Index one() const override {
    std::vector<Index> parts;
    for (const auto& f : factors_) parts.push_back(f->one());
    return join_product(factors_, parts);
  }

 private:
  template <class Op>
  Index combine(Index a, Index b, Op op) const {
    auto x = split_product(factors_, a);
    const auto y = split_product(factors_, b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = op(*factors_[i], x[i], y[i]);
    return join_product(factors_, x);
  }

  std::vector<FiniteRing::Ptr> factors_;
  std::size_t size_;
};

class QuotientArith final : public FiniteRing::Arith {
 public:
  QuotientArith(FiniteRing::Ptr base, std::vector<Index> reps, std::vector<Index> coset)
      : base_(std::move(base)), reps_(std::move(reps)), coset_(std::move(coset)) {}
  std::size_t size() const override { return reps_.size(); }
  Index add(Index a, Index b) const override { return coset_[base_->add(reps_[a], reps_[b])]; }
  Index mul(Index a, Index b) const override { return coset_[base_->mul(reps_[a], reps_[b])]; }
  Index neg(Index a) const override { return coset_[base_->neg(reps_[a])]; }
  Index one() const override { return coset_[base_->one()]; }

 private:
  FiniteRing::Ptr base_;
  std::vector<Index> reps_;
  std::vector<Index> coset_;
};

}  // namespace

std::vector<Index> split_product(const std::vector<FiniteRing::Ptr>& factors, Index a) {
  std::vector<Index> parts(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    const auto m = static_cast<Index>(factors[i]->size());
    parts[i] = a % m;
    a /= m;
  }
  return parts;
}

Index join_product(const std::vector<FiniteRing::Ptr>& factors, std::span<const Index> parts) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) v = v * factors[i]->size() + parts[i];
  return static_cast<Index>(v);
}

FiniteRing::Ptr FiniteRing::integers_mod(std::uint64_t n) {
  return std::make_shared<FiniteRing>(std::make_shared<ZnArith>(n));
}

FiniteRing::Ptr FiniteRing::poly_quotient(std::uint64_t p, const std::vector<std::int64_t>& modulus) {
  return std::make_shared<FiniteRing>(std::make_shared<PolyArith>(p, modulus));
}

FiniteRing::Ptr FiniteRing::product(std::vector<Ptr> factors) {
  auto arith = std::make_shared<ProductArith>(factors);
  auto ring = std::make_shared<FiniteRing>(arith);
  ring->factors_ = std::move(factors);
  return ring;
}

FiniteRing::Ptr FiniteRing::quotient(Ptr base, const Bitset& ideal, std::vector<Index>* coset_of) {
  const std::size_t n = base->size();
  std::vector<Index> ideal_elems;
  for (auto i = ideal.find_first(); i != Bitset::npos; i = ideal.find_next(i))
    ideal_elems.push_back(static_cast<Index>(i));
  std::vector<Index> coset(n, kNone);
  std::vector<Index> reps;
  for (Index a = 0; a < n; ++a) {
    if (coset[a] != kNone) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(a);
    for (Index x : ideal_elems) coset[base->add(a, x)] = id;
  }
  if (coset_of) *coset_of = coset;
  return std::make_shared<FiniteRing>(
      std::make_shared<QuotientArith>(std::move(base), std::move(reps), std::move(coset)));
}

FiniteRing::FiniteRing(std::shared_ptr<const Arith> arith) : arith_(std::move(arith)) {
  size_ = arith_->size();
  if (size_ == 0 || size_ > 65536) throw Error(ErrorKind::size_cap, "finite ring size out of range");
  one_ = arith_->one();
  const std::size_t n = size_;
  if (n <= kTableLimit) {
    add_.resize(n * n);
    mul_.resize(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = a; b < n; ++b) {
        const auto s = static_cast<std::uint16_t>(arith_->add(a, b));
        const auto m = static_cast<std::uint16_t>(arith_->mul(a, b));
        add_[a * n + b] = add_[b * n + a] = s;
        mul_[a * n + b] = mul_[b * n + a] = m;
      }
    tabled_ = true;
  }
  neg_.resize(n);
  for (Index a = 0; a < n; ++a) neg_[a] = arith_->neg(a);

  inverse_.assign(n, kNone);
  for (Index a = 0; a < n; ++a) {
    if (inverse_[a] != kNone) continue;
    for (Index b = a; b < n; ++b)
      if (mul(a, b) == one_) {
        inverse_[a] = b;
        inverse_[b] = a;
        break;
      }
  }
  for (Index a = 0; a < n; ++a)
    if (inverse_[a] != kNone) units_.push_back(a);

  nil_index_.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    Index x = a;
    // the nilpotency index of a finite ring element is at most log2(size) + 1
    for (unsigned k = 1; k <= 64; ++k) {
      if (x == 0) {
        nil_index_[a] = static_cast<unsigned char>(k);
        break;
      }
      x = mul(x, a);
    }
  }
  for (Index a = 0; a < n; ++a)
    if (mul(a, a) == a) idempotents_.push_back(a);
}

Index FiniteRing::pow(Index a, std::uint64_t k) const {
  Index result = one_;
  Index base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

}  // namespace ringlab
