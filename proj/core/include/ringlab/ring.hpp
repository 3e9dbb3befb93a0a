#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/descriptor.hpp"
#include "ringlab/element.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/semilocal.hpp"

namespace ringlab {

struct Limits {
  std::size_t ring_size = 4096;
  std::size_t ideal_enum = 64;
};

struct SpectrumGraph;

class Ring;

namespace detail {
struct RingNode;
Ring with_descriptor(const Ring& r, RingDescriptor desc);
}  // namespace detail

/**
 * @brief Immutable handle to a ring of one of three families.
 *
 * finite: every descriptor whose ring is finite, including finite products
 * and quotients (elements are Index). semilocal: Z localized away from P
 * (elements are Fraction). product: a product with at least one infinite
 * factor (elements are tuples, one component per factor).
 */
class Ring {
 public:
  enum class Family { finite, semilocal, product };

  Ring() = default;

  Family family() const;
  bool is_finite() const { return family() == Family::finite; }
  const FiniteRing& finite() const;
  const FiniteRing::Ptr& finite_ptr() const;
  const SemilocalRing& semilocal() const;
  const std::vector<Ring>& factors() const;

  const RingDescriptor& descriptor() const;
  const Limits& limits() const;
  std::string name() const { return describe(descriptor()); }
  std::optional<std::size_t> size() const;
  bool is_zero_ring() const;

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element pow(const Element& a, std::uint64_t k) const;
  Element from_int(std::int64_t v) const;

  bool is_zero(const Element& a) const { return a == zero(); }
  bool is_unit(const Element& a) const;
  std::optional<Element> inverse(const Element& a) const;
  bool is_idempotent(const Element& a) const { return mul(a, a) == a; }
  /// Smallest k with a^k = 0, or 0 when a is not nilpotent.
  unsigned nilpotency_index(const Element& a) const;

  /// Throws ErrorKind::encoding unless @p a is a canonical element of this ring.
  void check(const Element& a) const;
  Element element_from_json(const nlohmann::json& j, const std::string& path = "") const;
  nlohmann::json element_to_json(const Element& a) const;

  /// Ascending canonical order.
  std::vector<Element> idempotents() const;
  /// Product family: @p x in slot @p i and zero elsewhere.
  Element embed(std::size_t i, const Element& x) const;

  /// Spectrum, computed once and cached (defined with the spectrum module).
  const SpectrumGraph& spectrum() const;

  bool same_as(const Ring& other) const { return node_ == other.node_; }
  bool valid() const { return static_cast<bool>(node_); }

  static Ring make_finite(FiniteRing::Ptr ring, RingDescriptor desc, Limits limits = {});
  static Ring make_semilocal(std::vector<std::int64_t> primes, RingDescriptor desc, Limits limits = {});
  /// Flattens to the finite family when every factor is finite.
  static Ring make_product(std::vector<Ring> factors, Limits limits = {});

 private:
  friend Ring detail::with_descriptor(const Ring& r, RingDescriptor desc);
  std::shared_ptr<const detail::RingNode> node_;
  const detail::RingNode& node() const;
};

Ring ring_from_descriptor(const RingDescriptor& desc, const Limits& limits = {});

/// A recorded surjection (quotient or localization map).
struct RingMap {
  Ring source;
  Ring target;
  std::vector<Index> table;  // finite source and target
  std::function<Element(const Element&)> fn;

  Element operator()(const Element& a) const;
  Index operator()(Index a) const { return table[a]; }
  static RingMap identity(const Ring& r);
};

enum class ArithOp { add, mul, neg };
Element arith(const Ring& A, ArithOp op, const Element& a, const std::optional<Element>& b = std::nullopt);

struct UnitResult {
  bool unit = false;
  std::optional<Element> inverse;
};
UnitResult is_unit(const Ring& A, const Element& a);

struct ElementPredicates {
  bool idempotent = false;
  bool nilpotent = false;
  std::optional<unsigned> nilpotency_index;
};
ElementPredicates element_predicates(const Ring& A, const Element& a);

std::vector<Element> idempotents(const Ring& A);

}  // namespace ringlab
