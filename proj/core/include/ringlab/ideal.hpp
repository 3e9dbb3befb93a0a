#pragma once

#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/ring.hpp"

namespace ringlab {

/**
 * @brief An ideal: an exact element set (finite), a normalized principal
 * descriptor (semilocal), or one ideal per factor (product family).
 *
 * Ideals do not own their ring; operations take the ring explicitly.
 */
class Ideal {
 public:
  struct Finite {
    Bitset mask;
    std::vector<Index> elements;  // ascending
  };
  /// zero, or the principal ideal generated by prod p^exps[i] (unit when all 0).
  struct Semilocal {
    bool zero = true;
    std::vector<std::int64_t> primes;
    std::vector<int> exps;
  };
  struct Product {
    std::vector<Ideal> parts;
  };

  std::variant<Finite, Semilocal, Product> rep;
  std::vector<Element> gens;

  bool contains(const Element& a) const;
  bool is_zero() const;
  bool is_whole() const;
  /// Finite ideals only.
  std::size_t size() const;
  const Finite& finite() const { return std::get<Finite>(rep); }
  const Semilocal& semilocal() const { return std::get<Semilocal>(rep); }
  const Product& product() const { return std::get<Product>(rep); }

  friend bool operator==(const Ideal& a, const Ideal& b);
};

/// I subset of J.
bool ideal_subset(const Ideal& I, const Ideal& J);

Ideal zero_ideal(const Ring& A);
Ideal whole_ideal(const Ring& A);
Ideal ideal_generate(const Ring& A, const std::vector<Element>& gens);
Ideal finite_ideal_from_mask(const Ring& A, Bitset mask);

enum class IdealOp { sum, product, intersect };
Ideal ideal_ops(const Ring& A, const Ideal& I, const Ideal& J, IdealOp op);
inline Ideal ideal_sum(const Ring& A, const Ideal& I, const Ideal& J) { return ideal_ops(A, I, J, IdealOp::sum); }
inline Ideal ideal_intersect(const Ring& A, const Ideal& I, const Ideal& J) {
  return ideal_ops(A, I, J, IdealOp::intersect);
}

Ideal annihilator(const Ring& A, const Element& f);

struct Radicals {
  Ideal nilradical;
  Ideal jacobson;
};
Radicals radicals(const Ring& A);

struct PureResult {
  bool pure = true;
  std::optional<Element> counterexample;
};
/// For every f in I, Ann(f) + I = A.
PureResult is_pure(const Ring& A, const Ideal& I);

struct RegularResult {
  bool regular = false;
  std::optional<Element> generator;  // idempotent e with I = Ae
};
/// Every f in I satisfies f = fe for an idempotent e in I.
RegularResult is_regular(const Ring& A, const Ideal& I);

struct Quotient {
  Ring ring;
  RingMap map;
};
Quotient quotient_ring(const Ring& A, const Ideal& I);

/// All ideals of a finite ring, sorted by (cardinality, element set).
std::vector<Ideal> enumerate_ideals(const Ring& A);

/// A small generating set: elements taken in ascending order when not yet generated.
std::vector<Element> ideal_generators(const Ring& A, const Ideal& I);

nlohmann::json ideal_to_json(const Ring& A, const Ideal& I);
std::string ideal_label(const Ring& A, const Ideal& I);

}  // namespace ringlab
