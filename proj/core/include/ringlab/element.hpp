#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ringlab {

/// Canonical encoding of an element of a finite ring.
using Index = std::uint32_t;

/// Element of a semilocal integer ring: reduced, positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

/**
 * @brief A ring element in any supported family.
 *
 * Finite rings use Index, semilocal rings use Fraction, and products with an
 * infinite factor use one component per factor.
 */
struct Element {
  std::variant<Index, Fraction, std::vector<Element>> value;

  Element() : value(Index{0}) {}
  Element(Index i) : value(i) {}  // NOLINT(google-explicit-constructor)
  Element(Fraction f) : value(f) {}  // NOLINT(google-explicit-constructor)
  explicit Element(std::vector<Element> parts) : value(std::move(parts)) {}

  bool is_index() const { return std::holds_alternative<Index>(value); }
  bool is_fraction() const { return std::holds_alternative<Fraction>(value); }
  bool is_tuple() const { return std::holds_alternative<std::vector<Element>>(value); }

  Index index() const;
  const Fraction& fraction() const;
  const std::vector<Element>& parts() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator<(const Element& a, const Element& b);
};

std::string to_string(const Element& e);

}  // namespace ringlab
