#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/ring.hpp"

namespace ringlab {

struct Term {
  Element coeff;
  std::vector<unsigned> exp;
};

/**
 * @brief Polynomial in a fixed number of variables with coefficients in a ring.
 *
 * Terms are kept normalized: no zero coefficients, no repeated exponent
 * vectors, graded lexicographic order with the largest term first.
 */
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Ring ring, std::size_t vars, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  std::size_t vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Ring ring_;
  std::size_t vars_ = 0;
  std::vector<Term> terms_;
};

struct PolySystem {
  Ring ring;
  std::size_t vars = 0;
  std::vector<Polynomial> polys;
};

/// Checks arity and that the system is nonempty.
PolySystem make_system(Ring ring, std::size_t vars, std::vector<Polynomial> polys);

Element poly_eval(const Polynomial& f, const std::vector<Element>& point);
bool satisfies(const PolySystem& sys, const std::vector<Element>& point);

/// Coefficients pushed through a recorded surjection.
Polynomial map_poly(const Polynomial& f, const RingMap& map);
PolySystem map_system(const PolySystem& sys, const RingMap& map);

/// {"vars":n,"polys":[{"terms":[{"coeff":c,"exp":[...]}]}]}
PolySystem system_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json system_to_json(const PolySystem& sys);
std::string to_string(const Polynomial& f);

}  // namespace ringlab
