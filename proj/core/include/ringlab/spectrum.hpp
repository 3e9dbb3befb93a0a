#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/topology.hpp"

namespace ringlab {

struct SpecPoint {
  std::size_t id = 0;
  Ideal ideal;
  bool maximal = false;
  bool minimal = false;
  /// Finite: element set "{0,2,4}"; semilocal: "0" or "2A"; product family: "k:<inner>".
  std::string label;
  /// Product family: factor index and point id inside that factor.
  std::size_t factor = 0;
  std::size_t local_id = 0;
  /// Semilocal: the prime p of pA, or 0 for the zero ideal.
  std::int64_t prime = 0;
};

/**
 * @brief All prime ideals of a ring with their inclusion order.
 *
 * Finite rings: points sorted by their element sets. Semilocal rings: the
 * zero ideal first, then pA by ascending p. Product family: the factor
 * spectra concatenated in factor order.
 */
struct SpectrumGraph {
  std::vector<SpecPoint> points;
  std::vector<std::vector<bool>> le;  // le[i][j]: point i contained in point j

  std::vector<std::size_t> maximal_ids() const;
  std::vector<std::size_t> minimal_ids() const;
  SpectralSpace to_space() const;
};

/// Minimal nonzero idempotents, ascending.
std::vector<Element> primitive_idempotents(const Ring& A);

/// The cached spectrum of A.
const SpectrumGraph& primes(const Ring& A);

/// {f : f g = 0 for some g outside the prime}.
Ideal ker_pi(const Ring& A, std::size_t point);

struct Localization {
  Ring ring;
  RingMap map;
};
/// Finite: A / Ker pi. Semilocal at pA: the semilocal ring at {p}.
Localization localize(const Ring& A, std::size_t point);

/// Smallest g outside the prime with f g nilpotent.
std::optional<Element> minimal_prime_witness(const Ring& A, std::size_t point, const Element& f);
/// Every f in the prime has a witness (decides minimality).
bool all_f_have_witness(const Ring& A, std::size_t point);

/// Maximal elements among the proper ideals generated by idempotents.
std::vector<Ideal> max_regular_ideals(const Ring& A);

nlohmann::json spectrum_to_json(const Ring& A);
std::string spectrum_to_dot(const Ring& A);

}  // namespace ringlab
