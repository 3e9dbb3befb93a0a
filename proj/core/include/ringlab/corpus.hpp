#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/descriptor.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Which rings a verification run covers.
struct CorpusSpec {
  std::int64_t quotient_int_min = 2;
  std::int64_t quotient_int_max = 60;
  std::vector<std::int64_t> poly_primes = {2, 3};
  unsigned poly_max_degree = 3;
  unsigned product_max_arity = 3;
  std::size_t product_max_size = 200;
  std::vector<std::vector<std::int64_t>> semilocal = {{2}, {3}, {2, 3}, {2, 5}, {2, 3, 5}};
  std::vector<RingDescriptor> extra;  // listed rings, e.g. products with a semilocal factor
  unsigned poset_points = 5;
  std::uint64_t seed = 0x5eed;
  /// Test fixture: flip one criterion verdict to exercise the failure path.
  std::string tamper_theorem;
  std::string tamper_criterion;

  /// Throws ErrorKind::input when a cap is not positive.
  void validate() const;
};

CorpusSpec builtin_corpus();
CorpusSpec corpus_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CorpusSpec& c);

/// Z/n, F_p[x]/(f) for monic f of degree 1..d, in that order.
std::vector<RingDescriptor> base_finite_descriptors(const CorpusSpec& c);
/// Base rings plus products of 2..arity base rings (non-decreasing indices) within the size cap.
std::vector<RingDescriptor> finite_descriptors(const CorpusSpec& c);
/// Semilocal rings followed by the extra descriptors.
std::vector<RingDescriptor> infinite_descriptors(const CorpusSpec& c);

/// Random system over a finite ring: 1..max_vars variables, 1..max_eqs
/// equations, total degree at most max_degree. Portable across standard libraries.
PolySystem random_system(const Ring& A, std::mt19937_64& rng, unsigned max_vars = 2, unsigned max_degree = 3,
                         unsigned max_eqs = 2);

}  // namespace ringlab
