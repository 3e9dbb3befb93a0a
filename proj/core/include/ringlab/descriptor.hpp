#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ringlab {

/**
 * @brief Tree description of a ring, independent of any computed tables.
 *
 * Only the fields belonging to @ref kind are meaningful.
 */
struct RingDescriptor {
  enum class Kind { quotient_int, poly_quotient, product, quotient, localization, semilocal_int };

  Kind kind = Kind::quotient_int;
  std::int64_t modulus = 0;
  std::int64_t p = 0;
  std::vector<std::int64_t> modulus_poly;  // little-endian, monic
  std::vector<RingDescriptor> factors;
  std::shared_ptr<const RingDescriptor> base;
  std::vector<nlohmann::json> ideal_gens;  // elements of the base, in its encoding
  std::size_t prime = 0;                   // localization: spectrum point id of the base
  std::vector<std::int64_t> primes;

  static RingDescriptor quotient_int(std::int64_t n);
  static RingDescriptor poly_quotient(std::int64_t p, std::vector<std::int64_t> coeffs);
  static RingDescriptor product(std::vector<RingDescriptor> factors);
  static RingDescriptor quotient(RingDescriptor base, std::vector<nlohmann::json> gens);
  static RingDescriptor localization(RingDescriptor base, std::size_t prime_id);
  static RingDescriptor semilocal_int(std::vector<std::int64_t> primes);

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
};

/// Parses a descriptor; errors name the JSON pointer of the offending field.
RingDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RingDescriptor& d);

/// Short human-readable name such as "Z/12" or "F2[x]/(x^2+x+1) x Z/3".
std::string describe(const RingDescriptor& d);

/// Structural checks that need no computed ring; throws ErrorKind::descriptor.
void validate_shallow(const RingDescriptor& d, const std::string& path);

bool is_prime(std::int64_t n);

}  // namespace ringlab
