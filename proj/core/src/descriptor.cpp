#include "ringlab/descriptor.hpp"

#include <algorithm>
#include <set>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::descriptor, "at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

RingDescriptor parse(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + "/kind", "expected a string");
  const auto k = kind.get<std::string>();
  RingDescriptor d;
  if (k == "quotient_int") {
    d.kind = RingDescriptor::Kind::quotient_int;
    d.modulus = as_int(field(j, "modulus", path), path + "/modulus");
  } else if (k == "poly_quotient") {
    d.kind = RingDescriptor::Kind::poly_quotient;
    d.p = as_int(field(j, "p", path), path + "/p");
    d.modulus_poly = as_int_list(field(j, "modulus_poly", path), path + "/modulus_poly");
  } else if (k == "product") {
    d.kind = RingDescriptor::Kind::product;
    const json& fs = field(j, "factors", path);
    if (!fs.is_array()) fail(path + "/factors", "expected an array");
    for (std::size_t i = 0; i < fs.size(); ++i)
      d.factors.push_back(parse(fs[i], path + "/factors/" + std::to_string(i)));
  } else if (k == "quotient") {
    d.kind = RingDescriptor::Kind::quotient;
    d.base = std::make_shared<RingDescriptor>(parse(field(j, "base", path), path + "/base"));
    const json& gens = field(j, "ideal_gens", path);
    if (!gens.is_array()) fail(path + "/ideal_gens", "expected an array");
    d.ideal_gens.assign(gens.begin(), gens.end());
  } else if (k == "localization") {
    d.kind = RingDescriptor::Kind::localization;
    d.base = std::make_shared<RingDescriptor>(parse(field(j, "base", path), path + "/base"));
    const auto id = as_int(field(j, "prime", path), path + "/prime");
    if (id < 0) fail(path + "/prime", "prime reference must be a nonnegative spectrum id");
    d.prime = static_cast<std::size_t>(id);
  } else if (k == "semilocal_int") {
    d.kind = RingDescriptor::Kind::semilocal_int;
    d.primes = as_int_list(field(j, "primes", path), path + "/primes");
  } else {
    fail(path + "/kind", "unknown kind \"" + k + "\"");
  }
  validate_shallow(d, path);
  return d;
}

std::string poly_name(const std::vector<std::int64_t>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    const bool show_coeff = c[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool compound(const RingDescriptor& d) {
  return d.kind == RingDescriptor::Kind::product || d.kind == RingDescriptor::Kind::quotient ||
         d.kind == RingDescriptor::Kind::localization;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

void validate_shallow(const RingDescriptor& d, const std::string& path) {
  switch (d.kind) {
    case RingDescriptor::Kind::quotient_int:
      if (d.modulus < 2) fail(path + "/modulus", "modulus must be >= 2");
      break;
    case RingDescriptor::Kind::poly_quotient: {
      if (!is_prime(d.p)) fail(path + "/p", "p must be prime");
      if (d.modulus_poly.size() < 2) fail(path + "/modulus_poly", "modulus polynomial must have degree >= 1");
      for (std::size_t i = 0; i < d.modulus_poly.size(); ++i)
        if (d.modulus_poly[i] < 0 || d.modulus_poly[i] >= d.p)
          fail(path + "/modulus_poly/" + std::to_string(i), "coefficient outside [0,p)");
      if (d.modulus_poly.back() != 1) fail(path + "/modulus_poly", "modulus polynomial must be monic");
      break;
    }
    case RingDescriptor::Kind::product:
      if (d.factors.empty()) fail(path + "/factors", "product needs at least one factor");
      break;
    case RingDescriptor::Kind::quotient:
    case RingDescriptor::Kind::localization:
      if (!d.base) fail(path + "/base", "missing base descriptor");
      break;
    case RingDescriptor::Kind::semilocal_int: {
      if (d.primes.empty()) fail(path + "/primes", "prime set must be nonempty");
      std::set<std::int64_t> seen;
      for (std::size_t i = 0; i < d.primes.size(); ++i) {
        if (!is_prime(d.primes[i])) fail(path + "/primes/" + std::to_string(i), "not a prime");
        if (!seen.insert(d.primes[i]).second)
          fail(path + "/primes/" + std::to_string(i), "duplicate prime");
      }
      break;
    }
  }
}

RingDescriptor RingDescriptor::quotient_int(std::int64_t n) {
  RingDescriptor d;
  d.kind = Kind::quotient_int;
  d.modulus = n;
  return d;
}

RingDescriptor RingDescriptor::poly_quotient(std::int64_t p, std::vector<std::int64_t> coeffs) {
  RingDescriptor d;
  d.kind = Kind::poly_quotient;
  d.p = p;
  d.modulus_poly = std::move(coeffs);
  return d;
}

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
  RingDescriptor d;
  d.kind = Kind::product;
  d.factors = std::move(factors);
  return d;
}

RingDescriptor RingDescriptor::quotient(RingDescriptor base, std::vector<nlohmann::json> gens) {
  RingDescriptor d;
  d.kind = Kind::quotient;
  d.base = std::make_shared<RingDescriptor>(std::move(base));
  d.ideal_gens = std::move(gens);
  return d;
}

RingDescriptor RingDescriptor::localization(RingDescriptor base, std::size_t prime_id) {
  RingDescriptor d;
  d.kind = Kind::localization;
  d.base = std::make_shared<RingDescriptor>(std::move(base));
  d.prime = prime_id;
  return d;
}

RingDescriptor RingDescriptor::semilocal_int(std::vector<std::int64_t> primes) {
  RingDescriptor d;
  d.kind = Kind::semilocal_int;
  d.primes = std::move(primes);
  return d;
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingDescriptor::Kind::quotient_int: return a.modulus == b.modulus;
    case RingDescriptor::Kind::poly_quotient: return a.p == b.p && a.modulus_poly == b.modulus_poly;
    case RingDescriptor::Kind::product: return a.factors == b.factors;
    case RingDescriptor::Kind::quotient: return *a.base == *b.base && a.ideal_gens == b.ideal_gens;
    case RingDescriptor::Kind::localization: return *a.base == *b.base && a.prime == b.prime;
    case RingDescriptor::Kind::semilocal_int: return a.primes == b.primes;
  }
  return false;
}

RingDescriptor descriptor_from_json(const nlohmann::json& j) { return parse(j, ""); }

nlohmann::json to_json(const RingDescriptor& d) {
  json j;
  switch (d.kind) {
    case RingDescriptor::Kind::quotient_int:
      j["kind"] = "quotient_int";
      j["modulus"] = d.modulus;
      break;
    case RingDescriptor::Kind::poly_quotient:
      j["kind"] = "poly_quotient";
      j["p"] = d.p;
      j["modulus_poly"] = d.modulus_poly;
      break;
    case RingDescriptor::Kind::product: {
      j["kind"] = "product";
      json fs = json::array();
      for (const auto& f : d.factors) fs.push_back(to_json(f));
      j["factors"] = fs;
      break;
    }
    case RingDescriptor::Kind::quotient:
      j["kind"] = "quotient";
      j["base"] = to_json(*d.base);
      j["ideal_gens"] = d.ideal_gens;
      break;
    case RingDescriptor::Kind::localization:
      j["kind"] = "localization";
      j["base"] = to_json(*d.base);
      j["prime"] = d.prime;
      break;
    case RingDescriptor::Kind::semilocal_int:
      j["kind"] = "semilocal_int";
      j["primes"] = d.primes;
      break;
  }
  return j;
}

std::string describe(const RingDescriptor& d) {
  auto wrap = [](const RingDescriptor& x) {
    return compound(x) ? "(" + describe(x) + ")" : describe(x);
  };
  switch (d.kind) {
    case RingDescriptor::Kind::quotient_int: return "Z/" + std::to_string(d.modulus);
    case RingDescriptor::Kind::poly_quotient:
      return "F" + std::to_string(d.p) + "[x]/(" + poly_name(d.modulus_poly) + ")";
    case RingDescriptor::Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (i) out += " x ";
        out += wrap(d.factors[i]);
      }
      return out;
    }
    case RingDescriptor::Kind::quotient: {
      std::string gens;
      for (std::size_t i = 0; i < d.ideal_gens.size(); ++i) {
        if (i) gens += ",";
        gens += d.ideal_gens[i].dump();
      }
      return wrap(*d.base) + "/(" + gens + ")";
    }
    case RingDescriptor::Kind::localization:
      return wrap(*d.base) + "_p" + std::to_string(d.prime);
    case RingDescriptor::Kind::semilocal_int: {
      std::string out = "Z_(";
      for (std::size_t i = 0; i < d.primes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d.primes[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace ringlab
