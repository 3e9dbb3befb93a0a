#include "ringlab/corpus.hpp"

#include <optional>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

std::size_t ipow(std::int64_t b, unsigned e) {
  std::size_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
  return r;
}

std::size_t descriptor_size(const RingDescriptor& d) {
  switch (d.kind) {
    case RingDescriptor::Kind::quotient_int: return static_cast<std::size_t>(d.modulus);
    case RingDescriptor::Kind::poly_quotient: return ipow(d.p, static_cast<unsigned>(d.modulus_poly.size() - 1));
    default: throw Error(ErrorKind::precondition, "corpus size of a non-base descriptor");
  }
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

void CorpusSpec::validate() const {
  if (quotient_int_min < 1 || quotient_int_max < 0 || product_max_size == 0)
    throw Error(ErrorKind::input, "corpus caps must be positive");
  for (auto p : poly_primes)
    if (!is_prime(p)) throw Error(ErrorKind::input, "poly_quotient prime " + std::to_string(p) + " is not prime");
}

CorpusSpec builtin_corpus() {
  CorpusSpec c;
  c.extra = {
      RingDescriptor::product({RingDescriptor::semilocal_int({2, 3}), RingDescriptor::quotient_int(2)}),
      RingDescriptor::product({RingDescriptor::semilocal_int({2}), RingDescriptor::semilocal_int({3})}),
      RingDescriptor::product({RingDescriptor::semilocal_int({3}), RingDescriptor::quotient_int(4)}),
  };
  return c;
}

CorpusSpec corpus_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::input, "corpus spec: expected an object at /");
  CorpusSpec c = builtin_corpus();
  try {
    if (j.contains("quotient_int")) {
      c.quotient_int_min = j.at("quotient_int").value("min", c.quotient_int_min);
      c.quotient_int_max = j.at("quotient_int").value("max", c.quotient_int_max);
    }
    if (j.contains("poly_quotient")) {
      c.poly_primes = j.at("poly_quotient").value("primes", c.poly_primes);
      c.poly_max_degree = j.at("poly_quotient").value("max_degree", c.poly_max_degree);
    }
    if (j.contains("products")) {
      c.product_max_arity = j.at("products").value("max_arity", c.product_max_arity);
      c.product_max_size = j.at("products").value("max_size", c.product_max_size);
    }
    if (j.contains("semilocal")) c.semilocal = j.at("semilocal").get<std::vector<std::vector<std::int64_t>>>();
    if (j.contains("extra")) {
      c.extra.clear();
      for (std::size_t i = 0; i < j.at("extra").size(); ++i) c.extra.push_back(descriptor_from_json(j.at("extra").at(i)));
    }
    c.poset_points = j.value("poset_points", c.poset_points);
    c.seed = j.value("seed", c.seed);
    if (j.contains("tamper")) {
      c.tamper_theorem = j.at("tamper").at("theorem").get<std::string>();
      c.tamper_criterion = j.at("tamper").at("criterion").get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::input, std::string("corpus spec: ") + e.what());
  }
  c.validate();
  return c;
}

nlohmann::json to_json(const CorpusSpec& c) {
  nlohmann::json extra = nlohmann::json::array();
  for (const auto& d : c.extra) extra.push_back(to_json(d));
  nlohmann::json j = {
      {"quotient_int", {{"min", c.quotient_int_min}, {"max", c.quotient_int_max}}},
      {"poly_quotient", {{"primes", c.poly_primes}, {"max_degree", c.poly_max_degree}}},
      {"products", {{"max_arity", c.product_max_arity}, {"max_size", c.product_max_size}}},
      {"semilocal", c.semilocal},
      {"extra", extra},
      {"poset_points", c.poset_points},
      {"seed", c.seed},
  };
  if (!c.tamper_theorem.empty()) j["tamper"] = {{"theorem", c.tamper_theorem}, {"criterion", c.tamper_criterion}};
  return j;
}

std::vector<RingDescriptor> base_finite_descriptors(const CorpusSpec& c) {
  std::vector<RingDescriptor> out;
  for (auto n = std::max<std::int64_t>(c.quotient_int_min, 2); n <= c.quotient_int_max; ++n)
    out.push_back(RingDescriptor::quotient_int(n));
  for (auto p : c.poly_primes)
    for (unsigned d = 1; d <= c.poly_max_degree; ++d) {
      // lower coefficients run through all p^d patterns, first coefficient fastest
      const std::size_t count = ipow(p, d);
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::int64_t> coeffs(d + 1, 0);
        std::size_t rest = code;
        for (unsigned i = 0; i < d; ++i) {
          coeffs[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(p));
          rest /= static_cast<std::size_t>(p);
        }
        coeffs[d] = 1;
        out.push_back(RingDescriptor::poly_quotient(p, coeffs));
      }
    }
  return out;
}

std::vector<RingDescriptor> finite_descriptors(const CorpusSpec& c) {
  const auto base = base_finite_descriptors(c);
  std::vector<std::size_t> sizes;
  for (const auto& d : base) sizes.push_back(descriptor_size(d));
  std::vector<RingDescriptor> out;
  for (const auto& d : base)
    if (descriptor_size(d) <= c.product_max_size) out.push_back(d);
  // non-decreasing index tuples of length 2..arity whose size product fits the cap
  std::vector<std::size_t> pickv;
  auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
    if (pickv.size() >= 2) {
      std::vector<RingDescriptor> fs;
      for (auto i : pickv) fs.push_back(base[i]);
      out.push_back(RingDescriptor::product(std::move(fs)));
    }
    if (pickv.size() == c.product_max_arity) return;
    for (std::size_t i = from; i < base.size(); ++i) {
      if (size * sizes[i] > c.product_max_size) continue;
      pickv.push_back(i);
      self(self, i, size * sizes[i]);
      pickv.pop_back();
    }
  };
  if (c.product_max_arity >= 2) rec(rec, 0, 1);
  return out;
}

std::vector<RingDescriptor> infinite_descriptors(const CorpusSpec& c) {
  std::vector<RingDescriptor> out;
  for (const auto& ps : c.semilocal) out.push_back(RingDescriptor::semilocal_int(ps));
  for (const auto& d : c.extra) out.push_back(d);
  return out;
}

PolySystem random_system(const Ring& A, std::mt19937_64& rng, unsigned max_vars, unsigned max_degree,
                         unsigned max_eqs) {
  if (!A.is_finite()) throw Error(ErrorKind::unsupported, "random systems need a finite ring");
  const std::size_t n = A.finite().size();
  const auto vars = static_cast<std::size_t>(1 + pick(rng, max_vars));
  const auto eqs = 1 + pick(rng, max_eqs);
  std::vector<Polynomial> polys;
  for (std::uint64_t k = 0; k < eqs; ++k) {
    std::vector<Term> terms;
    const auto count = 1 + pick(rng, 4);
    for (std::uint64_t t = 0; t < count; ++t) {
      Term term;
      term.coeff = Element(static_cast<Index>(pick(rng, n)));
      term.exp.assign(vars, 0);
      unsigned budget = static_cast<unsigned>(pick(rng, max_degree + 1));
      for (std::size_t v = 0; v < vars && budget > 0; ++v) {
        const auto e = static_cast<unsigned>(v + 1 == vars ? budget : pick(rng, budget + 1));
        term.exp[v] = e;
        budget -= e;
      }
      terms.push_back(std::move(term));
    }
    polys.emplace_back(A, vars, std::move(terms));
  }
  return make_system(A, vars, std::move(polys));
}

}  // namespace ringlab
