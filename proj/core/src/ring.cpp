#include "ringlab/ring.hpp"

#include <algorithm>

#include "ring_node.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

namespace detail {

Ring with_descriptor(const Ring& r, RingDescriptor desc) {
  if (r.family() == Ring::Family::finite) return Ring::make_finite(r.finite_ptr(), std::move(desc), r.limits());
  if (r.family() == Ring::Family::semilocal)
    return Ring::make_semilocal(r.semilocal().primes(), std::move(desc), r.limits());
  auto node = std::make_shared<RingNode>();
  node->desc = std::move(desc);
  node->limits = r.limits();
  node->family = Ring::Family::product;
  node->factors = r.factors();
  Ring out;
  out.node_ = std::move(node);
  return out;
}

[[noreturn]] void size_error(const std::string& path, std::size_t size, std::size_t cap) {
  throw Error(ErrorKind::size_cap, "at " + (path.empty() ? std::string("/") : path) + ": ring size " +
                                       std::to_string(size) + " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

namespace {

using detail::RingNode;

std::size_t checked_size_mul(std::size_t a, std::size_t b, std::size_t cap, const std::string& path) {
  if (b != 0 && a > cap / b) detail::size_error(path, cap + 1, cap);
  return a * b;
}

Ring build(const RingDescriptor& d, const Limits& lim, const std::string& path) {
  validate_shallow(d, path);
  switch (d.kind) {
    case RingDescriptor::Kind::quotient_int: {
      const auto n = static_cast<std::size_t>(d.modulus);
      if (n > lim.ring_size) detail::size_error(path, n, lim.ring_size);
      return Ring::make_finite(FiniteRing::integers_mod(n), d, lim);
    }
    case RingDescriptor::Kind::poly_quotient: {
      std::size_t n = 1;
      for (std::size_t i = 1; i < d.modulus_poly.size(); ++i)
        n = checked_size_mul(n, static_cast<std::size_t>(d.p), lim.ring_size, path);
      if (n > lim.ring_size) detail::size_error(path, n, lim.ring_size);
      return Ring::make_finite(FiniteRing::poly_quotient(static_cast<std::uint64_t>(d.p), d.modulus_poly), d,
                               lim);
    }
    case RingDescriptor::Kind::product: {
      std::vector<Ring> factors;
      for (std::size_t i = 0; i < d.factors.size(); ++i)
        factors.push_back(build(d.factors[i], lim, path + "/factors/" + std::to_string(i)));
      const bool all_finite =
          std::all_of(factors.begin(), factors.end(), [](const Ring& r) { return r.is_finite(); });
      if (all_finite) {
        std::size_t n = 1;
        for (const auto& f : factors) n = checked_size_mul(n, f.finite().size(), lim.ring_size, path);
        if (n > lim.ring_size) detail::size_error(path, n, lim.ring_size);
      }
      return detail::with_descriptor(Ring::make_product(std::move(factors), lim), d);
    }
    case RingDescriptor::Kind::quotient: {
      Ring base = build(*d.base, lim, path + "/base");
      std::vector<Element> gens;
      for (std::size_t i = 0; i < d.ideal_gens.size(); ++i) {
        const std::string gpath = path + "/ideal_gens/" + std::to_string(i);
        try {
          gens.push_back(base.element_from_json(d.ideal_gens[i], gpath));
        } catch (const Error& e) {
          throw Error(ErrorKind::descriptor, e.what());
        }
      }
      const Ideal I = ideal_generate(base, gens);
      return detail::quotient_with_descriptor(base, I, d).ring;
    }
    case RingDescriptor::Kind::localization: {
      Ring base = build(*d.base, lim, path + "/base");
      if (d.prime >= base.spectrum().points.size())
        throw Error(ErrorKind::descriptor, "at " + path + "/prime: no prime with id " + std::to_string(d.prime));
      return detail::with_descriptor(localize(base, d.prime).ring, d);
    }
    case RingDescriptor::Kind::semilocal_int:
      return Ring::make_semilocal(d.primes, d, lim);
  }
  throw Error(ErrorKind::descriptor, "unknown descriptor kind");
}

}  // namespace

Ring ring_from_descriptor(const RingDescriptor& desc, const Limits& limits) { return build(desc, limits, ""); }

const RingNode& Ring::node() const {
  if (!node_) throw Error(ErrorKind::precondition, "use of an empty ring handle");
  return *node_;
}

Ring::Family Ring::family() const { return node().family; }

const FiniteRing& Ring::finite() const { return *finite_ptr(); }

const FiniteRing::Ptr& Ring::finite_ptr() const {
  if (family() != Family::finite) throw Error(ErrorKind::unsupported, "ring " + name() + " is not finite");
  return node().finite;
}

const SemilocalRing& Ring::semilocal() const {
  if (family() != Family::semilocal) throw Error(ErrorKind::unsupported, "ring " + name() + " is not semilocal");
  return *node().semilocal;
}

const std::vector<Ring>& Ring::factors() const {
  if (family() != Family::product)
    throw Error(ErrorKind::unsupported, "ring " + name() + " is not a product with an infinite factor");
  return node().factors;
}

const RingDescriptor& Ring::descriptor() const { return node().desc; }
const Limits& Ring::limits() const { return node().limits; }

std::optional<std::size_t> Ring::size() const {
  if (is_finite()) return finite().size();
  return std::nullopt;
}

bool Ring::is_zero_ring() const { return is_finite() && finite().size() == 1; }

Ring Ring::make_finite(FiniteRing::Ptr ring, RingDescriptor desc, Limits limits) {
  auto node = std::make_shared<RingNode>();
  node->desc = std::move(desc);
  node->limits = limits;
  node->family = Family::finite;
  node->finite = std::move(ring);
  Ring r;
  r.node_ = std::move(node);
  return r;
}

Ring Ring::make_semilocal(std::vector<std::int64_t> primes, RingDescriptor desc, Limits limits) {
  auto node = std::make_shared<RingNode>();
  node->desc = std::move(desc);
  node->limits = limits;
  node->family = Family::semilocal;
  node->semilocal = std::make_shared<SemilocalRing>(std::move(primes));
  Ring r;
  r.node_ = std::move(node);
  return r;
}

Ring Ring::make_product(std::vector<Ring> factors, Limits limits) {
  if (factors.empty()) throw Error(ErrorKind::descriptor, "product needs at least one factor");
  std::vector<RingDescriptor> descs;
  for (const auto& f : factors) descs.push_back(f.descriptor());
  auto desc = RingDescriptor::product(std::move(descs));
  const bool all_finite = std::all_of(factors.begin(), factors.end(), [](const Ring& r) { return r.is_finite(); });
  if (all_finite) {
    std::vector<FiniteRing::Ptr> parts;
    std::size_t n = 1;
    for (const auto& f : factors) {
      parts.push_back(f.finite_ptr());
      n = checked_size_mul(n, f.finite().size(), limits.ring_size, "");
    }
    if (n > limits.ring_size) detail::size_error("", n, limits.ring_size);
    return make_finite(FiniteRing::product(std::move(parts)), std::move(desc), limits);
  }
  auto node = std::make_shared<RingNode>();
  node->desc = std::move(desc);
  node->limits = limits;
  node->family = Family::product;
  node->factors = std::move(factors);
  Ring r;
  r.node_ = std::move(node);
  return r;
}

Element Ring::zero() const {
  switch (family()) {
    case Family::finite: return Index{0};
    case Family::semilocal: return Fraction{0, 1};
    case Family::product: {
      std::vector<Element> parts;
      for (const auto& f : factors()) parts.push_back(f.zero());
      return Element(std::move(parts));
    }
  }
  return {};
}

Element Ring::one() const {
  switch (family()) {
    case Family::finite: return finite().one();
    case Family::semilocal: return Fraction{1, 1};
    case Family::product: {
      std::vector<Element> parts;
      for (const auto& f : factors()) parts.push_back(f.one());
      return Element(std::move(parts));
    }
  }
  return {};
}

namespace {

template <class Op>
Element zip(const Ring& r, const Element& a, const Element& b, Op op) {
  const auto& fs = r.factors();
  const auto& x = a.parts();
  const auto& y = b.parts();
  if (x.size() != fs.size() || y.size() != fs.size())
    throw Error(ErrorKind::encoding, "product element has the wrong number of components");
  std::vector<Element> out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(op(fs[i], x[i], y[i]));
  return Element(std::move(out));
}

}  // namespace

Element Ring::add(const Element& a, const Element& b) const {
  switch (family()) {
    case Family::finite: return finite().add(a.index(), b.index());
    case Family::semilocal: return semilocal().add(a.fraction(), b.fraction());
    case Family::product:
      return zip(*this, a, b, [](const Ring& f, const Element& x, const Element& y) { return f.add(x, y); });
  }
  return {};
}

Element Ring::mul(const Element& a, const Element& b) const {
  switch (family()) {
    case Family::finite: return finite().mul(a.index(), b.index());
    case Family::semilocal: return semilocal().mul(a.fraction(), b.fraction());
    case Family::product:
      return zip(*this, a, b, [](const Ring& f, const Element& x, const Element& y) { return f.mul(x, y); });
  }
  return {};
}

Element Ring::neg(const Element& a) const {
  switch (family()) {
    case Family::finite: return finite().neg(a.index());
    case Family::semilocal: return semilocal().neg(a.fraction());
    case Family::product:
      return zip(*this, a, a, [](const Ring& f, const Element& x, const Element&) { return f.neg(x); });
  }
  return {};
}

Element Ring::pow(const Element& a, std::uint64_t k) const {
  Element result = one();
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

Element Ring::from_int(std::int64_t v) const {
  switch (family()) {
    case Family::semilocal: return semilocal().make(v);
    case Family::product: {
      std::vector<Element> parts;
      for (const auto& f : factors()) parts.push_back(f.from_int(v));
      return Element(std::move(parts));
    }
    case Family::finite: {
      const auto& R = finite();
      const bool negative = v < 0;
      const std::uint64_t k0 = negative ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
      std::uint64_t k = k0;
      Index acc = 0, step = R.one();
      while (k) {
        if (k & 1) acc = R.add(acc, step);
        step = R.add(step, step);
        k >>= 1;
      }
      return negative ? R.neg(acc) : acc;
    }
  }
  return {};
}

bool Ring::is_unit(const Element& a) const {
  switch (family()) {
    case Family::finite: return finite().is_unit(a.index());
    case Family::semilocal: return semilocal().is_unit(a.fraction());
    case Family::product: {
      const auto& x = a.parts();
      for (std::size_t i = 0; i < factors().size(); ++i)
        if (!factors()[i].is_unit(x[i])) return false;
      return true;
    }
  }
  return false;
}

std::optional<Element> Ring::inverse(const Element& a) const {
  if (!is_unit(a)) return std::nullopt;
  switch (family()) {
    case Family::finite: return Element(finite().inverse(a.index()));
    case Family::semilocal: return Element(semilocal().inverse(a.fraction()));
    case Family::product: {
      std::vector<Element> parts;
      for (std::size_t i = 0; i < factors().size(); ++i) parts.push_back(*factors()[i].inverse(a.parts()[i]));
      return Element(std::move(parts));
    }
  }
  return std::nullopt;
}

unsigned Ring::nilpotency_index(const Element& a) const {
  switch (family()) {
    case Family::finite: return finite().nilpotency_index(a.index());
    case Family::semilocal: return a.fraction().num == 0 ? 1U : 0U;
    case Family::product: {
      unsigned best = 1;
      for (std::size_t i = 0; i < factors().size(); ++i) {
        const unsigned k = factors()[i].nilpotency_index(a.parts()[i]);
        if (k == 0) return 0;
        best = std::max(best, k);
      }
      return best;
    }
  }
  return 0;
}

void Ring::check(const Element& a) const {
  switch (family()) {
    case Family::finite:
      if (!a.is_index() || a.index() >= finite().size())
        throw Error(ErrorKind::encoding, "element " + to_string(a) + " is not an index of " + name());
      return;
    case Family::semilocal:
      if (!a.is_fraction() || !semilocal().is_canonical(a.fraction()))
        throw Error(ErrorKind::encoding, "element " + to_string(a) + " is not a reduced fraction of " + name());
      return;
    case Family::product: {
      if (!a.is_tuple() || a.parts().size() != factors().size())
        throw Error(ErrorKind::encoding, "element " + to_string(a) + " does not match the factors of " + name());
      for (std::size_t i = 0; i < factors().size(); ++i) factors()[i].check(a.parts()[i]);
      return;
    }
  }
}

Element Ring::element_from_json(const nlohmann::json& j, const std::string& path) const {
  const std::string where = "at " + (path.empty() ? std::string("/") : path) + ": ";
  switch (family()) {
    case Family::finite: {
      if (!j.is_number_integer()) throw Error(ErrorKind::encoding, where + "expected an integer element");
      const auto v = j.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= finite().size())
        throw Error(ErrorKind::encoding, where + "element " + std::to_string(v) + " out of range for " + name());
      return static_cast<Index>(v);
    }
    case Family::semilocal: {
      try {
        if (j.is_number_integer()) return semilocal().make(j.get<std::int64_t>());
        if (j.is_object() && j.contains("num") && j.contains("den") && j["num"].is_number_integer() &&
            j["den"].is_number_integer())
          return semilocal().make(j["num"].get<std::int64_t>(), j["den"].get<std::int64_t>());
      } catch (const Error& e) {
        throw Error(ErrorKind::encoding, where + e.what());
      }
      throw Error(ErrorKind::encoding, where + "expected an integer or {\"num\",\"den\"}");
    }
    case Family::product: {
      if (!j.is_array() || j.size() != factors().size())
        throw Error(ErrorKind::encoding,
                    where + "expected an array of " + std::to_string(factors().size()) + " components");
      std::vector<Element> parts;
      for (std::size_t i = 0; i < factors().size(); ++i)
        parts.push_back(factors()[i].element_from_json(j[i], path + "/" + std::to_string(i)));
      return Element(std::move(parts));
    }
  }
  return {};
}

nlohmann::json Ring::element_to_json(const Element& a) const {
  switch (family()) {
    case Family::finite: return a.index();
    case Family::semilocal: return nlohmann::json{{"num", a.fraction().num}, {"den", a.fraction().den}};
    case Family::product: {
      nlohmann::json out = nlohmann::json::array();
      for (std::size_t i = 0; i < factors().size(); ++i) out.push_back(factors()[i].element_to_json(a.parts()[i]));
      return out;
    }
  }
  return nullptr;
}

std::vector<Element> Ring::idempotents() const {
  switch (family()) {
    case Family::finite: {
      std::vector<Element> out;
      for (Index e : finite().idempotents()) out.emplace_back(e);
      return out;
    }
    case Family::semilocal: return {Element(Fraction{0, 1}), Element(Fraction{1, 1})};
    case Family::product: {
      std::vector<std::vector<Element>> acc{{}};
      for (const auto& f : factors()) {
        std::vector<std::vector<Element>> next;
        for (const auto& prefix : acc)
          for (const auto& e : f.idempotents()) {
            next.push_back(prefix);
            next.back().push_back(e);
          }
        acc = std::move(next);
      }
      std::vector<Element> out;
      for (auto& parts : acc) out.emplace_back(std::move(parts));
      return out;
    }
  }
  return {};
}

Element Ring::embed(std::size_t i, const Element& x) const {
  std::vector<Element> parts;
  for (std::size_t k = 0; k < factors().size(); ++k) parts.push_back(k == i ? x : factors()[k].zero());
  return Element(std::move(parts));
}

Element RingMap::operator()(const Element& a) const {
  if (!table.empty() && a.is_index()) return table[a.index()];
  return fn(a);
}

RingMap RingMap::identity(const Ring& r) {
  RingMap m;
  m.source = r;
  m.target = r;
  if (r.is_finite()) {
    m.table.resize(r.finite().size());
    for (Index i = 0; i < m.table.size(); ++i) m.table[i] = i;
  }
  m.fn = [](const Element& a) { return a; };
  return m;
}

Element arith(const Ring& A, ArithOp op, const Element& a, const std::optional<Element>& b) {
  A.check(a);
  if (op != ArithOp::neg) {
    if (!b) throw Error(ErrorKind::arity, "binary operation needs two operands");
    A.check(*b);
  }
  switch (op) {
    case ArithOp::add: return A.add(a, *b);
    case ArithOp::mul: return A.mul(a, *b);
    case ArithOp::neg: return A.neg(a);
  }
  return {};
}

UnitResult is_unit(const Ring& A, const Element& a) {
  A.check(a);
  UnitResult r;
  r.inverse = A.inverse(a);
  r.unit = r.inverse.has_value();
  return r;
}

ElementPredicates element_predicates(const Ring& A, const Element& a) {
  A.check(a);
  ElementPredicates p;
  p.idempotent = A.is_idempotent(a);
  const unsigned k = A.nilpotency_index(a);
  p.nilpotent = k != 0;
  if (k) p.nilpotency_index = k;
  return p;
}

std::vector<Element> idempotents(const Ring& A) { return A.idempotents(); }

}  // namespace ringlab
