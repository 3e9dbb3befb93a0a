#include "ringlab/ideal.hpp"

#include <algorithm>

#include "ring_node.hpp"
#include "ringlab/error.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

namespace {

Ideal::Finite finite_from_mask(Bitset mask) {
  Ideal::Finite f;
  for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i))
    f.elements.push_back(static_cast<Index>(i));
  f.mask = std::move(mask);
  return f;
}

Bitset subgroup_sum(const FiniteRing& R, const Ideal::Finite& I, const Ideal::Finite& J) {
  if (J.mask.is_subset_of(I.mask)) return I.mask;
  if (I.mask.is_subset_of(J.mask)) return J.mask;
  Bitset out(R.size());
  for (Index x : I.elements)
    for (Index y : J.elements) out.set(R.add(x, y));
  return out;
}

Bitset principal_mask(const FiniteRing& R, Index g) {
  Bitset m(R.size());
  for (Index a = 0; a < R.size(); ++a) m.set(R.mul(a, g));
  return m;
}

// additive closure of a set of elements
Bitset additive_span(const FiniteRing& R, const std::vector<Index>& seeds) {
  Bitset m(R.size());
  m.set(0);
  std::vector<Index> members{0};
  for (Index s : seeds) {
    if (m.test(s)) continue;
    // adjoin s: members + k*s for all k until the multiples cycle back into the set
    std::vector<Index> added;
    Index multiple = s;
    while (!m.test(multiple)) {
      for (Index x : members) {
        const Index y = R.add(x, multiple);
        if (!m.test(y)) {
          m.set(y);
          added.push_back(y);
        }
      }
      multiple = R.add(multiple, s);
    }
    members.insert(members.end(), added.begin(), added.end());
  }
  return m;
}

int min_exp_or(const std::vector<int>& a, const std::vector<int>& b, std::size_t i, bool take_max) {
  return take_max ? std::max(a[i], b[i]) : std::min(a[i], b[i]);
}

Ideal::Semilocal semilocal_principal(const SemilocalRing& S, const std::vector<Element>& gens) {
  Ideal::Semilocal out;
  out.primes = S.primes();
  out.exps.assign(S.primes().size(), 0);
  for (const auto& g : gens) {
    const Fraction& f = g.fraction();
    if (f.num == 0) continue;
    std::vector<int> v;
    for (auto p : S.primes()) v.push_back(S.valuation(f, p));
    if (out.zero) {
      out.exps = v;
      out.zero = false;
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) out.exps[i] = std::min(out.exps[i], v[i]);
    }
  }
  if (out.zero) out.exps.assign(S.primes().size(), 0);
  return out;
}

std::int64_t semilocal_generator(const Ideal::Semilocal& s) {
  std::int64_t m = 1;
  for (std::size_t i = 0; i < s.primes.size(); ++i)
    for (int k = 0; k < s.exps[i]; ++k)
      if (__builtin_mul_overflow(m, s.primes[i], &m)) throw Error(ErrorKind::overflow, "ideal generator overflow");
  return m;
}

}  // namespace

bool Ideal::contains(const Element& a) const {
  if (const auto* f = std::get_if<Finite>(&rep)) return a.index() < f->mask.size() && f->mask.test(a.index());
  if (const auto* s = std::get_if<Semilocal>(&rep)) {
    const Fraction& x = a.fraction();
    if (x.num == 0) return true;
    if (s->zero) return false;
    for (std::size_t i = 0; i < s->primes.size(); ++i) {
      std::int64_t n = x.num;
      int v = 0;
      while (n % s->primes[i] == 0) {
        n /= s->primes[i];
        ++v;
      }
      if (v < s->exps[i]) return false;
    }
    return true;
  }
  const auto& parts = std::get<Product>(rep).parts;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].contains(a.parts()[i])) return false;
  return true;
}

bool Ideal::is_zero() const {
  if (const auto* f = std::get_if<Finite>(&rep)) return f->elements.size() == 1;
  if (const auto* s = std::get_if<Semilocal>(&rep)) return s->zero;
  const auto& parts = std::get<Product>(rep).parts;
  return std::all_of(parts.begin(), parts.end(), [](const Ideal& I) { return I.is_zero(); });
}

bool Ideal::is_whole() const {
  if (const auto* f = std::get_if<Finite>(&rep)) return f->elements.size() == f->mask.size();
  if (const auto* s = std::get_if<Semilocal>(&rep))
    return !s->zero && std::all_of(s->exps.begin(), s->exps.end(), [](int e) { return e == 0; });
  const auto& parts = std::get<Product>(rep).parts;
  return std::all_of(parts.begin(), parts.end(), [](const Ideal& I) { return I.is_whole(); });
}

std::size_t Ideal::size() const {
  if (const auto* f = std::get_if<Finite>(&rep)) return f->elements.size();
  throw Error(ErrorKind::unsupported, "cardinality of an infinite ideal");
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (a.rep.index() != b.rep.index()) return false;
  if (const auto* f = std::get_if<Ideal::Finite>(&a.rep)) return f->mask == std::get<Ideal::Finite>(b.rep).mask;
  if (const auto* s = std::get_if<Ideal::Semilocal>(&a.rep)) {
    const auto& t = std::get<Ideal::Semilocal>(b.rep);
    if (s->zero || t.zero) return s->zero == t.zero;
    return s->exps == t.exps;
  }
  return std::get<Ideal::Product>(a.rep).parts == std::get<Ideal::Product>(b.rep).parts;
}

bool ideal_subset(const Ideal& I, const Ideal& J) {
  if (const auto* f = std::get_if<Ideal::Finite>(&I.rep)) return f->mask.is_subset_of(std::get<Ideal::Finite>(J.rep).mask);
  if (const auto* s = std::get_if<Ideal::Semilocal>(&I.rep)) {
    const auto& t = std::get<Ideal::Semilocal>(J.rep);
    if (s->zero) return true;
    if (t.zero) return false;
    for (std::size_t i = 0; i < s->exps.size(); ++i)
      if (s->exps[i] < t.exps[i]) return false;
    return true;
  }
  const auto& x = std::get<Ideal::Product>(I.rep).parts;
  const auto& y = std::get<Ideal::Product>(J.rep).parts;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!ideal_subset(x[i], y[i])) return false;
  return true;
}

Ideal finite_ideal_from_mask(const Ring& A, Bitset mask) {
  if (mask.size() != A.finite().size()) throw Error(ErrorKind::precondition, "mask size differs from ring size");
  Ideal I;
  I.rep = finite_from_mask(std::move(mask));
  I.gens = ideal_generators(A, I);
  return I;
}

Ideal zero_ideal(const Ring& A) { return ideal_generate(A, {}); }

Ideal whole_ideal(const Ring& A) { return ideal_generate(A, {A.one()}); }

Ideal ideal_generate(const Ring& A, const std::vector<Element>& gens) {
  for (const auto& g : gens) A.check(g);
  Ideal I;
  I.gens = gens;
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      Ideal::Finite acc;
      acc.mask = Bitset(R.size());
      acc.mask.set(0);
      acc.elements = {0};
      for (const auto& g : gens) {
        if (acc.mask.test(g.index())) continue;
        const auto p = finite_from_mask(principal_mask(R, g.index()));
        acc = finite_from_mask(subgroup_sum(R, acc, p));
      }
      I.rep = std::move(acc);
      break;
    }
    case Ring::Family::semilocal:
      I.rep = semilocal_principal(A.semilocal(), gens);
      break;
    case Ring::Family::product: {
      Ideal::Product prod;
      for (std::size_t i = 0; i < A.factors().size(); ++i) {
        std::vector<Element> part;
        for (const auto& g : gens) part.push_back(g.parts()[i]);
        prod.parts.push_back(ideal_generate(A.factors()[i], part));
      }
      I.rep = std::move(prod);
      break;
    }
  }
  return I;
}

Ideal ideal_ops(const Ring& A, const Ideal& I, const Ideal& J, IdealOp op) {
  if (I.rep.index() != J.rep.index()) throw Error(ErrorKind::precondition, "ideals of different rings");
  Ideal out;
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& x = I.finite();
      const auto& y = J.finite();
      if (x.mask.size() != R.size() || y.mask.size() != R.size())
        throw Error(ErrorKind::precondition, "ideal does not belong to " + A.name());
      Bitset m(R.size());
      switch (op) {
        case IdealOp::sum: m = subgroup_sum(R, x, y); break;
        case IdealOp::intersect: m = x.mask & y.mask; break;
        case IdealOp::product: {
          std::vector<Index> prods;
          Bitset seen(R.size());
          for (Index a : x.elements)
            for (Index b : y.elements) {
              const Index c = R.mul(a, b);
              if (!seen.test(c)) {
                seen.set(c);
                prods.push_back(c);
              }
            }
          m = additive_span(R, prods);
          break;
        }
      }
      out.rep = finite_from_mask(std::move(m));
      out.gens = ideal_generators(A, out);
      return out;
    }
    case Ring::Family::semilocal: {
      const auto& x = I.semilocal();
      const auto& y = J.semilocal();
      Ideal::Semilocal s;
      s.primes = x.primes;
      s.exps.assign(x.primes.size(), 0);
      switch (op) {
        case IdealOp::sum:
          if (x.zero || y.zero) {
            s = x.zero ? y : x;
          } else {
            s.zero = false;
            for (std::size_t i = 0; i < s.exps.size(); ++i) s.exps[i] = min_exp_or(x.exps, y.exps, i, false);
          }
          break;
        case IdealOp::intersect:
          if (!x.zero && !y.zero) {
            s.zero = false;
            for (std::size_t i = 0; i < s.exps.size(); ++i) s.exps[i] = min_exp_or(x.exps, y.exps, i, true);
          }
          break;
        case IdealOp::product:
          if (!x.zero && !y.zero) {
            s.zero = false;
            for (std::size_t i = 0; i < s.exps.size(); ++i) s.exps[i] = x.exps[i] + y.exps[i];
          }
          break;
      }
      out.rep = s;
      out.gens = ideal_generators(A, out);
      return out;
    }
    case Ring::Family::product: {
      Ideal::Product prod;
      for (std::size_t i = 0; i < A.factors().size(); ++i)
        prod.parts.push_back(ideal_ops(A.factors()[i], I.product().parts[i], J.product().parts[i], op));
      out.rep = std::move(prod);
      out.gens = ideal_generators(A, out);
      return out;
    }
  }
  return out;
}

Ideal annihilator(const Ring& A, const Element& f) {
  A.check(f);
  Ideal I;
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      Bitset m(R.size());
      for (Index a = 0; a < R.size(); ++a)
        if (R.mul(a, f.index()) == 0) m.set(a);
      I.rep = finite_from_mask(std::move(m));
      break;
    }
    case Ring::Family::semilocal:
      return f.fraction().num == 0 ? whole_ideal(A) : zero_ideal(A);
    case Ring::Family::product: {
      Ideal::Product prod;
      for (std::size_t i = 0; i < A.factors().size(); ++i)
        prod.parts.push_back(annihilator(A.factors()[i], f.parts()[i]));
      I.rep = std::move(prod);
      break;
    }
  }
  I.gens = ideal_generators(A, I);
  return I;
}

namespace {

Ideal nilradical(const Ring& A) {
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      Bitset m(R.size());
      for (Index a = 0; a < R.size(); ++a)
        if (R.is_nilpotent(a)) m.set(a);
      return finite_ideal_from_mask(A, std::move(m));
    }
    case Ring::Family::semilocal: return zero_ideal(A);
    case Ring::Family::product: {
      Ideal I;
      Ideal::Product prod;
      for (const auto& f : A.factors()) prod.parts.push_back(nilradical(f));
      I.rep = std::move(prod);
      I.gens = ideal_generators(A, I);
      return I;
    }
  }
  return {};
}

}  // namespace

Radicals radicals(const Ring& A) {
  Radicals r{nilradical(A), whole_ideal(A)};
  const auto& spec = A.spectrum();
  for (const auto& pt : spec.points)
    if (pt.maximal) r.jacobson = ideal_intersect(A, r.jacobson, pt.ideal);
  return r;
}

PureResult is_pure(const Ring& A, const Ideal& I) {
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& x = I.finite();
      for (Index f : x.elements) {
        Bitset ann(R.size());
        for (Index a = 0; a < R.size(); ++a)
          if (R.mul(a, f) == 0) ann.set(a);
        const std::size_t meet = (ann & x.mask).count();
        // |Ann(f) + I| = |Ann(f)| |I| / |Ann(f) and I|
        if (ann.count() * x.elements.size() != meet * R.size()) return {false, Element(f)};
      }
      return {};
    }
    case Ring::Family::semilocal: {
      const auto& s = I.semilocal();
      if (s.zero || I.is_whole()) return {};
      return {false, Element(A.semilocal().make(semilocal_generator(s)))};
    }
    case Ring::Family::product: {
      const auto& parts = I.product().parts;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto r = is_pure(A.factors()[i], parts[i]);
        if (!r.pure) return {false, A.embed(i, *r.counterexample)};
      }
      return {};
    }
  }
  return {};
}

RegularResult is_regular(const Ring& A, const Ideal& I) {
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& x = I.finite();
      std::vector<Index> idem;
      for (Index e : R.idempotents())
        if (x.mask.test(e)) idem.push_back(e);
      for (Index f : x.elements) {
        const bool ok = std::any_of(idem.begin(), idem.end(), [&](Index e) { return R.mul(f, e) == f; });
        if (!ok) return {};
      }
      Index join = 0;
      for (Index e : idem) join = R.sub(R.add(join, e), R.mul(join, e));
      return {true, Element(join)};
    }
    case Ring::Family::semilocal: {
      if (I.semilocal().zero) return {true, A.zero()};
      if (I.is_whole()) return {true, A.one()};
      return {};
    }
    case Ring::Family::product: {
      std::vector<Element> gen;
      const auto& parts = I.product().parts;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        auto r = is_regular(A.factors()[i], parts[i]);
        if (!r.regular) return {};
        gen.push_back(*r.generator);
      }
      return {true, Element(std::move(gen))};
    }
  }
  return {};
}

namespace detail {

Quotient quotient_with_descriptor(const Ring& A, const Ideal& I, std::optional<RingDescriptor> desc) {
  auto make_desc = [&]() {
    if (desc) return *desc;
    std::vector<nlohmann::json> gens;
    for (const auto& g : ideal_generators(A, I)) gens.push_back(A.element_to_json(g));
    return RingDescriptor::quotient(A.descriptor(), std::move(gens));
  };
  Quotient q;
  switch (A.family()) {
    case Ring::Family::finite: {
      std::vector<Index> coset;
      auto R = FiniteRing::quotient(A.finite_ptr(), I.finite().mask, &coset);
      q.ring = Ring::make_finite(std::move(R), make_desc(), A.limits());
      q.map.source = A;
      q.map.target = q.ring;
      q.map.table = coset;
      q.map.fn = [coset](const Element& a) { return Element(coset[a.index()]); };
      return q;
    }
    case Ring::Family::semilocal: {
      const auto& s = I.semilocal();
      if (s.zero) {
        q.ring = desc ? with_descriptor(A, *desc) : A;
        q.map = RingMap::identity(A);
        q.map.target = q.ring;
        return q;
      }
      const std::int64_t m = semilocal_generator(s);
      if (static_cast<std::uint64_t>(m) > A.limits().ring_size)
        size_error("", static_cast<std::size_t>(m), A.limits().ring_size);
      q.ring = Ring::make_finite(FiniteRing::integers_mod(static_cast<std::uint64_t>(m)), make_desc(), A.limits());
      q.map.source = A;
      q.map.target = q.ring;
      const auto mod = static_cast<__int128>(m);
      q.map.fn = [mod](const Element& a) {
        const Fraction& f = a.fraction();
        // a/b maps to a * b^{-1} mod m; b is coprime to m
        __int128 inv = 1, base = ((f.den % mod) + mod) % mod, e = 0;
        // Euler-free inverse via extended gcd
        __int128 r0 = mod, r1 = base, t0 = 0, t1 = 1;
        while (r1 != 0) {
          const __int128 qq = r0 / r1;
          std::swap(r0, r1);
          r1 -= qq * r0;
          std::swap(t0, t1);
          t1 -= qq * t0;
        }
        (void)e;
        inv = ((t0 % mod) + mod) % mod;
        const __int128 num = ((f.num % mod) + mod) % mod;
        return Element(static_cast<Index>((num * inv) % mod));
      };
      return q;
    }
    case Ring::Family::product: {
      std::vector<Quotient> parts;
      std::vector<Ring> rings;
      for (std::size_t i = 0; i < A.factors().size(); ++i) {
        parts.push_back(quotient_with_descriptor(A.factors()[i], I.product().parts[i], std::nullopt));
        rings.push_back(parts.back().ring);
      }
      Ring prod = Ring::make_product(rings, A.limits());
      q.ring = with_descriptor(prod, make_desc());
      q.map.source = A;
      q.map.target = q.ring;
      const bool flat = q.ring.is_finite();
      std::vector<FiniteRing::Ptr> fin;
      if (flat)
        for (const auto& r : rings) fin.push_back(r.finite_ptr());
      q.map.fn = [parts, flat, fin](const Element& a) {
        std::vector<Element> comps;
        for (std::size_t i = 0; i < parts.size(); ++i) comps.push_back(parts[i].map(a.parts()[i]));
        if (!flat) return Element(std::move(comps));
        std::vector<Index> idx;
        for (const auto& c : comps) idx.push_back(c.index());
        return Element(join_product(fin, idx));
      };
      return q;
    }
  }
  return q;
}

}  // namespace detail

Quotient quotient_ring(const Ring& A, const Ideal& I) { return detail::quotient_with_descriptor(A, I, std::nullopt); }

std::vector<Ideal> enumerate_ideals(const Ring& A) {
  if (!A.is_finite()) throw Error(ErrorKind::unsupported, "ideal enumeration needs a finite ring");
  const auto& R = A.finite();
  if (R.size() > A.limits().ideal_enum)
    throw Error(ErrorKind::size_cap, "ideal enumeration: ring size " + std::to_string(R.size()) + " exceeds cap " +
                                         std::to_string(A.limits().ideal_enum));
  std::vector<Ideal::Finite> found;
  auto known = [&](const Bitset& m) {
    return std::any_of(found.begin(), found.end(), [&](const Ideal::Finite& f) { return f.mask == m; });
  };
  for (Index a = 0; a < R.size(); ++a) {
    Bitset m = principal_mask(R, a);
    if (!known(m)) found.push_back(finite_from_mask(std::move(m)));
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        Bitset m = subgroup_sum(R, found[i], found[j]);
        if (!known(m)) {
          found.push_back(finite_from_mask(std::move(m)));
          grew = true;
        }
      }
  }
  std::sort(found.begin(), found.end(), [](const Ideal::Finite& a, const Ideal::Finite& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  std::vector<Ideal> out;
  for (auto& f : found) {
    Ideal I;
    I.rep = std::move(f);
    I.gens = ideal_generators(A, I);
    out.push_back(std::move(I));
  }
  return out;
}

std::vector<Element> ideal_generators(const Ring& A, const Ideal& I) {
  std::vector<Element> gens;
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& x = I.finite();
      Ideal::Finite acc;
      acc.mask = Bitset(R.size());
      acc.mask.set(0);
      acc.elements = {0};
      for (Index a : x.elements) {
        if (acc.mask.test(a)) continue;
        gens.emplace_back(a);
        acc = finite_from_mask(subgroup_sum(R, acc, finite_from_mask(principal_mask(R, a))));
        if (acc.mask == x.mask) break;
      }
      return gens;
    }
    case Ring::Family::semilocal: {
      const auto& s = I.semilocal();
      if (!s.zero) gens.emplace_back(A.semilocal().make(semilocal_generator(s)));
      return gens;
    }
    case Ring::Family::product: {
      const auto& parts = I.product().parts;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& g : ideal_generators(A.factors()[i], parts[i])) gens.push_back(A.embed(i, g));
      return gens;
    }
  }
  return gens;
}

nlohmann::json ideal_to_json(const Ring& A, const Ideal& I) {
  nlohmann::json j;
  if (A.is_finite()) {
    j["elements"] = I.finite().elements;
    return j;
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal_generators(A, I)) gens.push_back(A.element_to_json(g));
  j["gens"] = gens;
  return j;
}

std::string ideal_label(const Ring& A, const Ideal& I) {
  switch (A.family()) {
    case Ring::Family::finite: {
      std::string out = "{";
      const auto& e = I.finite().elements;
      for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
      return out + "}";
    }
    case Ring::Family::semilocal: {
      const auto& s = I.semilocal();
      if (s.zero) return "0";
      if (I.is_whole()) return "A";
      return std::to_string(semilocal_generator(s)) + "A";
    }
    case Ring::Family::product: {
      std::string out;
      const auto& parts = I.product().parts;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " x ";
        out += ideal_label(A.factors()[i], parts[i]);
      }
      return out;
    }
  }
  return "?";
}

}  // namespace ringlab
