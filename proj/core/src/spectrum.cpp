#include "ringlab/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "ring_node.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

std::vector<std::size_t> SpectrumGraph::maximal_ids() const {
  std::vector<std::size_t> out;
  for (const auto& p : points)
    if (p.maximal) out.push_back(p.id);
  return out;
}

std::vector<std::size_t> SpectrumGraph::minimal_ids() const {
  std::vector<std::size_t> out;
  for (const auto& p : points)
    if (p.minimal) out.push_back(p.id);
  return out;
}

SpectralSpace SpectrumGraph::to_space() const {
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(p.label);
  return SpectralSpace::from_order(std::move(labels), le);
}

std::vector<Element> primitive_idempotents(const Ring& A) {
  const auto idem = A.idempotents();
  std::vector<Element> out;
  for (const auto& e : idem) {
    if (A.is_zero(e)) continue;
    const bool minimal = std::none_of(idem.begin(), idem.end(), [&](const Element& f) {
      return !A.is_zero(f) && f != e && A.mul(f, e) == f;
    });
    if (minimal) out.push_back(e);
  }
  return out;
}

namespace {

void set_flags(SpectrumGraph& g) {
  const std::size_t n = g.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    g.points[i].id = i;
    g.points[i].maximal = true;
    g.points[i].minimal = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (g.le[i][j]) g.points[i].maximal = false;
      if (g.le[j][i]) g.points[i].minimal = false;
    }
  }
}

SpectrumGraph compute_spectrum(const Ring& A) {
  SpectrumGraph g;
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      for (const auto& e : primitive_idempotents(A)) {
        Bitset m(R.size());
        for (Index a = 0; a < R.size(); ++a)
          if (R.is_nilpotent(R.mul(a, e.index()))) m.set(a);
        SpecPoint p;
        p.ideal = finite_ideal_from_mask(A, std::move(m));
        p.label = ideal_label(A, p.ideal);
        g.points.push_back(std::move(p));
      }
      std::sort(g.points.begin(), g.points.end(), [](const SpecPoint& a, const SpecPoint& b) {
        return a.ideal.finite().elements < b.ideal.finite().elements;
      });
      break;
    }
    case Ring::Family::semilocal: {
      SpecPoint zero;
      zero.ideal = zero_ideal(A);
      zero.label = "0";
      g.points.push_back(std::move(zero));
      for (auto p : A.semilocal().primes()) {
        SpecPoint pt;
        pt.ideal = ideal_generate(A, {Element(A.semilocal().make(p))});
        pt.prime = p;
        pt.label = ideal_label(A, pt.ideal);
        g.points.push_back(std::move(pt));
      }
      break;
    }
    case Ring::Family::product: {
      const auto& fs = A.factors();
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const auto& sub = fs[k].spectrum();
        for (const auto& q : sub.points) {
          SpecPoint pt;
          Ideal::Product parts;
          for (std::size_t i = 0; i < fs.size(); ++i) parts.parts.push_back(i == k ? q.ideal : whole_ideal(fs[i]));
          pt.ideal.rep = std::move(parts);
          pt.ideal.gens = ideal_generators(A, pt.ideal);
          pt.label = std::to_string(k) + ":" + q.label;
          pt.factor = k;
          pt.local_id = q.id;
          pt.prime = q.prime;
          g.points.push_back(std::move(pt));
        }
      }
      break;
    }
  }
  const std::size_t n = g.points.size();
  g.le.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.le[i][j] = ideal_subset(g.points[i].ideal, g.points[j].ideal);
  set_flags(g);
  return g;
}

const SpecPoint& point_of(const Ring& A, std::size_t point) {
  const auto& spec = A.spectrum();
  if (point >= spec.points.size())
    throw Error(ErrorKind::precondition, "no prime with id " + std::to_string(point) + " in " + A.name());
  return spec.points[point];
}

}  // namespace

const SpectrumGraph& Ring::spectrum() const {
  const auto& n = node();
  std::call_once(n.spec_once, [&] { n.spec = std::make_shared<const SpectrumGraph>(compute_spectrum(*this)); });
  return *n.spec;
}

const SpectrumGraph& primes(const Ring& A) { return A.spectrum(); }

Ideal ker_pi(const Ring& A, std::size_t point) {
  const SpecPoint& p = point_of(A, point);
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& prime = p.ideal.finite().mask;
      Bitset k(R.size());
      for (Index g = 0; g < R.size(); ++g) {
        if (prime.test(g)) continue;
        for (Index f = 0; f < R.size(); ++f)
          if (!k.test(f) && R.mul(f, g) == 0) k.set(f);
      }
      return finite_ideal_from_mask(A, std::move(k));
    }
    case Ring::Family::semilocal:
      return zero_ideal(A);
    case Ring::Family::product: {
      // outside the factor the unit vector of that factor kills everything
      Ideal I;
      Ideal::Product parts;
      for (std::size_t i = 0; i < A.factors().size(); ++i)
        parts.parts.push_back(i == p.factor ? ker_pi(A.factors()[i], p.local_id) : whole_ideal(A.factors()[i]));
      I.rep = std::move(parts);
      I.gens = ideal_generators(A, I);
      return I;
    }
  }
  return {};
}

Localization localize(const Ring& A, std::size_t point) {
  const SpecPoint& p = point_of(A, point);
  switch (A.family()) {
    case Ring::Family::finite: {
      auto q = quotient_ring(A, ker_pi(A, point));
      return {q.ring, q.map};
    }
    case Ring::Family::semilocal: {
      if (p.prime == 0)
        throw Error(ErrorKind::unsupported, "localization of " + A.name() + " at the zero prime is the rationals");
      Localization out;
      out.ring = Ring::make_semilocal({p.prime}, RingDescriptor::semilocal_int({p.prime}), A.limits());
      out.map.source = A;
      out.map.target = out.ring;
      out.map.fn = [](const Element& a) { return a; };
      return out;
    }
    case Ring::Family::product: {
      auto inner = localize(A.factors()[p.factor], p.local_id);
      Localization out;
      out.ring = inner.ring;
      out.map.source = A;
      out.map.target = out.ring;
      const std::size_t k = p.factor;
      out.map.fn = [inner, k](const Element& a) { return inner.map(a.parts()[k]); };
      return out;
    }
  }
  return {};
}

std::optional<Element> minimal_prime_witness(const Ring& A, std::size_t point, const Element& f) {
  const SpecPoint& p = point_of(A, point);
  A.check(f);
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      for (Index g = 0; g < R.size(); ++g)
        if (!p.ideal.contains(Element(g)) && R.is_nilpotent(R.mul(f.index(), g))) return Element(g);
      return std::nullopt;
    }
    case Ring::Family::semilocal:
      // a domain: f g nilpotent with g nonzero forces f = 0
      if (f.fraction().num == 0) return A.one();
      return std::nullopt;
    case Ring::Family::product: {
      auto g = minimal_prime_witness(A.factors()[p.factor], p.local_id, f.parts()[p.factor]);
      if (!g) return std::nullopt;
      return A.embed(p.factor, *g);
    }
  }
  return std::nullopt;
}

bool all_f_have_witness(const Ring& A, std::size_t point) {
  const SpecPoint& p = point_of(A, point);
  switch (A.family()) {
    case Ring::Family::finite:
      for (Index f : p.ideal.finite().elements)
        if (!minimal_prime_witness(A, point, Element(f))) return false;
      return true;
    case Ring::Family::semilocal:
      // 0 and the generator represent the prime: every nonzero member behaves like the generator
      for (const auto& f : ideal_generators(A, p.ideal))
        if (!minimal_prime_witness(A, point, f)) return false;
      return static_cast<bool>(minimal_prime_witness(A, point, A.zero()));
    case Ring::Family::product:
      return all_f_have_witness(A.factors()[p.factor], p.local_id);
  }
  return false;
}

std::vector<Ideal> max_regular_ideals(const Ring& A) {
  const auto idem = A.idempotents();
  std::vector<Element> tops;
  for (const auto& e : idem) {
    if (e == A.one()) continue;
    const bool maximal = std::none_of(idem.begin(), idem.end(), [&](const Element& f) {
      return f != A.one() && f != e && A.mul(e, f) == e;
    });
    if (maximal) tops.push_back(e);
  }
  std::sort(tops.begin(), tops.end(),
            [&](const Element& a, const Element& b) { return A.sub(A.one(), a) < A.sub(A.one(), b); });
  std::vector<Ideal> out;
  for (const auto& e : tops) out.push_back(ideal_generate(A, {e}));
  return out;
}

nlohmann::json spectrum_to_json(const Ring& A) {
  const auto& spec = A.spectrum();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : spec.points) {
    nlohmann::json j = {{"id", p.id}};
    if (A.is_finite())
      j["elements"] = p.ideal.finite().elements;
    else
      j["symbol"] = p.label;
    j["maximal"] = p.maximal;
    j["minimal"] = p.minimal;
    pts.push_back(std::move(j));
  }
  nlohmann::json order = nlohmann::json::array();
  for (std::size_t i = 0; i < spec.points.size(); ++i)
    for (std::size_t j = 0; j < spec.points.size(); ++j)
      if (i != j && spec.le[i][j]) order.push_back({i, j});
  return {{"ring", A.name()}, {"points", pts}, {"order", order}};
}

std::string spectrum_to_dot(const Ring& A) {
  const auto X = A.spectrum().to_space();
  std::ostringstream os;
  os << "digraph spectrum {\n";
  for (std::size_t i = 0; i < X.size(); ++i) os << "  " << i << " [label=" << nlohmann::json(X.label(i)).dump() << "];\n";
  for (auto [a, b] : X.covers()) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ringlab
