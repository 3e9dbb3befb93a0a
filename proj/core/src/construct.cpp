#include "ringlab/construct.hpp"

#include <algorithm>
#include <bit>

#include "ringlab/error.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

namespace {

void require_finite(const Ring& A, const char* what) {
  if (!A.is_finite()) throw Error(ErrorKind::unsupported, std::string(what) + " needs a finite ring, got " + A.name());
}

std::string show(const Ring& A, const Element& a) { return A.element_to_json(a).dump(); }

}  // namespace

CleanDecomposition clean_decompose(const Ring& A, const Element& f) {
  A.check(f);
  for (const auto& e : A.idempotents()) {
    const Element u = A.sub(f, e);
    if (A.is_unit(u)) return {e, u};
  }
  throw Error(ErrorKind::no_decomposition, "no idempotent e makes f - e a unit for f = " + show(A, f));
}

Element exchange_idempotent(const Ring& A, const Element& f) {
  A.check(f);
  const Ideal Af = ideal_generate(A, {f});
  const Ideal Ag = ideal_generate(A, {A.sub(A.one(), f)});
  // candidates are closed under e + e' - ee', so a greatest one exists
  std::optional<Element> best;
  for (const auto& e : A.idempotents())
    if (Af.contains(e) && Ag.contains(A.sub(A.one(), e)))
      best = best ? A.sub(A.add(*best, e), A.mul(*best, e)) : e;
  if (!best) throw Error(ErrorKind::no_decomposition, "no exchange idempotent for f = " + show(A, f));
  return *best;
}

IdempotentLift lift_idempotent(const Ring& A, const Ideal& I, const Element& f) {
  A.check(f);
  const Element defect = A.sub(A.mul(f, f), f);
  if (!I.contains(defect))
    throw Error(ErrorKind::precondition, "f^2 - f is not in the ideal for f = " + show(A, f));
  IdempotentLift out;
  if (ideal_subset(I, radicals(A).nilradical)) {
    out.newton = true;
    const unsigned k = std::max(1u, A.nilpotency_index(defect));
    out.step_bound = static_cast<unsigned>(std::bit_width(k - 1)) + 1;  // ceil(log2 k) + 1
    Element e = f;
    out.iterates.push_back(e);
    while (!A.is_idempotent(e)) {
      if (out.steps == out.step_bound) throw Error(ErrorKind::no_lift, "Newton iteration exceeded its bound");
      const Element e2 = A.mul(e, e);
      const Element e3 = A.mul(e2, e);
      e = A.sub(A.mul(A.from_int(3), e2), A.mul(A.from_int(2), e3));
      out.iterates.push_back(e);
      ++out.steps;
    }
    out.idempotent = e;
    return out;
  }
  for (const auto& e : A.idempotents())
    if (I.contains(A.sub(f, e))) {
      out.idempotent = e;
      out.iterates = {f, e};
      return out;
    }
  throw Error(ErrorKind::no_lift, "no idempotent lifts f = " + show(A, f));
}

CrtDecomposition crt_decomposition(const Ring& A) {
  require_finite(A, "crt_decomposition");
  CrtDecomposition d;
  const auto& R = A.finite();
  std::vector<RingMap> maps;
  for (auto m : A.spectrum().maximal_ids()) {
    auto loc = localize(A, m);
    d.maximal_ids.push_back(m);
    d.factors.push_back(loc.ring);
    maps.push_back(loc.map);
  }
  d.product = Ring::make_product(d.factors, A.limits());
  d.forward.assign(R.size(), 0);
  for (Index a = 0; a < R.size(); ++a) {
    // mixed radix, first factor most significant
    std::size_t code = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) code = code * d.factors[k].finite().size() + maps[k](a);
    d.forward[a] = static_cast<Index>(code);
  }
  const std::size_t n = d.product.finite().size();
  const Index none = static_cast<Index>(-1);
  d.inverse.assign(n, none);
  for (Index a = 0; a < R.size(); ++a)
    if (d.forward[a] < n && d.inverse[d.forward[a]] == none) d.inverse[d.forward[a]] = a;
  return d;
}

std::optional<std::string> crt_defect(const Ring& A, const CrtDecomposition& d) {
  const auto& R = A.finite();
  const auto& P = d.product.finite();
  if (R.size() != P.size()) return "sizes differ: " + std::to_string(R.size()) + " vs " + std::to_string(P.size());
  for (Index a = 0; a < R.size(); ++a) {
    if (d.forward[a] >= P.size() || d.inverse[d.forward[a]] != a) return "not injective at " + std::to_string(a);
  }
  if (d.forward[R.one()] != P.one()) return "one is not preserved";
  for (Index a = 0; a < R.size(); ++a)
    for (Index b = 0; b < R.size(); ++b) {
      if (d.forward[R.add(a, b)] != P.add(d.forward[a], d.forward[b]))
        return "addition fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (d.forward[R.mul(a, b)] != P.mul(d.forward[a], d.forward[b]))
        return "multiplication fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  return std::nullopt;
}

std::string to_string(GluingMode m) { return m == GluingMode::max ? "max" : "min"; }

GluingPlan build_gluing_plan(const Ring& A, GluingMode mode) {
  require_finite(A, "build_gluing_plan");
  GluingPlan plan;
  plan.ring = A;
  plan.mode = mode;
  const auto& spec = A.spectrum();
  if (mode == GluingMode::max) {
    const auto prims = primitive_idempotents(A);
    for (auto m : spec.maximal_ids()) {
      GluingPart part;
      part.point = m;
      auto it = std::find_if(prims.begin(), prims.end(),
                             [&](const Element& e) { return !spec.points[m].ideal.contains(e); });
      if (it == prims.end()) throw Error(ErrorKind::precondition, "no primitive idempotent outside a maximal ideal");
      part.idempotent = *it;
      auto loc = localize(A, m);
      part.factor = loc.ring;
      part.map = loc.map;
      plan.parts.push_back(std::move(part));
    }
  } else {
    if (!radicals(A).nilradical.is_zero())
      throw Error(ErrorKind::precondition, "min-mode gluing needs a reduced ring, got " + A.name());
    for (auto p : spec.minimal_ids()) {
      const Ideal& P = spec.points[p].ideal;
      const auto reg = is_regular(A, P);
      if (!reg.regular) throw Error(ErrorKind::precondition, "minimal prime " + spec.points[p].label + " is not regular");
      GluingPart part;
      part.point = p;
      part.idempotent = A.sub(A.one(), *reg.generator);
      auto q = quotient_ring(A, P);
      part.factor = q.ring;
      part.map = q.map;
      plan.parts.push_back(std::move(part));
    }
  }
  for (auto& part : plan.parts) {
    const Index none = static_cast<Index>(-1);
    part.lift.assign(part.factor.finite().size(), none);
    for (Index a = 0; a < A.finite().size(); ++a)
      if (part.lift[part.map(a)] == none) part.lift[part.map(a)] = a;
  }
  return plan;
}

std::vector<Element> glue_solutions(const GluingPlan& plan, const PolySystem& sys,
                                    const std::vector<std::vector<Element>>& local) {
  const Ring& A = plan.ring;
  if (local.size() != plan.parts.size())
    throw Error(ErrorKind::arity, "expected " + std::to_string(plan.parts.size()) + " local solutions");
  std::vector<Element> out(sys.vars, A.zero());
  for (std::size_t k = 0; k < plan.parts.size(); ++k) {
    const auto& part = plan.parts[k];
    if (local[k].size() != sys.vars || !satisfies(map_system(sys, part.map), local[k]))
      throw Error(ErrorKind::precondition, "local solution for factor " + std::to_string(k) + " does not verify");
    for (std::size_t j = 0; j < sys.vars; ++j)
      out[j] = A.add(out[j], A.mul(part.idempotent, Element(part.lift[local[k][j].index()])));
  }
  if (!satisfies(sys, out)) throw Error(ErrorKind::precondition, "glued assignment does not satisfy the system");
  return out;
}

std::optional<std::vector<Element>> brute_force_solve(const PolySystem& sys) {
  require_finite(sys.ring, "brute_force_solve");
  const std::size_t n = sys.ring.finite().size();
  double total = 1;
  for (std::size_t j = 0; j < sys.vars; ++j) total *= static_cast<double>(n);
  if (total > 1e8) throw Error(ErrorKind::size_cap, "search space too large for exhaustive solving");
  std::vector<Element> x(sys.vars, Element(Index{0}));
  while (true) {
    if (satisfies(sys, x)) return x;
    std::size_t j = sys.vars;
    while (j > 0) {
      --j;
      const Index next = x[j].index() + 1;
      if (next < n) {
        x[j] = next;
        break;
      }
      x[j] = Index{0};
      if (j == 0) return std::nullopt;
    }
    if (sys.vars == 0) return std::nullopt;
  }
}

LocalGlobalResult solve_local_global(const Ring& A, const PolySystem& sys) {
  LocalGlobalResult r;
  r.plan = build_gluing_plan(A, GluingMode::max);
  std::vector<std::vector<Element>> found;
  for (const auto& part : r.plan.parts) {
    r.local.push_back(brute_force_solve(map_system(sys, part.map)));
    if (r.local.back()) found.push_back(*r.local.back());
  }
  if (found.size() == r.plan.parts.size()) r.solution = glue_solutions(r.plan, sys, found);
  return r;
}

nlohmann::json to_json(const LocalGlobalResult& r) {
  const Ring& A = r.plan.ring;
  nlohmann::json j;
  j["status"] = r.solution ? "solved" : "unsolvable";
  j["assignment"] = nlohmann::json::array();
  if (r.solution)
    for (const auto& x : *r.solution) j["assignment"].push_back(A.element_to_json(x));
  nlohmann::json idem = nlohmann::json::array();
  nlohmann::json factors = nlohmann::json::array();
  for (std::size_t k = 0; k < r.plan.parts.size(); ++k) {
    const auto& part = r.plan.parts[k];
    idem.push_back(A.element_to_json(part.idempotent));
    nlohmann::json f = {{"ring", part.factor.name()}, {"solution", nullptr}};
    if (k < r.local.size() && r.local[k]) {
      f["solution"] = nlohmann::json::array();
      for (const auto& x : *r.local[k]) f["solution"].push_back(part.factor.element_to_json(x));
    }
    factors.push_back(f);
  }
  j["plan"] = {{"mode", to_string(r.plan.mode)}, {"idempotents", idem}, {"factors", factors}};
  return j;
}

std::optional<Element> purify_witness(const Ring& A, const Element& f, const Element& g) {
  A.check(f);
  A.check(g);
  if (!A.is_zero(A.mul(f, g))) throw Error(ErrorKind::precondition, "purify_witness needs fg = 0");
  // Candidates are closed under products, so their product is the least one.
  std::optional<Element> least;
  for (const auto& e : A.idempotents())
    if (A.mul(f, e) == f && A.mul(g, A.sub(A.one(), e)) == g) least = least ? A.mul(*least, e) : e;
  return least;
}

}  // namespace ringlab
