#include "ringlab/poly.hpp"

#include <algorithm>
#include <numeric>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

unsigned total(const std::vector<unsigned>& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool grlex_greater(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  const unsigned da = total(a);
  const unsigned db = total(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::size_t vars, std::vector<Term> terms) : ring_(std::move(ring)), vars_(vars) {
  for (const auto& t : terms) {
    if (t.exp.size() != vars)
      throw Error(ErrorKind::arity, "term has " + std::to_string(t.exp.size()) + " exponents, expected " +
                                        std::to_string(vars));
    ring_.check(t.coeff);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.exp, b.exp); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exp == t.exp)
      terms_.back().coeff = ring_.add(terms_.back().coeff, t.coeff);
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [&](const Term& t) { return ring_.is_zero(t.coeff); });
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, total(t.exp));
  return d;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

PolySystem make_system(Ring ring, std::size_t vars, std::vector<Polynomial> polys) {
  if (polys.empty()) throw Error(ErrorKind::input, "a system needs at least one polynomial");
  for (const auto& f : polys) {
    if (f.vars() != vars) throw Error(ErrorKind::arity, "polynomial arity differs from the system arity");
    if (!f.ring().same_as(ring)) throw Error(ErrorKind::precondition, "polynomials over different rings");
  }
  return {std::move(ring), vars, std::move(polys)};
}

Element poly_eval(const Polynomial& f, const std::vector<Element>& point) {
  if (point.size() != f.vars())
    throw Error(ErrorKind::arity, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                      std::to_string(f.vars()));
  const Ring& A = f.ring();
  if (A.is_finite()) {
    const auto& R = A.finite();
    Index acc = 0;
    for (const auto& t : f.terms()) {
      Index m = t.coeff.index();
      for (std::size_t v = 0; v < t.exp.size(); ++v)
        if (t.exp[v]) m = R.mul(m, R.pow(point[v].index(), t.exp[v]));
      acc = R.add(acc, m);
    }
    return acc;
  }
  Element acc = A.zero();
  for (const auto& t : f.terms()) {
    Element m = t.coeff;
    for (std::size_t v = 0; v < t.exp.size(); ++v)
      if (t.exp[v]) m = A.mul(m, A.pow(point[v], t.exp[v]));
    acc = A.add(acc, m);
  }
  return acc;
}

bool satisfies(const PolySystem& sys, const std::vector<Element>& point) {
  return std::all_of(sys.polys.begin(), sys.polys.end(),
                     [&](const Polynomial& f) { return sys.ring.is_zero(poly_eval(f, point)); });
}

Polynomial map_poly(const Polynomial& f, const RingMap& map) {
  if (!f.ring().same_as(map.source)) throw Error(ErrorKind::precondition, "ring map does not start at the polynomial ring");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({map(t.coeff), t.exp});
  return Polynomial(map.target, f.vars(), std::move(terms));
}

PolySystem map_system(const PolySystem& sys, const RingMap& map) {
  std::vector<Polynomial> polys;
  for (const auto& f : sys.polys) polys.push_back(map_poly(f, map));
  return {map.target, sys.vars, std::move(polys)};
}

PolySystem system_from_json(const Ring& ring, const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::input, "at /: expected a system object");
  if (!j.contains("vars") || !j["vars"].is_number_unsigned())
    throw Error(ErrorKind::input, "at /vars: expected a nonnegative integer");
  const auto vars = j["vars"].get<std::size_t>();
  if (!j.contains("polys") || !j["polys"].is_array()) throw Error(ErrorKind::input, "at /polys: expected an array");
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < j["polys"].size(); ++i) {
    const auto& p = j["polys"][i];
    const std::string ppath = "/polys/" + std::to_string(i);
    if (!p.is_object() || !p.contains("terms") || !p["terms"].is_array())
      throw Error(ErrorKind::input, "at " + ppath + "/terms: expected an array");
    std::vector<Term> terms;
    for (std::size_t k = 0; k < p["terms"].size(); ++k) {
      const auto& t = p["terms"][k];
      const std::string tpath = ppath + "/terms/" + std::to_string(k);
      if (!t.is_object() || !t.contains("coeff") || !t.contains("exp") || !t["exp"].is_array())
        throw Error(ErrorKind::input, "at " + tpath + ": expected {coeff, exp}");
      Term term;
      term.coeff = ring.element_from_json(t["coeff"], tpath + "/coeff");
      for (const auto& e : t["exp"]) {
        if (!e.is_number_unsigned()) throw Error(ErrorKind::input, "at " + tpath + "/exp: expected nonnegative integers");
        term.exp.push_back(e.get<unsigned>());
      }
      if (term.exp.size() != vars)
        throw Error(ErrorKind::arity, "at " + tpath + "/exp: " + std::to_string(term.exp.size()) +
                                          " exponents for " + std::to_string(vars) + " variables");
      terms.push_back(std::move(term));
    }
    polys.emplace_back(ring, vars, std::move(terms));
  }
  return make_system(ring, vars, std::move(polys));
}

nlohmann::json system_to_json(const PolySystem& sys) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& f : sys.polys) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms()) terms.push_back({{"coeff", sys.ring.element_to_json(t.coeff)}, {"exp", t.exp}});
    polys.push_back({{"terms", terms}});
  }
  return {{"vars", sys.vars}, {"polys", polys}};
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t v = 0; v < t.exp.size(); ++v) {
      if (!t.exp[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += f.vars() <= 3 ? names[v] : "x" + std::to_string(v + 1);
      if (t.exp[v] > 1) mono += "^" + std::to_string(t.exp[v]);
    }
    const std::string c = to_string(t.coeff);
    if (mono.empty())
      out += c;
    else if (t.coeff == f.ring().one())
      out += mono;
    else
      out += c + "*" + mono;
  }
  return out;
}

}  // namespace ringlab
