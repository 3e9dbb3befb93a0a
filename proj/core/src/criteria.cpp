#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "criteria_support.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/error.hpp"
#include "ringlab/spectrum.hpp"

namespace ringlab {

using detail::elem;
using detail::pt;

namespace {

using json = nlohmann::json;

struct Ctx {
  const Ring& A;
  const SpectrumGraph& spec;
  SpectralSpace X;
  std::vector<std::size_t> maxs;
  std::vector<std::size_t> mins;

  explicit Ctx(const Ring& ring)
      : A(ring), spec(ring.spectrum()), X(spec.to_space()), maxs(spec.maximal_ids()), mins(spec.minimal_ids()) {}

  PointSet max_set() const { return X.maximal(); }
  PointSet min_set() const { return X.minimal(); }
};

json pair_json(const Ring& A, const Element& f, const Element& g) { return {{"f", elem(A, f)}, {"g", elem(A, g)}}; }

json points_json(const Ring& A, std::initializer_list<std::size_t> ids) {
  json j = json::array();
  for (auto i : ids) j.push_back(pt(A, i));
  return j;
}

json points_json(const Ring& A, PointSet s) {
  json j = json::array();
  for (auto i : members(s)) j.push_back(pt(A, i));
  return j;
}

// A point lying under two maximal points (above) or over two minimal points.
std::optional<std::array<std::size_t, 3>> two_extremal(const SpectralSpace& X, bool above) {
  const PointSet T = above ? X.maximal() : X.minimal();
  for (std::size_t p = 0; p < X.size(); ++p) {
    const auto m = members((above ? X.up(p) : X.down(p)) & T);
    if (m.size() >= 2) return std::array<std::size_t, 3>{p, m[0], m[1]};
  }
  return std::nullopt;
}

json extremal_json(const Ring& A, const std::optional<std::array<std::size_t, 3>>& w) {
  if (!w) return nullptr;
  return points_json(A, {(*w)[0], (*w)[1], (*w)[2]});
}

bool reduced(const Ring& A) { return radicals(A).nilradical.is_zero(); }

Ring reduced_quotient(const Ring& A) { return quotient_ring(A, radicals(A).nilradical).ring; }

// Idempotent e with e in I and 1 - e in J.
std::optional<Element> separating_idempotent(const Ring& A, const Ideal& I, const Ideal& J) {
  for (const auto& e : A.idempotents())
    if (I.contains(e) && J.contains(A.sub(A.one(), e))) return e;
  return std::nullopt;
}

// Smallest neighbourhoods of the subspace on @p domain are order cones inside it.
PointSet sub_neighbourhood(const SpectralSpace& X, std::size_t x, PointSet domain, Topology t) {
  return neighbourhood(X, x, t) & domain;
}

// Do the sets @p basis form a basis of the topology induced on @p domain?
bool is_basis(const SpectralSpace& X, PointSet domain, const std::vector<PointSet>& basis, Topology t) {
  for (auto b : basis) {
    // open in the subspace: contains the neighbourhood of each of its points
    for (auto x : members(b))
      if ((sub_neighbourhood(X, x, domain, t) & ~b) != 0) return false;
  }
  for (auto x : members(domain)) {
    const PointSet nx = sub_neighbourhood(X, x, domain, t);
    const bool found =
        std::any_of(basis.begin(), basis.end(), [&](PointSet b) { return has(b, x) && (b & ~nx) == 0; });
    if (!found) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> distinct_pairs(const std::vector<std::size_t>& ids) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto a : ids)
    for (auto b : ids)
      if (a != b) out.emplace_back(a, b);
  return out;
}

std::optional<std::vector<Ideal>> pure_not_regular(const Ring& A, const std::vector<Ideal>& family) {
  for (const auto& I : family)
    if (is_pure(A, I).pure && !is_regular(A, I).regular) return std::vector<Ideal>{I};
  return std::nullopt;
}

const char* kCapNote = "ideal enumeration cap exceeded";

CriteriaMatrix zero_ring_matrix(const std::string& theorem) {
  CriteriaMatrix m;
  m.theorem = theorem;
  m.not_applicable("all", "zero ring");
  return m;
}

}  // namespace

CriteriaMatrix criteria_reduced(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("reduced");
  CriteriaMatrix m;
  m.theorem = "reduced";
  {
    json w = nullptr;
    for (const auto& f : detail::element_sample(A))
      if (!A.is_zero(f) && A.nilpotency_index(f) > 0) {
        w = {{"f", elem(A, f)}, {"index", A.nilpotency_index(f)}};
        break;
      }
    m.add("nilpotent-scan", w.is_null(), w);
  }
  {
    const auto& spec = A.spectrum();
    Ideal meet = whole_ideal(A);
    for (auto id : spec.minimal_ids()) meet = ideal_intersect(A, meet, spec.points[id].ideal);
    m.add("min-prime-intersection", meet.is_zero(), meet.is_zero() ? json(nullptr) : ideal_to_json(A, meet));
  }
  return m;
}

CriteriaMatrix criteria_zero_dimensional(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("zero-dim");
  Ctx c(A);
  CriteriaMatrix m;
  m.theorem = "zero-dim";
  const std::size_t n = c.spec.points.size();
  {
    json w = nullptr;
    for (std::size_t i = 0; i < n && w.is_null(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && c.spec.le[i][j]) {
          w = points_json(A, {i, j});
          break;
        }
    m.add("i", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (std::size_t i = 0; i < n && w.is_null(); ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!detail::zero_product_witness(A, i, j)) {
          w = points_json(A, {i, j});
          break;
        }
    m.add("ii", w.is_null(), w);
  }
  const auto sz = separation(c.X, Topology::zariski);
  m.add("iii", sz.hausdorff,
        sz.hausdorff_witness ? points_json(A, {sz.hausdorff_witness->first, sz.hausdorff_witness->second}) : json());
  {
    json w = nullptr;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_open(c.X, bit(i), Topology::zariski)) {
        w = pt(A, i);  // a patch-open singleton that is not Zariski open
        break;
      }
    m.add("iv", w.is_null(), w);
  }
  const auto sf = separation(c.X, Topology::flat);
  m.add("v", sf.hausdorff,
        sf.hausdorff_witness ? points_json(A, {sf.hausdorff_witness->first, sf.hausdorff_witness->second}) : json());
  {
    json w = nullptr;
    for (std::size_t i = 0; i < n; ++i)
      if (is_open(c.X, neighbourhood(c.X, i, Topology::zariski), Topology::flat) == false) {
        w = pt(A, i);  // a Zariski open that is not flat open
        break;
      }
    m.add("vi", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (std::size_t i = 0; i < n; ++i)
      if (auto s = detail::localization_obstruction(A, i)) {
        w = {{"prime", pt(A, i)}, {"s", elem(A, *s)}};
        break;
      }
    m.add("vii", w.is_null(), w);
  }
  {
    auto f = detail::absolutely_flat_obstruction(A);
    m.add("viii", !f, f ? json{{"f", elem(A, *f)}} : json());
  }
  m.not_applicable("ix", "quantifies over every flat epimorphism out of A");
  {
    // S-relation: A_p (x) A_q != 0 iff no f outside p, g outside q with fg = 0
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
      return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!detail::zero_product_witness(A, i, j)) parent[find(i)] = find(j);
    json w = nullptr;
    for (std::size_t i = 0; i < n && w.is_null(); ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (find(i) == find(j)) {
          w = points_json(A, {i, j});
          break;
        }
    m.add("x", w.is_null(), w);
  }
  return m;
}

CriteriaMatrix criteria_gelfand(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("gelfand");
  Ctx c(A);
  CriteriaMatrix m;
  m.theorem = "gelfand";
  m.add("i", !two_extremal(c.X, true), extremal_json(A, two_extremal(c.X, true)));
  {
    const auto rc = r_classes(c.X);
    json w = nullptr;
    for (auto mx : c.maxs)
      for (auto cls : rc)
        if (has(cls, mx) && cls != c.X.down(mx)) {
          w = {{"maximal", pt(A, mx)}, {"class", points_json(A, cls)}};
          break;
        }
    m.add("ii", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto [a, b] : distinct_pairs(c.maxs))
      if (a < b && !detail::zero_product_witness(A, a, b)) {
        w = points_json(A, {a, b});
        break;
      }
    m.add("iii", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto mx : c.maxs)
      if (auto s = detail::localization_obstruction(A, mx)) {
        w = {{"maximal", pt(A, mx)}, {"s", elem(A, *s)}};
        break;
      }
    m.add("iv", w.is_null(), w);
  }
  {
    const auto r = retraction(c.X, RetractTarget::max);
    json w = nullptr;
    if (r.witness) w = points_json(A, {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
    m.add("v", r.map && r.continuous, w);
  }
  {
    const auto s = separation(c.X, Topology::zariski);
    m.add("vi", s.normal, s.normal_witness ? points_json(A, {s.normal_witness->first, s.normal_witness->second}) : json());
  }
  {
    auto f = detail::gelfand_identity_obstruction(A);
    m.add("vii", !f, f ? json{{"f", elem(A, *f)}} : json());
  }
  {
    json w = nullptr;
    for (auto mx : c.maxs)
      if (!is_closed(c.X, c.X.down(mx), Topology::zariski)) {
        w = pt(A, mx);
        break;
      }
    m.add("viii", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto [a, b] : distinct_pairs(c.maxs))
      if (a < b && !ideal_sum(A, ker_pi(A, a), ker_pi(A, b)).is_whole()) {
        w = points_json(A, {a, b});
        break;
      }
    m.add("ix", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto [a, b] : distinct_pairs(c.maxs))
      if (!detail::complementary_kernel_element(A, a, b)) {
        w = points_json(A, {a, b});
        break;
      }
    m.add("x", w.is_null(), w);
  }
  m.add("xi", class_map_homeomorphism(c.X, c.max_set(), detail::ring_r_classes(A), Topology::zariski));
  return m;
}

CriteriaMatrix criteria_clean(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("clean");
  Ctx c(A);
  CriteriaMatrix m;
  m.theorem = "clean";
  const auto idem = A.idempotents();
  const auto sample = detail::element_sample(A);
  const bool gelfand_def = !two_extremal(c.X, true);
  const auto family = detail::ideal_family(A);

  m.not_applicable("i", "exercised by the local-global gluing property");
  {
    json w = nullptr;
    for (const auto& f : sample) {
      const bool ok = std::any_of(idem.begin(), idem.end(), [&](const Element& e) { return A.is_unit(A.sub(f, e)); });
      if (!ok) {
        w = {{"f", elem(A, f)}};
        break;
      }
    }
    m.add("ii", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto [a, b] : distinct_pairs(c.maxs))
      if (!separating_idempotent(A, c.spec.points[a].ideal, c.spec.points[b].ideal)) {
        w = points_json(A, {a, b});
        break;
      }
    m.add("iii", w.is_null(), w);
  }
  m.add("iv", gelfand_def && totally_disconnected(c.X.subspace(c.max_set()), Topology::zariski));
  {
    json w = nullptr;
    if (gelfand_def)
      for (auto mx : c.maxs)
        if (!is_regular(A, ker_pi(A, mx)).regular) {
          w = pt(A, mx);
          break;
        }
    m.add("v", gelfand_def && w.is_null(), w);
  }
  {
    auto comps = connected_components(c.X);
    std::vector<PointSet> cones;
    for (auto mx : c.maxs) cones.push_back(c.X.down(mx));
    std::sort(comps.begin(), comps.end());
    std::sort(cones.begin(), cones.end());
    m.add("vi", comps == cones);
  }
  {
    json w = nullptr;
    for (const auto& f : sample) {
      const Ideal Af = ideal_generate(A, {f});
      const Ideal Af1 = ideal_generate(A, {A.sub(A.one(), f)});
      if (!separating_idempotent(A, Af, Af1)) {
        w = {{"f", elem(A, f)}};
        break;
      }
    }
    m.add("vii", w.is_null(), w);
  }
  if (!family) {
    m.not_applicable("viii", kCapNote);
  } else {
    json w = nullptr;
    for (const auto& I : *family) {
      const auto q = quotient_ring(A, I);
      std::vector<Element> images;
      for (const auto& e : idem) images.push_back(q.map(e));
      for (const auto& e : q.ring.idempotents())
        if (std::find(images.begin(), images.end(), e) == images.end()) {
          w = {{"ideal", ideal_to_json(A, I)}, {"idempotent", q.ring.element_to_json(e)}};
          break;
        }
      if (!w.is_null()) break;
    }
    m.add("viii", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto [a, b] : distinct_pairs(c.maxs))
      if (!separating_idempotent(A, ker_pi(A, a), ker_pi(A, b))) {
        w = points_json(A, {a, b});
        break;
      }
    m.add("ix", w.is_null(), w);
  }
  {
    std::vector<PointSet> basis;
    for (const auto& e : idem) {
      PointSet d = 0;
      for (auto mx : c.maxs)
        if (!c.spec.points[mx].ideal.contains(e)) d |= bit(mx);
      basis.push_back(d);
    }
    m.add("x", is_basis(c.X, c.max_set(), basis, Topology::zariski));
  }
  if (!family) {
    m.not_applicable("xi", kCapNote);
  } else {
    const auto bad = pure_not_regular(A, *family);
    m.add("xi", gelfand_def && !bad, bad ? ideal_to_json(A, bad->front()) : json());
  }
  {
    // lambda: m -> ideal generated by the idempotents in m, onto the max-regular ideals
    const auto sp = max_regular_ideals(A);
    std::vector<std::size_t> lam(c.X.size(), 0);
    bool ok = true;
    PointSet hit = 0;
    for (auto mx : c.maxs) {
      std::vector<Element> gens;
      for (const auto& e : idem)
        if (c.spec.points[mx].ideal.contains(e)) gens.push_back(e);
      const Ideal I = ideal_generate(A, gens);
      auto it = std::find(sp.begin(), sp.end(), I);
      if (it == sp.end() || has(hit, static_cast<std::size_t>(it - sp.begin()))) {
        ok = false;
        break;
      }
      lam[mx] = static_cast<std::size_t>(it - sp.begin());
      hit |= bit(lam[mx]);
    }
    ok = ok && std::popcount(hit) == static_cast<int>(sp.size());
    if (ok) {
      // Pierce topology: smallest neighbourhood of M is the meet of the U_e containing it
      std::vector<PointSet> nsp(sp.size(), bit(sp.size()) - 1);
      for (const auto& e : idem) {
        PointSet u = 0;
        for (std::size_t k = 0; k < sp.size(); ++k)
          if (!sp[k].contains(e)) u |= bit(k);
        for (std::size_t k = 0; k < sp.size(); ++k)
          if (has(u, k)) nsp[k] &= u;
      }
      for (auto mx : c.maxs) {
        PointSet image = 0;
        for (auto y : members(sub_neighbourhood(c.X, mx, c.max_set(), Topology::zariski))) image |= bit(lam[y]);
        if (image != nsp[lam[mx]]) ok = false;
      }
    }
    m.add("xii", ok);
  }
  return m;
}

CriteriaMatrix criteria_mp(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("mp");
  Ctx c(A);
  CriteriaMatrix m;
  m.theorem = "mp";
  m.add("i", !two_extremal(c.X, false), extremal_json(A, two_extremal(c.X, false)));
  {
    json w = nullptr;
    for (auto [a, b] : distinct_pairs(c.mins))
      if (a < b && !ideal_sum(A, c.spec.points[a].ideal, c.spec.points[b].ideal).is_whole()) {
        w = points_json(A, {a, b});
        break;
      }
    m.add("ii", w.is_null(), w);
  }
  {
    const Ring B = reduced_quotient(A);
    bool ok = true;
    if (!B.is_zero_ring()) ok = !two_extremal(B.spectrum().to_space(), false);
    m.add("iii", ok);
  }
  {
    const auto rc = r_classes(c.X);
    json w = nullptr;
    for (auto mn : c.mins)
      for (auto cls : rc)
        if (has(cls, mn) && cls != c.X.up(mn)) {
          w = {{"minimal", pt(A, mn)}, {"class", points_json(A, cls)}};
          break;
        }
    m.add("iv", w.is_null(), w);
  }
  {
    const auto r = retraction(c.X, RetractTarget::min);
    json w = nullptr;
    if (r.witness) w = points_json(A, {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
    m.add("v", r.map && r.continuous, w);
  }
  {
    const auto s = separation(c.X, Topology::flat);
    m.add("vi", s.normal, s.normal_witness ? points_json(A, {s.normal_witness->first, s.normal_witness->second}) : json());
  }
  {
    json w = nullptr;
    for (auto mn : c.mins)
      if (!is_closed(c.X, c.X.up(mn), Topology::flat)) {
        w = pt(A, mn);
        break;
      }
    m.add("vii", w.is_null(), w);
  }
  m.add("viii", class_map_homeomorphism(c.X, c.min_set(), detail::ring_r_classes(A), Topology::flat));
  return m;
}

CriteriaMatrix criteria_reduced_mp(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("reduced-mp");
  Ctx c(A);
  CriteriaMatrix m;
  m.theorem = "reduced-mp";
  m.add("i", reduced(A) && !two_extremal(c.X, false));

  json w2 = nullptr, w3 = nullptr, w4 = nullptr;
  if (A.is_finite()) {
    // |Ann(f) + Ann(g)| = |Ann(f)| |Ann(g)| / |Ann(f) meet Ann(g)|
    const auto& R = A.finite();
    const std::size_t n = R.size();
    const auto ann = detail::annihilator_rows(R);
    std::vector<std::size_t> card(n);
    for (Index f = 0; f < n; ++f) card[f] = ann[f].count();
    for (Index f = 0; f < n && (w2.is_null() || w3.is_null()); ++f)
      for (Index g = 0; g < n; ++g) {
        const Index fg = R.mul(f, g);
        const std::size_t meet = (ann[f] & ann[g]).count();
        const std::size_t prod = card[f] * card[g];
        if (w2.is_null() && fg == 0 && prod != n * meet) w2 = pair_json(A, f, g);
        if (w3.is_null()) {
          const bool inside = ann[f].is_subset_of(ann[fg]) && ann[g].is_subset_of(ann[fg]);
          if (!inside || prod != card[fg] * meet) w3 = pair_json(A, f, g);
        }
      }
    for (Index f = 0; f < n; ++f)
      if (!is_pure(A, finite_ideal_from_mask(A, ann[f])).pure) {
        w4 = {{"f", f}};
        break;
      }
  } else {
    const auto sample = detail::element_sample(A);
    std::vector<Ideal> anns;
    for (const auto& f : sample) anns.push_back(annihilator(A, f));
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = 0; j < sample.size(); ++j) {
        const Element fg = A.mul(sample[i], sample[j]);
        const Ideal s = ideal_sum(A, anns[i], anns[j]);
        if (w2.is_null() && A.is_zero(fg) && !s.is_whole()) w2 = pair_json(A, sample[i], sample[j]);
        if (w3.is_null() && !(s == annihilator(A, fg))) w3 = pair_json(A, sample[i], sample[j]);
      }
    for (std::size_t i = 0; i < sample.size(); ++i)
      if (!is_pure(A, anns[i]).pure) {
        w4 = {{"f", elem(A, sample[i])}};
        break;
      }
  }
  m.add("ii", w2.is_null(), w2);
  m.add("iii", w3.is_null(), w3);
  m.add("iv", w4.is_null(), w4);
  m.not_applicable("v", "represented by (iv): principal ideals are flat exactly when annihilators are pure");
  {
    json w = nullptr;
    for (std::size_t p = 0; p < c.spec.points.size(); ++p)
      if (auto z = detail::localization_domain_obstruction(A, p)) {
        w = {{"prime", pt(A, p)}, {"a", z->first}, {"b", z->second}};
        break;
      }
    m.add("vi", w.is_null(), w);
  }
  {
    json w = nullptr;
    for (auto mx : c.maxs)
      if (auto z = detail::localization_domain_obstruction(A, mx)) {
        w = {{"maximal", pt(A, mx)}, {"a", z->first}, {"b", z->second}};
        break;
      }
    m.add("vii", w.is_null(), w);
  }
  return m;
}

namespace {

// Distinct minimal primes separated by complementary idempotents.
json purified_def_obstruction(const Ring& A) {
  const auto& spec = A.spectrum();
  const auto mins = spec.minimal_ids();
  for (auto [a, b] : distinct_pairs(mins))
    if (!separating_idempotent(A, spec.points[a].ideal, spec.points[b].ideal)) return points_json(A, {a, b});
  return nullptr;
}

}  // namespace

CriteriaMatrix criteria_purified(const Ring& A) {
  if (A.is_zero_ring()) return zero_ring_matrix("purified");
  Ctx c(A);
  CriteriaMatrix m;
  m.theorem = "purified";
  {
    const json w = purified_def_obstruction(A);
    m.add("def", w.is_null(), w);
  }
  {
    const Ring B = reduced_quotient(A);
    const json w = purified_def_obstruction(B);
    m.add("def-reduced", w.is_null(), w);
  }
  const bool red = reduced(A);
  const char* note = "A is not reduced";
  const std::vector<std::string> reduced_only = {"ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi"};
  if (!red) {
    for (const auto& id : reduced_only) m.not_applicable(id, note);
    return m;
  }
  const auto idem = A.idempotents();
  const auto sample = detail::element_sample(A);
  const bool mp_def = !two_extremal(c.X, false);
  m.add("ii", mp_def && totally_disconnected(c.X.subspace(c.min_set()), Topology::flat));
  {
    json w = nullptr;
    for (auto mn : c.mins)
      if (!is_regular(A, c.spec.points[mn].ideal).regular) {
        w = pt(A, mn);
        break;
      }
    m.add("iii", w.is_null(), w);
  }
  {
    auto comps = connected_components(c.X);
    std::vector<PointSet> cones;
    for (auto mn : c.mins) cones.push_back(c.X.up(mn));
    std::sort(comps.begin(), comps.end());
    std::sort(cones.begin(), cones.end());
    m.add("iv", comps == cones);
  }
  m.not_applicable("v", "exercised by the minimal-prime gluing property");
  {
    auto w = detail::localization_lifting_obstruction(A);
    m.add("vi", !w, w ? *w : json());
  }
  {
    std::vector<PointSet> basis;
    for (const auto& e : idem) {
      PointSet v = 0;
      for (auto mn : c.mins)
        if (c.spec.points[mn].ideal.contains(e)) v |= bit(mn);
      basis.push_back(v);
    }
    m.add("vii", is_basis(c.X, c.min_set(), basis, Topology::flat));
  }
  const auto family = detail::ideal_family(A);
  if (!family) {
    m.not_applicable("viii", kCapNote);
  } else {
    const auto bad = pure_not_regular(A, *family);
    m.add("viii", mp_def && !bad, bad ? ideal_to_json(A, bad->front()) : json());
  }
  {
    auto regs = max_regular_ideals(A);
    std::vector<Ideal> minp;
    for (auto mn : c.mins) minp.push_back(c.spec.points[mn].ideal);
    bool same = regs.size() == minp.size();
    for (const auto& I : regs) same = same && std::find(minp.begin(), minp.end(), I) != minp.end();
    m.add("ix", same);
  }
  {
    json w = nullptr;
    for (const auto& f : sample)
      if (!is_regular(A, annihilator(A, f)).regular) {
        w = {{"f", elem(A, f)}};
        break;
      }
    m.add("x", w.is_null(), w);
  }
  {
    json fail = nullptr;
    json shown = nullptr;
    for (const auto& f : sample) {
      for (const auto& g : sample) {
        if (!A.is_zero(A.mul(f, g))) continue;
        std::optional<Element> found;
        for (const auto& e : idem)
          if (A.mul(f, e) == f && A.mul(g, A.sub(A.one(), e)) == g) {
            found = e;
            break;
          }
        if (!found) {
          fail = pair_json(A, f, g);
          break;
        }
        if (shown.is_null() && !A.is_zero(f) && !A.is_zero(g)) {
          shown = pair_json(A, f, g);
          shown["e"] = elem(A, *found);
        }
      }
      if (!fail.is_null()) break;
    }
    m.add("xi", fail.is_null(), fail.is_null() ? shown : fail);
  }
  return m;
}

std::optional<Element> pp_obstruction(const Ring& A) {
  for (const auto& f : detail::element_sample(A)) {
    const Ideal I = annihilator(A, f);
    const auto r = is_regular(A, I);
    if (!r.regular || !(ideal_generate(A, {*r.generator}) == I)) return f;
  }
  return std::nullopt;
}

}  // namespace ringlab
