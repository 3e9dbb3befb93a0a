#include "ringlab/topology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "ringlab/error.hpp"

namespace ringlab {

std::vector<std::size_t> members(PointSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

SpectralSpace SpectralSpace::from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& le) {
  const std::size_t n = labels.size();
  if (n > kMaxPoints) throw Error(ErrorKind::size_cap, "spaces are limited to 64 points");
  SpectralSpace X;
  X.labels_ = std::move(labels);
  X.up_.assign(n, 0);
  X.down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j]) {
        X.up_[i] |= bit(j);
        X.down_[j] |= bit(i);
      }
  return X;
}

SpectralSpace SpectralSpace::from_pairs(std::vector<std::string> labels,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = labels.size();
  if (n > kMaxPoints) throw Error(ErrorKind::size_cap, "spaces are limited to 64 points");
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::input, "order pair refers to an unknown point");
    le[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (le[i][j] && le[j][i])
        throw Error(ErrorKind::input, "order is not antisymmetric: " + labels[i] + " and " + labels[j] +
                                          " are below each other");
  return from_order(std::move(labels), le);
}

PointSet SpectralSpace::up_closure(PointSet s) const {
  PointSet out = 0;
  for (auto i : members(s)) out |= up_[i];
  return out;
}

PointSet SpectralSpace::down_closure(PointSet s) const {
  PointSet out = 0;
  for (auto i : members(s)) out |= down_[i];
  return out;
}

PointSet SpectralSpace::maximal() const {
  PointSet out = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (up_[i] == bit(i)) out |= bit(i);
  return out;
}

PointSet SpectralSpace::minimal() const {
  PointSet out = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (down_[i] == bit(i)) out |= bit(i);
  return out;
}

bool SpectralSpace::is_antichain() const { return maximal() == all(); }

SpectralSpace SpectralSpace::dual() const {
  SpectralSpace X;
  X.labels_ = labels_;
  X.up_ = down_;
  X.down_ = up_;
  return X;
}

SpectralSpace SpectralSpace::subspace(PointSet s) const {
  const auto idx = members(s);
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> order(idx.size(), std::vector<bool>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    labels.push_back(labels_[idx[a]]);
    for (std::size_t b = 0; b < idx.size(); ++b) order[a][b] = le(idx[a], idx[b]);
  }
  return from_order(std::move(labels), order);
}

std::vector<std::pair<std::size_t, std::size_t>> SpectralSpace::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !le(i, j)) continue;
      const PointSet between = (up_[i] & down_[j]) & ~(bit(i) | bit(j));
      if (between == 0) out.emplace_back(i, j);
    }
  return out;
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::zariski: return "zariski";
    case Topology::flat: return "flat";
    case Topology::patch: return "patch";
  }
  return "?";
}

Topology parse_topology(const std::string& s) {
  if (s == "zariski") return Topology::zariski;
  if (s == "flat") return Topology::flat;
  if (s == "patch") return Topology::patch;
  throw Error(ErrorKind::input, "unknown topology '" + s + "'");
}

bool is_open(const SpectralSpace& X, PointSet s, Topology t) {
  switch (t) {
    case Topology::zariski: return X.down_closure(s) == s;
    case Topology::flat: return X.up_closure(s) == s;
    case Topology::patch: return true;
  }
  return false;
}

bool is_closed(const SpectralSpace& X, PointSet s, Topology t) { return is_open(X, X.all() & ~s, t); }

PointSet closure(const SpectralSpace& X, std::size_t point, Topology t) {
  switch (t) {
    case Topology::zariski: return X.up(point);
    case Topology::flat: return X.down(point);
    case Topology::patch: return bit(point);
  }
  return 0;
}

PointSet closure_of(const SpectralSpace& X, PointSet s, Topology t) {
  PointSet out = 0;
  for (auto i : members(s)) out |= closure(X, i, t);
  return out;
}

PointSet neighbourhood(const SpectralSpace& X, std::size_t point, Topology t) {
  switch (t) {
    case Topology::zariski: return X.down(point);
    case Topology::flat: return X.up(point);
    case Topology::patch: return bit(point);
  }
  return 0;
}

PointSet neighbourhood_of(const SpectralSpace& X, PointSet s, Topology t) {
  PointSet out = 0;
  for (auto i : members(s)) out |= neighbourhood(X, i, t);
  return out;
}

std::vector<PointSet> open_sets(const SpectralSpace& X, Topology t) {
  if (X.size() > 24) throw Error(ErrorKind::size_cap, "open-set enumeration needs at most 24 points");
  std::vector<PointSet> out;
  for (PointSet s = 0; s <= X.all(); ++s)
    if (is_open(X, s, t)) out.push_back(s);
  return out;
}

Separation separation(const SpectralSpace& X, Topology t) {
  Separation out;
  const std::size_t n = X.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      // smallest neighbourhoods decide separability on a finite space
      const bool overlap = (neighbourhood(X, x, t) & neighbourhood(X, y, t)) != 0;
      if (overlap && out.hausdorff) {
        out.hausdorff = false;
        out.hausdorff_witness = {x, y};
      }
      if (overlap && (closure(X, x, t) & closure(X, y, t)) == 0 && out.normal) {
        out.normal = false;
        out.normal_witness = {x, y};
      }
    }
  return out;
}

namespace {

std::vector<PointSet> classes_of(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& related) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (related(i, j)) parent[find(i)] = find(j);
  std::map<std::size_t, PointSet> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)] |= bit(i);
  std::vector<PointSet> out;
  for (auto& [root, s] : groups) out.push_back(s);
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

}  // namespace

std::vector<PointSet> connected_components(const SpectralSpace& X) {
  return classes_of(X.size(), [&](std::size_t i, std::size_t j) { return X.le(i, j) || X.le(j, i); });
}

bool totally_disconnected(const SpectralSpace& X, Topology t) {
  if (t == Topology::patch) return true;
  const auto comps = connected_components(X);
  return std::all_of(comps.begin(), comps.end(), [](PointSet c) { return std::popcount(c) == 1; });
}

bool is_continuous(const SpectralSpace& X, Topology tx, const SpectralSpace& Y, Topology ty,
                   const std::vector<std::size_t>& map) {
  if (map.size() != X.size()) throw Error(ErrorKind::precondition, "map size differs from the domain size");
  // preimages of the basic opens of Y must be open
  for (std::size_t y = 0; y < Y.size(); ++y) {
    const PointSet basic = neighbourhood(Y, y, ty);
    PointSet pre = 0;
    for (std::size_t x = 0; x < X.size(); ++x)
      if (has(basic, map[x])) pre |= bit(x);
    if (!is_open(X, pre, tx)) return false;
  }
  return true;
}

namespace {

PointSet target_set(const SpectralSpace& X, RetractTarget target) {
  return target == RetractTarget::max ? X.maximal() : X.minimal();
}

Topology target_topology(RetractTarget target) {
  return target == RetractTarget::max ? Topology::zariski : Topology::flat;
}

// subspace index of each member of s
std::vector<std::size_t> positions(std::size_t n, PointSet s) {
  std::vector<std::size_t> pos(n, static_cast<std::size_t>(-1));
  std::size_t k = 0;
  for (auto i : members(s)) pos[i] = k++;
  return pos;
}

}  // namespace

Retraction retraction(const SpectralSpace& X, RetractTarget target) {
  Retraction out;
  const PointSet T = target_set(X, target);
  std::vector<std::size_t> map(X.size());
  for (std::size_t p = 0; p < X.size(); ++p) {
    const PointSet cands = (target == RetractTarget::max ? X.up(p) : X.down(p)) & T;
    const auto m = members(cands);
    if (m.size() != 1) {
      out.witness = std::array<std::size_t, 3>{p, m.at(0), m.at(1)};
      return out;
    }
    map[p] = m[0];
  }
  const auto pos = positions(X.size(), T);
  std::vector<std::size_t> into(X.size());
  for (std::size_t p = 0; p < X.size(); ++p) into[p] = pos[map[p]];
  const Topology t = target_topology(target);
  out.continuous = is_continuous(X, t, X.subspace(T), t, into);
  out.map = std::move(map);
  return out;
}

std::size_t count_retractions(const SpectralSpace& X, RetractTarget target) {
  const PointSet T = target_set(X, target);
  const auto tm = members(T);
  const auto pos = positions(X.size(), T);
  std::vector<std::size_t> free;
  for (std::size_t p = 0; p < X.size(); ++p)
    if (!has(T, p)) free.push_back(p);
  double total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) total *= static_cast<double>(tm.size());
  if (total > 1e6) throw Error(ErrorKind::size_cap, "too many candidate retractions to enumerate");
  const Topology t = target_topology(target);
  const SpectralSpace sub = X.subspace(T);
  std::vector<std::size_t> map(X.size());
  for (auto p : tm) map[p] = pos[p];
  std::vector<std::size_t> choice(free.size(), 0);
  std::size_t count = 0;
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) map[free[i]] = choice[i];
    if (is_continuous(X, t, sub, t, map)) ++count;
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == tm.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return count;
}

SpectralSpace hochster_dual(const SpectralSpace& X) { return X.dual(); }

std::vector<PointSet> r_classes(const SpectralSpace& X) {
  return classes_of(X.size(), [&](std::size_t i, std::size_t j) { return (X.up(i) & X.up(j)) != 0; });
}

std::vector<PointSet> s_classes(const SpectralSpace& X) {
  return classes_of(X.size(), [&](std::size_t i, std::size_t j) { return (X.down(i) & X.down(j)) != 0; });
}

bool class_map_homeomorphism(const SpectralSpace& X, PointSet domain, const std::vector<PointSet>& classes,
                             Topology t) {
  const auto dom = members(domain);
  if (dom.size() != classes.size()) return false;
  // eta[k] = class of the k-th domain point; must be a bijection
  std::vector<std::size_t> eta(dom.size());
  PointSet hit = 0;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (has(classes[c], dom[k])) eta[k] = c;
    if (has(hit, eta[k])) return false;
    hit |= bit(eta[k]);
  }
  if (classes.size() > 20) throw Error(ErrorKind::size_cap, "quotient topology enumeration needs at most 20 classes");
  const SpectralSpace sub = X.subspace(domain);
  for (PointSet q = 0; q < bit(classes.size()); ++q) {
    PointSet preimage_in_x = 0;
    PointSet preimage_in_domain = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (has(q, c)) preimage_in_x |= classes[c];
    for (std::size_t k = 0; k < dom.size(); ++k)
      if (has(q, eta[k])) preimage_in_domain |= bit(k);
    // q open in the quotient  <=>  its preimage under eta open in the subspace
    if (is_open(X, preimage_in_x, t) != is_open(sub, preimage_in_domain, t)) return false;
  }
  return true;
}

namespace {

nlohmann::json names(const SpectralSpace& X, std::initializer_list<std::size_t> pts) {
  nlohmann::json j = nlohmann::json::array();
  for (auto p : pts) j.push_back(X.label(p));
  return j;
}

nlohmann::json names(const SpectralSpace& X, PointSet s) {
  nlohmann::json j = nlohmann::json::array();
  for (auto p : members(s)) j.push_back(X.label(p));
  return j;
}

// First point lying under (over) two extremal points, or nullopt.
std::optional<std::array<std::size_t, 3>> two_extremal(const SpectralSpace& X, bool above) {
  const PointSet T = above ? X.maximal() : X.minimal();
  for (std::size_t p = 0; p < X.size(); ++p) {
    const auto m = members((above ? X.up(p) : X.down(p)) & T);
    if (m.size() >= 2) return std::array<std::size_t, 3>{p, m[0], m[1]};
  }
  return std::nullopt;
}

const PointSet* class_containing(const std::vector<PointSet>& classes, std::size_t p) {
  for (const auto& c : classes)
    if (has(c, p)) return &c;
  return nullptr;
}

}  // namespace

SpaceClassification classify_space(const SpectralSpace& X) {
  SpaceClassification out;
  const auto rc = r_classes(X);
  const PointSet max = X.maximal();
  const PointSet min = X.minimal();

  auto& g = out.gelfand;
  g.theorem = "gelfand";
  {
    const auto w = two_extremal(X, true);
    g.add("i", !w, w ? names(X, {(*w)[0], (*w)[1], (*w)[2]}) : nlohmann::json(nullptr));
  }
  {
    nlohmann::json w = nullptr;
    for (auto m : members(max))
      if (*class_containing(rc, m) != X.down(m)) {
        w = {{"maximal", X.label(m)}, {"class", names(X, *class_containing(rc, m))}};
        break;
      }
    g.add("ii", w.is_null(), w);
  }
  {
    const auto r = retraction(X, RetractTarget::max);
    g.add("v", r.map && r.continuous, r.witness ? names(X, {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]})
                                                : nlohmann::json(nullptr));
  }
  {
    const auto s = separation(X, Topology::zariski);
    g.add("vi", s.normal,
          s.normal_witness ? names(X, {s.normal_witness->first, s.normal_witness->second}) : nlohmann::json(nullptr));
  }
  {
    nlohmann::json w = nullptr;
    for (auto m : members(max))
      if (!is_closed(X, X.down(m), Topology::zariski)) {
        w = X.label(m);
        break;
      }
    g.add("viii", w.is_null(), w);
  }
  g.add("xi", class_map_homeomorphism(X, max, rc, Topology::zariski));

  auto& mp = out.mp;
  mp.theorem = "mp";
  {
    const auto w = two_extremal(X, false);
    mp.add("i", !w, w ? names(X, {(*w)[0], (*w)[1], (*w)[2]}) : nlohmann::json(nullptr));
  }
  {
    nlohmann::json w = nullptr;
    for (auto p : members(min))
      if (*class_containing(rc, p) != X.up(p)) {
        w = {{"minimal", X.label(p)}, {"class", names(X, *class_containing(rc, p))}};
        break;
      }
    mp.add("iv", w.is_null(), w);
  }
  {
    const auto r = retraction(X, RetractTarget::min);
    mp.add("v", r.map && r.continuous, r.witness ? names(X, {(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]})
                                                 : nlohmann::json(nullptr));
  }
  {
    const auto s = separation(X, Topology::flat);
    mp.add("vi", s.normal,
           s.normal_witness ? names(X, {s.normal_witness->first, s.normal_witness->second}) : nlohmann::json(nullptr));
  }
  {
    nlohmann::json w = nullptr;
    for (auto p : members(min))
      if (!is_closed(X, X.up(p), Topology::flat)) {
        w = X.label(p);
        break;
      }
    mp.add("vii", w.is_null(), w);
  }
  mp.add("viii", class_map_homeomorphism(X, min, rc, Topology::flat));

  auto& z = out.zero_dim;
  z.theorem = "zero-dim";
  {
    nlohmann::json w = nullptr;
    for (std::size_t i = 0; i < X.size() && w.is_null(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j)
        if (i != j && X.le(i, j)) {
          w = names(X, {i, j});
          break;
        }
    z.add("i", w.is_null(), w);
  }
  {
    const auto s = separation(X, Topology::zariski);
    z.add("iii", s.hausdorff,
          s.hausdorff_witness ? names(X, {s.hausdorff_witness->first, s.hausdorff_witness->second})
                              : nlohmann::json(nullptr));
  }
  {
    // equal topologies have equal smallest neighbourhoods
    nlohmann::json w = nullptr;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (neighbourhood(X, i, Topology::zariski) != neighbourhood(X, i, Topology::patch)) {
        w = X.label(i);
        break;
      }
    z.add("iv", w.is_null(), w);
  }
  {
    const auto s = separation(X, Topology::flat);
    z.add("v", s.hausdorff,
          s.hausdorff_witness ? names(X, {s.hausdorff_witness->first, s.hausdorff_witness->second})
                              : nlohmann::json(nullptr));
  }
  {
    nlohmann::json w = nullptr;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (neighbourhood(X, i, Topology::zariski) != neighbourhood(X, i, Topology::flat)) {
        w = X.label(i);
        break;
      }
    z.add("vi", w.is_null(), w);
  }
  {
    nlohmann::json w = nullptr;
    for (auto c : s_classes(X))
      if (std::popcount(c) > 1) {
        w = names(X, c);
        break;
      }
    z.add("x", w.is_null(), w);
  }
  return out;
}

SpectralSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw Error(ErrorKind::input, "at /points: expected an array of point labels");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const auto& p = j["points"][i];
    if (!p.is_string()) throw Error(ErrorKind::input, "at /points/" + std::to_string(i) + ": expected a string");
    if (!index.emplace(p.get<std::string>(), i).second)
      throw Error(ErrorKind::input, "at /points/" + std::to_string(i) + ": duplicate label '" + p.get<std::string>() + "'");
    labels.push_back(p.get<std::string>());
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("le")) {
    if (!j["le"].is_array()) throw Error(ErrorKind::input, "at /le: expected an array of pairs");
    for (std::size_t i = 0; i < j["le"].size(); ++i) {
      const auto& e = j["le"][i];
      const std::string path = "at /le/" + std::to_string(i);
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error(ErrorKind::input, path + ": expected a pair of labels");
      auto a = index.find(e[0].get<std::string>());
      auto b = index.find(e[1].get<std::string>());
      if (a == index.end() || b == index.end()) throw Error(ErrorKind::input, path + ": unknown point label");
      pairs.emplace_back(a->second, b->second);
    }
  }
  return SpectralSpace::from_pairs(std::move(labels), pairs);
}

nlohmann::json space_to_json(const SpectralSpace& X) {
  nlohmann::json le = nlohmann::json::array();
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (i != j && X.le(i, j)) le.push_back({X.label(i), X.label(j)});
  return {{"points", X.labels()}, {"le", le}};
}

std::string space_to_dot(const SpectralSpace& X, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < X.size(); ++i) os << "  " << i << " [label=" << nlohmann::json(X.label(i)).dump() << "];\n";
  for (auto [a, b] : X.covers()) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<SpectralSpace> all_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::size_cap, "poset enumeration is limited to 6 points");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<SpectralSpace> out;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  std::vector<PointSet> up(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
    bool ok = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) {
        auto [i, j] = slots[s];
        if ((mask >> (j * (n - 1) + (i < j ? i : i - 1))) & 1U) {
          ok = false;  // both i<j and j<i
          break;
        }
        up[i] |= bit(j);
      }
    if (!ok) continue;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (auto j : members(up[i]))
        if ((up[j] & ~up[i]) != 0) {
          ok = false;
          break;
        }
    if (!ok) continue;
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) le[i][j] = has(up[i], j);
    out.push_back(SpectralSpace::from_order(labels, le));
  }
  return out;
}

}  // namespace ringlab
