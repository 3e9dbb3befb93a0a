#include "criteria_support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "ringlab/error.hpp"

namespace ringlab::detail {

nlohmann::json elem(const Ring& A, const Element& e) { return A.element_to_json(e); }

nlohmann::json pt(const Ring& A, std::size_t id) { return A.spectrum().points.at(id).label; }

namespace {

// Cartesian product of per-factor lists, first factor most significant.
template <typename T, typename Join>
std::vector<T> cartesian(const std::vector<std::vector<T>>& lists, Join join) {
  std::vector<T> out;
  std::vector<std::size_t> pos(lists.size(), 0);
  for (const auto& l : lists)
    if (l.empty()) return out;
  while (true) {
    std::vector<T> pick;
    for (std::size_t i = 0; i < lists.size(); ++i) pick.push_back(lists[i][pos[i]]);
    out.push_back(join(std::move(pick)));
    std::size_t k = lists.size();
    while (k > 0) {
      --k;
      if (++pos[k] < lists[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
    if (lists.empty()) return out;
  }
}

const SpecPoint& point(const Ring& A, std::size_t id) { return A.spectrum().points.at(id); }

}  // namespace

std::vector<Bitset> annihilator_rows(const FiniteRing& R) {
  const std::size_t n = R.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (Index f = 0; f < n; ++f)
    for (Index a = f; a < n; ++a)
      if (R.mul(f, a) == 0) {
        rows[f].set(a);
        rows[a].set(f);
      }
  return rows;
}

std::vector<Element> element_sample(const Ring& A) {
  std::vector<Element> out;
  switch (A.family()) {
    case Ring::Family::finite:
      for (Index a = 0; a < A.finite().size(); ++a) out.emplace_back(a);
      return out;
    case Ring::Family::semilocal:
      for (std::int64_t k = 0; k <= A.semilocal().radical(); ++k) out.push_back(A.from_int(k));
      return out;
    case Ring::Family::product: {
      std::vector<std::vector<Element>> lists;
      for (const auto& f : A.factors()) lists.push_back(element_sample(f));
      return cartesian(lists, [](std::vector<Element> parts) { return Element(std::move(parts)); });
    }
  }
  return out;
}

std::optional<std::vector<Ideal>> ideal_family(const Ring& A) {
  switch (A.family()) {
    case Ring::Family::finite:
      if (A.finite().size() > A.limits().ideal_enum) return std::nullopt;
      return enumerate_ideals(A);
    case Ring::Family::semilocal: {
      std::vector<Ideal> out{zero_ideal(A)};
      const auto& P = A.semilocal().primes();
      for (std::size_t mask = 0; mask < (std::size_t{1} << P.size()); ++mask) {
        std::int64_t d = 1;
        for (std::size_t i = 0; i < P.size(); ++i)
          if ((mask >> i) & 1U) d *= P[i];
        out.push_back(ideal_generate(A, {A.from_int(d)}));
      }
      return out;
    }
    case Ring::Family::product: {
      std::vector<std::vector<Ideal>> lists;
      for (const auto& f : A.factors()) {
        auto fam = ideal_family(f);
        if (!fam) return std::nullopt;
        lists.push_back(std::move(*fam));
      }
      return cartesian(lists, [&](std::vector<Ideal> parts) {
        Ideal I;
        I.rep = Ideal::Product{std::move(parts)};
        I.gens = ideal_generators(A, I);
        return I;
      });
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> zero_product_witness(const Ring& A, std::size_t p, std::size_t q) {
  const auto& P = point(A, p);
  const auto& Q = point(A, q);
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& pm = P.ideal.finite().mask;
      const auto& qm = Q.ideal.finite().mask;
      for (Index f = 0; f < R.size(); ++f) {
        if (pm.test(f)) continue;
        for (Index g = 0; g < R.size(); ++g)
          if (!qm.test(g) && R.mul(f, g) == 0) return std::make_pair(Element(f), Element(g));
      }
      return std::nullopt;
    }
    case Ring::Family::semilocal:
      // a domain: fg = 0 forces a zero factor, and 0 lies in every prime
      return std::nullopt;
    case Ring::Family::product: {
      if (P.factor != Q.factor) {
        const Element one_p = A.factors()[P.factor].one();
        const Element one_q = A.factors()[Q.factor].one();
        return std::make_pair(A.embed(P.factor, one_p), A.embed(Q.factor, one_q));
      }
      auto w = zero_product_witness(A.factors()[P.factor], P.local_id, Q.local_id);
      if (!w) return std::nullopt;
      return std::make_pair(A.embed(P.factor, w->first), A.embed(P.factor, w->second));
    }
  }
  return std::nullopt;
}

std::optional<Element> localization_obstruction(const Ring& A, std::size_t p) {
  const auto& P = point(A, p);
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const Ideal K = ker_pi(A, p);
      const auto& km = K.finite().mask;
      for (Index s = 0; s < R.size(); ++s) {
        if (P.ideal.finite().mask.test(s)) continue;
        bool found = false;
        for (Index b = 0; b < R.size() && !found; ++b) found = km.test(R.sub(R.one(), R.mul(b, s)));
        if (!found) return Element(s);
      }
      return std::nullopt;
    }
    case Ring::Family::semilocal: {
      // Ker pi_p = 0, so s must already be a unit
      for (const auto& s : element_sample(A))
        if (!P.ideal.contains(s) && !A.is_unit(s)) return s;
      return std::nullopt;
    }
    case Ring::Family::product: {
      auto w = localization_obstruction(A.factors()[P.factor], P.local_id);
      if (!w) return std::nullopt;
      return A.embed(P.factor, *w);
    }
  }
  return std::nullopt;
}

std::optional<Element> absolutely_flat_obstruction(const Ring& A) {
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto q = quotient_ring(A, radicals(A).nilradical);
      const auto& B = q.ring.finite();
      std::vector<bool> ok(B.size(), false);
      for (Index f = 0; f < B.size(); ++f) {
        const Index f2 = B.mul(f, f);
        for (Index g = 0; g < B.size() && !ok[f]; ++g) ok[f] = B.mul(f2, g) == f;
      }
      // report the smallest element of A over a failing residue
      for (Index a = 0; a < A.finite().size(); ++a)
        if (!ok[q.map(a)]) return Element(a);
      return std::nullopt;
    }
    case Ring::Family::semilocal: {
      // reduced domain: f = f^2 g needs f = 0 or f a unit
      for (const auto& f : element_sample(A))
        if (!A.is_zero(f) && !A.is_unit(f)) return f;
      return std::nullopt;
    }
    case Ring::Family::product:
      for (std::size_t k = 0; k < A.factors().size(); ++k)
        if (auto w = absolutely_flat_obstruction(A.factors()[k])) return A.embed(k, *w);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Element> gelfand_identity_obstruction(const Ring& A) {
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const std::size_t n = R.size();
      const auto ann = annihilator_rows(R);
      for (Index f = 0; f < n; ++f) {
        const Index fp = R.sub(R.one(), f);
        Bitset V(n);
        for (Index h = 0; h < n; ++h) V.set(R.add(R.one(), R.mul(fp, h)));
        Bitset U(n);
        for (Index g = 0; g < n; ++g) U.set(R.add(R.one(), R.mul(f, g)));
        bool found = false;
        for (auto u = U.find_first(); u != Bitset::npos && !found; u = U.find_next(u)) found = ann[u].intersects(V);
        if (!found) return Element(f);
      }
      return std::nullopt;
    }
    case Ring::Family::semilocal: {
      // in a domain one factor must vanish: 1 + fg = 0 iff f is a unit
      for (const auto& f : element_sample(A))
        if (!A.is_unit(f) && !A.is_unit(A.sub(A.one(), f))) return f;
      return std::nullopt;
    }
    case Ring::Family::product:
      for (std::size_t k = 0; k < A.factors().size(); ++k)
        if (auto w = gelfand_identity_obstruction(A.factors()[k])) return A.embed(k, *w);
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Element> complementary_kernel_element(const Ring& A, std::size_t m, std::size_t n) {
  const auto& M = point(A, m);
  const auto& N = point(A, n);
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const Ideal km = ker_pi(A, m);
      const Ideal kn = ker_pi(A, n);
      for (Index f : km.finite().elements)
        if (kn.finite().mask.test(R.sub(R.one(), f))) return Element(f);
      return std::nullopt;
    }
    case Ring::Family::semilocal: {
      // both kernels are zero, so f = 0 and 1 - f = 1 is the only candidate
      const Ideal kn = ker_pi(A, n);
      if (kn.contains(A.one())) return A.zero();
      return std::nullopt;
    }
    case Ring::Family::product: {
      if (M.factor != N.factor) return A.embed(N.factor, A.factors()[N.factor].one());
      auto w = complementary_kernel_element(A.factors()[M.factor], M.local_id, N.local_id);
      if (!w) return std::nullopt;
      return A.embed(M.factor, *w);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<nlohmann::json, nlohmann::json>> localization_domain_obstruction(const Ring& A,
                                                                                           std::size_t p) {
  const auto& P = point(A, p);
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto loc = localize(A, p);
      const auto& B = loc.ring.finite();
      if (B.size() <= 1) return std::make_pair(nlohmann::json(nullptr), nlohmann::json(nullptr));
      for (Index a = 1; a < B.size(); ++a)
        for (Index b = a; b < B.size(); ++b)
          if (B.mul(a, b) == 0) return std::make_pair(nlohmann::json(a), nlohmann::json(b));
      return std::nullopt;
    }
    case Ring::Family::semilocal:
      // localizations of a domain are subrings of its fraction field
      return std::nullopt;
    case Ring::Family::product:
      return localization_domain_obstruction(A.factors()[P.factor], P.local_id);
  }
  return std::nullopt;
}

std::optional<nlohmann::json> localization_lifting_obstruction(const Ring& A) {
  switch (A.family()) {
    case Ring::Family::finite: {
      const auto& R = A.finite();
      const auto& spec = A.spectrum();
      const std::size_t k = spec.points.size();
      if (k > 16) throw Error(ErrorKind::size_cap, "too many primes to enumerate localizations");
      for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        // S = complement of the union of the chosen primes; S^-1 A = A / K_S
        Bitset uni(R.size());
        for (std::size_t i = 0; i < k; ++i)
          if ((mask >> i) & 1U) uni |= spec.points[i].ideal.finite().mask;
        Bitset K(R.size());
        for (Index s = 0; s < R.size(); ++s) {
          if (uni.test(s)) continue;
          for (Index f = 0; f < R.size(); ++f)
            if (R.mul(f, s) == 0) K.set(f);
        }
        const auto q = quotient_ring(A, finite_ideal_from_mask(A, K));
        std::vector<bool> hit(q.ring.finite().size(), false);
        for (Index e : R.idempotents()) hit[q.map(e)] = true;
        for (Index e : q.ring.finite().idempotents())
          if (!hit[e]) {
            nlohmann::json primes = nlohmann::json::array();
            for (std::size_t i = 0; i < k; ++i)
              if ((mask >> i) & 1U) primes.push_back(spec.points[i].label);
            return nlohmann::json{{"primes", primes}, {"idempotent", e}};
          }
      }
      return std::nullopt;
    }
    case Ring::Family::semilocal: {
      // every localization is a domain: its idempotents 0 and 1 come from A
      return std::nullopt;
    }
    case Ring::Family::product:
      for (std::size_t k = 0; k < A.factors().size(); ++k)
        if (auto w = localization_lifting_obstruction(A.factors()[k])) {
          (*w)["factor"] = k;
          return w;
        }
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<PointSet> ring_r_classes(const Ring& A) {
  const auto& spec = A.spectrum();
  const std::size_t n = spec.points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ideal_sum(A, spec.points[i].ideal, spec.points[j].ideal).is_whole()) parent[find(i)] = find(j);
  std::map<std::size_t, PointSet> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)] |= bit(i);
  std::vector<PointSet> out;
  for (auto& [r, s] : groups) out.push_back(s);
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

}  // namespace ringlab::detail
