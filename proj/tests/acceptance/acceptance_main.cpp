// Acceptance checks, one PASS/FAIL line per criterion. Every check is exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/topology.hpp"
#include "ringlab/verify.hpp"

using namespace ringlab;

namespace {

using Clock = std::chrono::steady_clock;

// Pinned thresholds.
constexpr double kZeroDimSeconds = 120.0;
constexpr double kPosetSeconds = 60.0;
constexpr std::size_t kPosetPoints = 5;
constexpr std::size_t kSmallRing = 36;
constexpr int kSystemsPerRing = 100;
constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << " s";
  return o.str();
}

const CorpusSpec& corpus() {
  static const CorpusSpec c = builtin_corpus();
  return c;
}

const std::vector<RingDescriptor>& finite_descs() {
  static const auto d = finite_descriptors(corpus());
  return d;
}

void for_each_finite(const std::function<void(const Ring&)>& body, std::size_t cap = SIZE_MAX) {
  for (const auto& d : finite_descs()) {
    const Ring A = ring_from_descriptor(d);
    if (*A.size() <= cap) body(A);
  }
}

bool reduced(const Ring& A) { return radicals(A).nilradical.is_zero(); }

bool all_applicable(const CriteriaMatrix& m, Verdict want) {
  for (const auto& r : m.rows)
    if (r.verdict != Verdict::not_applicable && r.verdict != want) return false;
  return true;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t n = 0;
  for_each_finite([&](const Ring& A) {
    ++n;
    const auto m = criteria_zero_dimensional(A);
    if (!m.agrees() || !all_applicable(m, Verdict::yes)) o.fail(A.name());
  });
  const double t = seconds_since(t0);
  if (t >= kZeroDimSeconds) o.fail("took " + fmt(t));
  o.detail = std::to_string(n) + " finite rings, " + fmt(t);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Ring S = ring_from_descriptor(RingDescriptor::semilocal_int({2, 3}));
  const auto X = S.spectrum().to_space();
  const auto Max = X.subspace(X.maximal());
  if (Max.size() != 2) o.fail("Max has " + std::to_string(Max.size()) + " points");
  if (!separation(Max, Topology::zariski).hausdorff) o.fail("Max is not Hausdorff");
  for (std::size_t i = 0; i < Max.size(); ++i)
    if (!is_open(Max, bit(i), Topology::zariski)) o.fail("Max is not discrete");
  const auto m = criteria_gelfand(S);
  if (!all_applicable(m, Verdict::no)) o.fail("a Gelfand criterion holds");
  const auto* vii = m.find("vii");
  const nlohmann::json three = S.element_to_json(Fraction{3, 1});
  if (!vii || vii->witness != nlohmann::json{{"f", three}}) o.fail("criterion (vii) witness is not f = 3");
  o.detail = "Max discrete on 2 points, " + std::to_string(m.rows.size()) + " Gelfand clauses false, (vii) at f = 3";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<MatrixKind> six = {MatrixKind::zero_dim, MatrixKind::gelfand,    MatrixKind::clean,
                                       MatrixKind::mp,       MatrixKind::reduced_mp, MatrixKind::purified};
  std::size_t rings = 0;
  auto check = [&](const Ring& A) {
    ++rings;
    for (auto k : six) {
      const auto m = criteria(A, k);
      if (auto d = m.disagreement()) o.fail(A.name() + " " + m.theorem + " (" + d->first + ") vs (" + d->second + ")");
    }
  };
  for_each_finite(check);
  for (const auto& d : infinite_descriptors(corpus())) check(ring_from_descriptor(d));
  o.detail = std::to_string(rings) + " rings x 6 matrices";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t count = 0;
  for (std::size_t n = 1; n <= kPosetPoints; ++n)
    for (const auto& X : all_posets(n)) {
      ++count;
      for (const auto& defect : poset_defects(X)) o.fail(space_to_json(X).dump() + ": " + defect);
    }
  const double t = seconds_since(t0);
  if (t >= kPosetSeconds) o.fail("took " + fmt(t));
  if (count != 4473) o.fail("expected 4473 labeled posets, saw " + std::to_string(count));
  o.detail = std::to_string(count) + " posets, " + fmt(t);
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t elements = 0;
  for_each_finite([&](const Ring& A) {
    const auto n = static_cast<Index>(*A.size());
    for (Index f = 0; f < n; ++f) {
      ++elements;
      try {
        const auto d = clean_decompose(A, f);
        if (!A.is_idempotent(d.idempotent) || A.mul(d.unit, *A.inverse(d.unit)) != A.one() ||
            A.add(d.idempotent, d.unit) != Element(f))
          o.fail(A.name() + " clean f=" + std::to_string(f));
        const Element e = exchange_idempotent(A, f);
        if (!A.is_idempotent(e) || !ideal_generate(A, {f}).contains(e) ||
            !ideal_generate(A, {A.sub(A.one(), f)}).contains(A.sub(A.one(), e)))
          o.fail(A.name() + " exchange f=" + std::to_string(f));
      } catch (const std::exception& ex) {
        o.fail(A.name() + " f=" + std::to_string(f) + ": " + ex.what());
      }
    }
  });
  o.detail = std::to_string(elements) + " elements";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t rings = 0, systems = 0, solvable = 0;
  std::mt19937_64 rng(kSeed);
  for_each_finite(
      [&](const Ring& A) {
        ++rings;
        for (int k = 0; k < kSystemsPerRing; ++k) {
          ++systems;
          const auto sys = random_system(A, rng, 2, 3, 2);
          const auto brute = brute_force_solve(sys);
          const auto lg = solve_local_global(A, sys);
          if (brute.has_value() != lg.solution.has_value()) o.fail(A.name() + " " + system_to_json(sys).dump());
          if (lg.solution && !satisfies(sys, *lg.solution)) o.fail(A.name() + " unverified solution");
          solvable += brute.has_value();
        }
      },
      kSmallRing);
  if (rings == 0) o.fail("no rings");
  o.detail = std::to_string(rings) + " rings, " + std::to_string(systems) + " systems (" + std::to_string(solvable) +
             " solvable), seed " + std::to_string(kSeed);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t rings = 0, pure_count = 0;
  for_each_finite(
      [&](const Ring& A) {
        ++rings;
        const auto& spec = A.spectrum();
        for (const auto& I : enumerate_ideals(A)) {
          const bool pure = is_pure(A, I).pure, regular = is_regular(A, I).regular;
          if (pure != regular) o.fail(A.name() + " " + ideal_label(A, I));
          if (!pure) continue;
          ++pure_count;
          Ideal meet = whole_ideal(A);
          for (auto m : spec.maximal_ids())
            if (ideal_subset(I, spec.points[m].ideal)) meet = ideal_intersect(A, meet, ker_pi(A, m));
          if (!(meet == I)) o.fail(A.name() + " kernel formula at " + ideal_label(A, I));
        }
      },
      kSmallRing);
  o.detail = std::to_string(rings) + " rings, " + std::to_string(pure_count) + " pure ideals";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t rings = 0, lifts = 0;
  auto value = [](const CriteriaMatrix& m) { return m.agrees() ? m.consensus() : std::nullopt; };
  for_each_finite([&](const Ring& A) {
    const Ideal N = radicals(A).nilradical;
    if (N.is_zero()) return;
    ++rings;
    const auto q = quotient_ring(A, N);
    const Ring& B = q.ring;
    std::vector<Index> pre(*B.size(), static_cast<Index>(-1));
    for (Index a = 0; a < *A.size(); ++a)
      if (pre[q.map(a)] == static_cast<Index>(-1)) pre[q.map(a)] = a;
    for (const auto& e : B.idempotents()) {
      ++lifts;
      const auto r = lift_idempotent(A, N, Element(pre[e.index()]));
      if (!r.newton || r.steps > r.step_bound || !A.is_idempotent(r.idempotent) || q.map(r.idempotent) != e)
        o.fail(A.name() + " lift of " + std::to_string(e.index()));
    }
    const auto ca = value(criteria_clean(A)), cb = value(criteria_clean(B));
    const auto pa = value(criteria_purified(A)), pb = value(criteria_purified(B));
    if (!ca || !cb || *ca != *cb) o.fail(A.name() + " clean(A) vs clean(A/N)");
    if (!pa || !pb || *pa != *pb) o.fail(A.name() + " purified(A) vs purified(A/N)");
  });
  o.detail = std::to_string(rings) + " non-reduced rings, " + std::to_string(lifts) + " Newton lifts";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t rings = 0;
  for_each_finite([&](const Ring& A) {
    if (!reduced(A)) return;
    ++rings;
    const auto& R = A.finite();
    const std::size_t n = R.size();
    std::vector<boost::dynamic_bitset<>> ann(n, boost::dynamic_bitset<>(n));
    for (Index f = 0; f < n; ++f)
      for (Index g = 0; g < n; ++g)
        if (R.mul(f, g) == 0) ann[f].set(g);
    // Ann(f), Ann(g) lie in Ann(fg); equality is a cardinality check on |I + J| = |I||J| / |I meet J|
    for (Index f = 0; f < n; ++f)
      for (Index g = 0; g < n; ++g) {
        const auto& fg = ann[R.mul(f, g)];
        const std::size_t sum = ann[f].count() * ann[g].count() / (ann[f] & ann[g]).count();
        if (!ann[f].is_subset_of(fg) || !ann[g].is_subset_of(fg) || sum != fg.count()) {
          o.fail(A.name() + " (" + std::to_string(f) + "," + std::to_string(g) + ")");
          return;
        }
      }
  });
  const auto m = criteria_reduced_mp(ring_from_descriptor(RingDescriptor::quotient_int(4)));
  const nlohmann::json w = {{"f", 2}, {"g", 2}};
  if (m.consensus() != std::optional<bool>(false)) o.fail("Z/4 reported p.f.");
  if (m.find("ii")->witness != w || m.find("iii")->witness != w) o.fail("Z/4 witness is not (2,2)");
  o.detail = std::to_string(rings) + " reduced rings; Z/4 non-p.f. at (2,2)";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t rings = 0;
  for_each_finite([&](const Ring& A) {
    ++rings;
    const auto d = crt_decomposition(A);
    if (auto defect = crt_defect(A, d)) o.fail(A.name() + ": " + *defect);
  });
  o.detail = std::to_string(rings) + " rings, maps checked exhaustively";
  return o;
}

Outcome criterion11() {
  Outcome o;
  std::size_t rings = 0, pairs = 0;
  for_each_finite([&](const Ring& A) {
    if (!reduced(A)) return;
    ++rings;
    const auto& R = A.finite();
    for (Index f = 1; f < R.size(); ++f)
      for (Index g = 1; g < R.size(); ++g) {
        if (R.mul(f, g) != 0) continue;
        ++pairs;
        const auto e = purify_witness(A, f, g);
        if (!e || !A.is_idempotent(*e) || A.mul(f, *e) != Element(f) || A.mul(g, A.sub(A.one(), *e)) != Element(g))
          o.fail(A.name() + " (" + std::to_string(f) + "," + std::to_string(g) + ")");
      }
  });
  if (purify_witness(ring_from_descriptor(RingDescriptor::quotient_int(4)), Index{2}, Index{2}))
    o.fail("Z/4 (2,2) has a witness");
  o.detail = std::to_string(rings) + " reduced rings, " + std::to_string(pairs) + " zero-divisor pairs; Z/4 (2,2) fails";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"zero-dimensional suite", criterion1},
      {"semilocal counterexample", criterion2},
      {"theorem-agreement matrices", criterion3},
      {"poset sweep", criterion4},
      {"clean decomposition totality", criterion5},
      {"gluing vs brute force", criterion6},
      {"pure equals regular", criterion7},
      {"lifting and nilradical transfer", criterion8},
      {"annihilator identities", criterion9},
      {"CRT isomorphism", criterion10},
      {"element-wise purified", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail;
    if (!o.pass) std::cout << "; first failure: " << o.first_failure;
    std::cout << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
