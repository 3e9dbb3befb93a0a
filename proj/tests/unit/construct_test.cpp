#include <gtest/gtest.h>

#include "rings.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/error.hpp"
#include "ringlab/spectrum.hpp"

using namespace ringlab;
using fixture::frac;

namespace {

std::vector<Ring> finite_corpus(std::size_t cap) {
  std::vector<Ring> out;
  for (const auto& d : finite_descriptors(builtin_corpus())) {
    Ring A = ring_from_descriptor(d);
    if (*A.size() <= cap) out.push_back(A);
  }
  return out;
}

PolySystem x2_minus(const Ring& A, std::int64_t c) {
  return make_system(A, 1, {Polynomial(A, 1, {{A.one(), {2}}, {A.neg(A.from_int(c)), {0}}})});
}

}  // namespace

TEST(Construct, CleanDecompose) {
  const auto d6 = clean_decompose(fixture::zn(6), Index{2});
  EXPECT_EQ(d6.idempotent, Element(Index{1}));
  EXPECT_EQ(d6.unit, Element(Index{1}));
  const auto d4 = clean_decompose(fixture::zn(4), Index{2});
  EXPECT_EQ(d4.idempotent, Element(Index{1}));
  EXPECT_EQ(d4.unit, Element(Index{1}));
  try {
    clean_decompose(fixture::semi({2, 3}), frac(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_decomposition);
    EXPECT_NE(std::string(e.what()).find("\"num\":3"), std::string::npos) << e.what();
  }
}

TEST(Construct, ExchangeIdempotent) {
  EXPECT_EQ(exchange_idempotent(fixture::zn(6), Index{2}), Element(Index{4}));
  for (std::int64_t n : {4, 6, 12, 30}) {
    EXPECT_EQ(exchange_idempotent(fixture::zn(n), Index{0}), Element(Index{0}));
    EXPECT_EQ(exchange_idempotent(fixture::zn(n), Index{1}), Element(Index{1}));
  }
}

// Property: both decompositions exist and verify on every finite corpus ring up to 100 elements.
TEST(Construct, DecompositionsVerify) {
  for (const auto& A : finite_corpus(100)) {
    const auto n = static_cast<Index>(*A.size());
    for (Index f = 0; f < n; ++f) {
      const auto d = clean_decompose(A, f);
      ASSERT_TRUE(A.is_idempotent(d.idempotent));
      ASSERT_TRUE(A.is_unit(d.unit));
      ASSERT_EQ(A.add(d.idempotent, d.unit), Element(f));
      const Element e = exchange_idempotent(A, f);
      ASSERT_TRUE(A.is_idempotent(e));
      ASSERT_TRUE(ideal_generate(A, {f}).contains(e));
      ASSERT_TRUE(ideal_generate(A, {A.sub(A.one(), f)}).contains(A.sub(A.one(), e)));
    }
  }
}

TEST(Construct, LiftIdempotent) {
  const Ring A12 = fixture::zn(12);
  const auto l12 = lift_idempotent(A12, ideal_generate(A12, {Index{6}}), Index{3});
  EXPECT_EQ(l12.idempotent, Element(Index{9}));
  EXPECT_TRUE(l12.newton);
  const Ring A4 = fixture::zn(4);
  const auto l4 = lift_idempotent(A4, ideal_generate(A4, {Index{2}}), Index{3});
  EXPECT_EQ(l4.idempotent, Element(Index{1}));
  EXPECT_EQ(l4.steps, 1u);
  const auto same = lift_idempotent(A12, zero_ideal(A12), Index{4});
  EXPECT_EQ(same.idempotent, Element(Index{4}));
  EXPECT_EQ(same.steps, 0u);
  EXPECT_THROW(lift_idempotent(A12, zero_ideal(A12), Index{2}), Error);
  // outside the nilradical the scan is used
  const auto scan = lift_idempotent(A12, ideal_generate(A12, {Index{3}}), Index{1});
  EXPECT_FALSE(scan.newton);
}

// Property: Newton keeps the residue class and stops within the stated bound.
TEST(Construct, NewtonInvariants) {
  for (const auto& A : finite_corpus(200)) {
    const Ideal N = radicals(A).nilradical;
    if (N.is_zero()) continue;
    const auto q = quotient_ring(A, N);
    std::vector<Index> lift(q.ring.finite().size(), static_cast<Index>(-1));
    for (Index a = 0; a < A.finite().size(); ++a)
      if (lift[q.map(a)] == static_cast<Index>(-1)) lift[q.map(a)] = a;
    for (const auto& e : q.ring.idempotents()) {
      const auto r = lift_idempotent(A, N, Element(lift[e.index()]));
      ASSERT_TRUE(r.newton);
      ASSERT_LE(r.steps, r.step_bound);
      ASSERT_TRUE(A.is_idempotent(r.idempotent));
      for (const auto& it : r.iterates) ASSERT_TRUE(N.contains(A.sub(it, r.iterates.front()))) << A.name();
    }
  }
}

TEST(Construct, CrtDecomposition) {
  const Ring A12 = fixture::zn(12);
  const auto d = crt_decomposition(A12);
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].size(), std::optional<std::size_t>(4));
  EXPECT_EQ(d.factors[1].size(), std::optional<std::size_t>(3));
  EXPECT_FALSE(crt_defect(A12, d).has_value());
  const auto d6 = crt_decomposition(fixture::zn(6));
  EXPECT_EQ(d6.factors[0].size(), std::optional<std::size_t>(2));
  EXPECT_EQ(d6.factors[1].size(), std::optional<std::size_t>(3));
  const Ring F = fixture::poly(3, {1, 0, 1});
  const auto df = crt_decomposition(F);
  ASSERT_EQ(df.factors.size(), 1u);
  for (Index a = 0; a < 9; ++a) EXPECT_EQ(df.forward[a], a);
  EXPECT_THROW(crt_decomposition(fixture::semi({2})), Error);
}

TEST(Construct, GluingPlans) {
  const Ring A = fixture::zn(6);
  const auto plan = build_gluing_plan(A, GluingMode::max);
  ASSERT_EQ(plan.parts.size(), 2u);
  EXPECT_EQ(plan.parts[0].idempotent, Element(Index{3}));
  EXPECT_EQ(plan.parts[1].idempotent, Element(Index{4}));
  EXPECT_EQ(plan.parts[0].factor.size(), std::optional<std::size_t>(2));
  const auto minp = build_gluing_plan(A, GluingMode::min);
  ASSERT_EQ(minp.parts.size(), 2u);
  EXPECT_EQ(minp.parts[0].idempotent, Element(Index{3}));
  EXPECT_EQ(minp.parts[1].idempotent, Element(Index{4}));
  const auto field = build_gluing_plan(fixture::poly(2, {1, 1, 1}), GluingMode::min);
  ASSERT_EQ(field.parts.size(), 1u);
  EXPECT_EQ(field.parts[0].idempotent, Element(Index{1}));
  EXPECT_THROW(build_gluing_plan(fixture::zn(4), GluingMode::min), Error);
}

// Property: plan idempotents are orthogonal and sum to one.
TEST(Construct, PlanIdempotentsPartitionUnity) {
  for (const auto& A : finite_corpus(120))
    for (auto mode : {GluingMode::max, GluingMode::min}) {
      if (mode == GluingMode::min && !radicals(A).nilradical.is_zero()) continue;
      const auto plan = build_gluing_plan(A, mode);
      Element sum = A.zero();
      for (std::size_t j = 0; j < plan.parts.size(); ++j) {
        sum = A.add(sum, plan.parts[j].idempotent);
        for (std::size_t k = j + 1; k < plan.parts.size(); ++k)
          ASSERT_TRUE(A.is_zero(A.mul(plan.parts[j].idempotent, plan.parts[k].idempotent)));
      }
      ASSERT_EQ(sum, A.one()) << A.name();
    }
}

TEST(Construct, GlueSolutions) {
  const Ring A = fixture::zn(6);
  const auto plan = build_gluing_plan(A, GluingMode::max);
  const auto sys = x2_minus(A, 4);
  const auto x = glue_solutions(plan, sys, {{Index{0}}, {Index{1}}});
  EXPECT_EQ(x, (std::vector<Element>{Index{4}}));
  EXPECT_THROW(glue_solutions(plan, sys, {{Index{1}}, {Index{1}}}), Error);

  const Ring F = fixture::poly(2, {1, 1, 1});
  const auto single = build_gluing_plan(F, GluingMode::max);
  const auto fs = make_system(F, 1, {Polynomial(F, 1, {{F.one(), {1}}, {F.neg(Element(Index{3})), {0}}})});
  EXPECT_EQ(glue_solutions(single, fs, {{Index{3}}}), (std::vector<Element>{Index{3}}));

  const auto trivial = make_system(A, 1, {Polynomial(A, 1, {{A.one(), {1}}, {A.neg(A.one()), {1}}})});
  EXPECT_EQ(glue_solutions(plan, trivial, {{Index{0}}, {Index{0}}}), (std::vector<Element>{Index{0}}));
}

TEST(Construct, SolveLocalGlobal) {
  const Ring A = fixture::zn(6);
  const auto r = solve_local_global(A, x2_minus(A, 4));
  ASSERT_TRUE(r.solution.has_value());
  EXPECT_EQ(*r.solution, (std::vector<Element>{Index{4}}));
  const auto none = solve_local_global(A, x2_minus(A, 5));
  EXPECT_FALSE(none.solution.has_value());
  EXPECT_FALSE(brute_force_solve(x2_minus(A, 5)).has_value());
  const auto j = to_json(r);
  EXPECT_EQ(j["status"], "solved");
  EXPECT_EQ(j["plan"]["idempotents"], nlohmann::json({3, 4}));
  for (Index c = 0; c < 6; ++c) {
    const auto lin = make_system(A, 1, {Polynomial(A, 1, {{A.one(), {1}}, {A.neg(Element(c)), {0}}})});
    EXPECT_EQ(*solve_local_global(A, lin).solution, (std::vector<Element>{c}));
  }
}

TEST(Construct, PurifyWitness) {
  EXPECT_EQ(purify_witness(fixture::zn(6), Index{2}, Index{3}), std::optional<Element>(Index{4}));
  EXPECT_FALSE(purify_witness(fixture::zn(4), Index{2}, Index{2}).has_value());
  EXPECT_EQ(purify_witness(fixture::zn(12), Index{0}, Index{5}), std::optional<Element>(Index{0}));
  EXPECT_THROW(purify_witness(fixture::zn(6), Index{2}, Index{2}), Error);
}

TEST(Construct, PurifyWitnessIsLeastCandidate) {
  for (std::int64_t n : {6, 30, 42, 210}) {  // reduced, so a witness always exists
    const auto A = fixture::zn(n);
    for (Index f = 0; f < Index(n); ++f)
      for (Index g = 0; g < Index(n); ++g) {
        if (!A.is_zero(A.mul(Element(f), Element(g)))) continue;
        const auto w = purify_witness(A, f, g);
        ASSERT_TRUE(w.has_value()) << n << " " << f << " " << g;
        for (const auto& e : A.idempotents()) {
          const bool candidate = A.mul(Element(f), e) == Element(f) && A.mul(Element(g), A.sub(A.one(), e)) == Element(g);
          if (candidate) EXPECT_EQ(A.mul(*w, e), *w);
        }
      }
  }
}
