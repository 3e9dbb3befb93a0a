#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rings.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ideal.hpp"
#include "ringlab/spectrum.hpp"

using namespace ringlab;
using fixture::frac;

namespace {

oracle::Set elements(const Ideal& I) {
  const auto& e = I.finite().elements;
  return {e.begin(), e.end()};
}

std::vector<Ring> small_corpus(std::size_t cap) {
  std::vector<Ring> out;
  for (const auto& d : finite_descriptors(builtin_corpus())) {
    Ring A = ring_from_descriptor(d);
    if (*A.size() <= cap) out.push_back(A);
  }
  return out;
}

}  // namespace

TEST(Ideal, Generate) {
  EXPECT_EQ(elements(ideal_generate(fixture::zn(6), {Index{4}})), (oracle::Set{0, 2, 4}));
  EXPECT_EQ(elements(ideal_generate(fixture::zn(6), {})), (oracle::Set{0}));
  EXPECT_EQ(elements(ideal_generate(fixture::zn(12), {Index{8}, Index{6}})), oracle::zn_multiples(12, 2));
}

TEST(Ideal, GenerateMatchesGcdOracle) {
  for (std::int64_t n = 2; n <= 40; ++n)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b : {std::int64_t{0}, n / 2, n - 1}) {
        const auto I = ideal_generate(fixture::zn(n), {Index(a), Index(b)});
        EXPECT_EQ(elements(I), oracle::zn_multiples(n, std::gcd(std::gcd(a, b), n))) << n << " " << a << " " << b;
      }
}

TEST(Ideal, SumIntersectProduct) {
  const Ring A = fixture::zn(6);
  const Ideal two = ideal_generate(A, {Index{2}}), three = ideal_generate(A, {Index{3}});
  EXPECT_TRUE(ideal_sum(A, two, three).is_whole());
  EXPECT_TRUE(ideal_intersect(A, two, three).is_zero());
  EXPECT_EQ(ideal_sum(A, two, zero_ideal(A)), two);
  EXPECT_EQ(elements(ideal_ops(A, two, two, IdealOp::product)), (oracle::Set{0, 2, 4}));
  const Ring B = fixture::zn(8);
  const Ideal t = ideal_generate(B, {Index{2}});
  EXPECT_EQ(elements(ideal_ops(B, t, t, IdealOp::product)), (oracle::Set{0, 4}));
}

TEST(Ideal, SemilocalOps) {
  const Ring S = fixture::semi({2, 3});
  const Ideal two = ideal_generate(S, {frac(2)}), three = ideal_generate(S, {frac(3, 5)});
  EXPECT_TRUE(ideal_sum(S, two, three).is_whole());
  EXPECT_EQ(ideal_intersect(S, two, three), ideal_generate(S, {frac(6)}));
  EXPECT_EQ(ideal_ops(S, two, two, IdealOp::product), ideal_generate(S, {frac(4, 7)}));
  EXPECT_TRUE(ideal_generate(S, {frac(10)}) == two);
  EXPECT_TRUE(ideal_generate(S, {frac(5)}).is_whole());
}

TEST(Ideal, Annihilator) {
  EXPECT_EQ(elements(annihilator(fixture::zn(6), Index{2})), (oracle::Set{0, 3}));
  EXPECT_TRUE(annihilator(fixture::zn(6), Index{0}).is_whole());
  EXPECT_TRUE(annihilator(fixture::semi({2, 3}), frac(5, 7)).is_zero());
  for (std::int64_t n = 2; n <= 40; ++n)
    for (std::int64_t f = 0; f < n; ++f)
      EXPECT_EQ(elements(annihilator(fixture::zn(n), Index(f))), oracle::zn_annihilator(n, f));
}

TEST(Ideal, Radicals) {
  const auto r12 = radicals(fixture::zn(12));
  EXPECT_EQ(elements(r12.nilradical), (oracle::Set{0, 6}));
  EXPECT_EQ(elements(r12.jacobson), (oracle::Set{0, 6}));
  EXPECT_TRUE(radicals(fixture::zn(6)).nilradical.is_zero());
  const Ring S = fixture::semi({2, 3});
  const auto rs = radicals(S);
  EXPECT_TRUE(rs.nilradical.is_zero());
  EXPECT_EQ(rs.jacobson, ideal_generate(S, {frac(6)}));
  for (std::int64_t n = 2; n <= 60; ++n)
    EXPECT_EQ(elements(radicals(fixture::zn(n)).nilradical), oracle::zn_multiples(n, oracle::radical(n)));
}

TEST(Ideal, PureAndRegularExamples) {
  const Ring A6 = fixture::zn(6), A4 = fixture::zn(4);
  EXPECT_TRUE(is_pure(A6, ideal_generate(A6, {Index{2}})).pure);
  const auto p4 = is_pure(A4, ideal_generate(A4, {Index{2}}));
  EXPECT_FALSE(p4.pure);
  EXPECT_EQ(p4.counterexample, std::optional<Element>(Index{2}));
  EXPECT_TRUE(is_pure(A4, zero_ideal(A4)).pure);

  const auto r6 = is_regular(A6, ideal_generate(A6, {Index{2}}));
  EXPECT_TRUE(r6.regular);
  EXPECT_EQ(r6.generator, std::optional<Element>(Index{4}));
  EXPECT_FALSE(is_regular(A4, ideal_generate(A4, {Index{2}})).regular);
  const auto z = is_regular(A4, zero_ideal(A4));
  EXPECT_TRUE(z.regular);
  EXPECT_EQ(z.generator, std::optional<Element>(Index{0}));
}

TEST(Ideal, QuotientRing) {
  const Ring A = fixture::zn(12);
  const auto q = quotient_ring(A, ideal_generate(A, {Index{6}}));
  ASSERT_EQ(q.ring.size(), std::optional<std::size_t>(6));
  for (Index a = 0; a < 12; ++a) EXPECT_EQ(q.map(a), a % 6);
  const auto same = quotient_ring(A, zero_ideal(A));
  EXPECT_EQ(same.ring.size(), std::optional<std::size_t>(12));

  const Ring S = fixture::semi({2, 3});
  const auto s12 = quotient_ring(S, ideal_generate(S, {frac(12)}));
  ASSERT_EQ(s12.ring.size(), std::optional<std::size_t>(12));
  // 1/5 maps to the inverse of 5 mod 12, which is 5
  EXPECT_EQ(s12.map(frac(1, 5)).index(), 5u);
  EXPECT_EQ(s12.map(frac(-1)).index(), 11u);
}

TEST(Ideal, EnumerateMatchesDivisorLattice) {
  EXPECT_EQ(enumerate_ideals(fixture::zn(6)).size(), 4u);
  EXPECT_EQ(enumerate_ideals(fixture::zn(4)).size(), 3u);
  EXPECT_EQ(enumerate_ideals(fixture::poly(2, {1, 1, 1})).size(), 2u);
  for (std::int64_t n = 2; n <= 60; ++n) EXPECT_EQ(enumerate_ideals(fixture::zn(n)).size(), oracle::divisor_count(n)) << n;
  const auto six = enumerate_ideals(fixture::zn(6));
  EXPECT_EQ(elements(six[1]), (oracle::Set{0, 3}));
  EXPECT_EQ(elements(six[2]), (oracle::Set{0, 2, 4}));
}

// Property: every enumerated ideal is closed under addition and multiplication by ring elements.
TEST(Ideal, EnumeratedIdealsAreIdeals) {
  for (const auto& A : small_corpus(32)) {
    const auto& R = A.finite();
    for (const auto& I : enumerate_ideals(A)) {
      const auto& m = I.finite().mask;
      ASSERT_TRUE(m.test(0));
      for (auto a : I.finite().elements) {
        for (auto b : I.finite().elements) ASSERT_TRUE(m.test(R.add(a, b)));
        for (Index r = 0; r < R.size(); ++r) ASSERT_TRUE(m.test(R.mul(a, r)));
      }
      bool has_unit = std::any_of(I.finite().elements.begin(), I.finite().elements.end(),
                                  [&](Index a) { return R.is_unit(a); });
      EXPECT_EQ(has_unit, I.is_whole());
    }
  }
}

// Property: regular implies pure, pure implies idempotent, and the kernel formula for pure ideals.
TEST(Ideal, PureRegularLaws) {
  for (const auto& A : small_corpus(36)) {
    const auto& spec = A.spectrum();
    for (const auto& I : enumerate_ideals(A)) {
      const bool pure = is_pure(A, I).pure, regular = is_regular(A, I).regular;
      if (regular) EXPECT_TRUE(pure) << A.name();
      if (pure) {
        EXPECT_EQ(ideal_ops(A, I, I, IdealOp::product), I) << A.name();
        Ideal meet = whole_ideal(A);
        for (auto m : spec.maximal_ids())
          if (ideal_subset(I, spec.points[m].ideal)) meet = ideal_intersect(A, meet, ker_pi(A, m));
        EXPECT_EQ(meet, I) << A.name() << " " << ideal_label(A, I);
      }
    }
  }
}

// Property on reduced rings: Ann(f) meets J_f trivially; minimal primes are sums of the J_f.
TEST(Ideal, ReducedKernelIdentities) {
  for (const auto& A : small_corpus(60)) {
    if (!radicals(A).nilradical.is_zero()) continue;
    const auto& spec = A.spectrum();
    const auto n = static_cast<Index>(*A.size());
    std::vector<Ideal> J(n);
    for (Index f = 0; f < n; ++f) {
      J[f] = whole_ideal(A);
      for (auto m : spec.maximal_ids())
        if (spec.points[m].ideal.contains(f)) J[f] = ideal_intersect(A, J[f], ker_pi(A, m));
      EXPECT_TRUE(ideal_intersect(A, annihilator(A, f), J[f]).is_zero()) << A.name() << " f=" << f;
    }
    for (auto p : spec.minimal_ids()) {
      Ideal sum = zero_ideal(A);
      for (auto f : spec.points[p].ideal.finite().elements) sum = ideal_sum(A, sum, J[f]);
      EXPECT_EQ(sum, spec.points[p].ideal) << A.name();
    }
  }
}

// Property: annihilators reverse inclusion of principal ideals.
TEST(Ideal, AnnihilatorReversesOrder) {
  for (const auto& A : small_corpus(30)) {
    const auto n = static_cast<Index>(*A.size());
    for (Index f = 0; f < n; ++f)
      for (Index g = 0; g < n; ++g)
        if (ideal_subset(ideal_generate(A, {f}), ideal_generate(A, {g})))
          EXPECT_TRUE(ideal_subset(annihilator(A, g), annihilator(A, f)));
  }
}

TEST(Ideal, JsonAndLabels) {
  const Ring A = fixture::zn(6);
  EXPECT_EQ(ideal_to_json(A, ideal_generate(A, {Index{2}})), nlohmann::json({{"elements", {0, 2, 4}}}));
  EXPECT_EQ(ideal_label(A, ideal_generate(A, {Index{2}})), "{0,2,4}");
  const Ring S = fixture::semi({2, 3});
  EXPECT_EQ(ideal_label(S, ideal_generate(S, {frac(6)})), "6A");
  EXPECT_EQ(ideal_label(S, zero_ideal(S)), "0");
  EXPECT_EQ(ideal_label(S, whole_ideal(S)), "A");
}

TEST(Ideal, EnumerationCap) {
  Limits tight;
  tight.ideal_enum = 10;
  const Ring A = ring_from_descriptor(RingDescriptor::quotient_int(12), tight);
  EXPECT_THROW(enumerate_ideals(A), Error);
}
