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

std::vector<Ring> corpus_rings(std::size_t cap) {
  std::vector<Ring> out;
  for (const auto& d : finite_descriptors(builtin_corpus())) {
    Ring A = ring_from_descriptor(d);
    if (*A.size() <= cap) out.push_back(A);
  }
  for (const auto& d : infinite_descriptors(builtin_corpus())) out.push_back(ring_from_descriptor(d));
  return out;
}

}  // namespace

TEST(Spectrum, PrimitiveIdempotents) {
  EXPECT_EQ(fixture::indices(primitive_idempotents(fixture::zn(6))), (std::vector<Index>{3, 4}));
  EXPECT_EQ(fixture::indices(primitive_idempotents(fixture::zn(12))), (std::vector<Index>{4, 9}));
  EXPECT_EQ(fixture::indices(primitive_idempotents(fixture::poly(2, {1, 1, 1}))), (std::vector<Index>{1}));
}

// Property: primitive idempotents are orthogonal, sum to one, and match the prime count.
TEST(Spectrum, PrimitiveIdempotentLaws) {
  for (const auto& A : corpus_rings(200)) {
    if (!A.is_finite()) continue;
    const auto es = primitive_idempotents(A);
    Element sum = A.zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
      sum = A.add(sum, es[i]);
      for (std::size_t j = i + 1; j < es.size(); ++j) ASSERT_TRUE(A.is_zero(A.mul(es[i], es[j]))) << A.name();
    }
    EXPECT_EQ(sum, A.one()) << A.name();
    EXPECT_EQ(es.size(), A.spectrum().points.size()) << A.name();
  }
}

TEST(Spectrum, PrimesOfSmallRings) {
  const Ring A6 = fixture::zn(6);
  const auto& s6 = A6.spectrum();
  ASSERT_EQ(s6.points.size(), 2u);
  EXPECT_EQ(elements(s6.points[0].ideal), (oracle::Set{0, 2, 4}));
  EXPECT_EQ(elements(s6.points[1].ideal), (oracle::Set{0, 3}));
  EXPECT_FALSE(s6.le[0][1] || s6.le[1][0]);

  const Ring S = fixture::semi({2, 3});
  const auto& ss = S.spectrum();
  ASSERT_EQ(ss.points.size(), 3u);
  EXPECT_EQ(ss.points[0].label, "0");
  EXPECT_EQ(ss.points[1].label, "2A");
  EXPECT_EQ(ss.points[2].label, "3A");
  EXPECT_TRUE(ss.le[0][1] && ss.le[0][2]);
  EXPECT_FALSE(ss.le[1][2] || ss.le[2][1]);
  EXPECT_EQ(ss.maximal_ids(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(ss.minimal_ids(), (std::vector<std::size_t>{0}));

  EXPECT_EQ(fixture::poly(3, {1, 0, 1}).spectrum().points.size(), 1u);
}

TEST(Spectrum, PrimesMatchPrimeDivisors) {
  for (std::int64_t n = 2; n <= 60; ++n) {
    const Ring A = fixture::zn(n);
    std::vector<oracle::Set> want;
    for (auto p : oracle::prime_divisors(n)) want.push_back(oracle::zn_multiples(n, p));
    std::vector<oracle::Set> got;
    for (const auto& pt : A.spectrum().points) got.push_back(elements(pt.ideal));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want) << n;
  }
}

// Property: every point is a prime ideal; finite spectra are antichains.
TEST(Spectrum, PointsArePrime) {
  for (const auto& A : corpus_rings(64)) {
    if (!A.is_finite()) continue;
    const auto& R = A.finite();
    for (const auto& pt : A.spectrum().points) {
      ASSERT_FALSE(pt.ideal.is_whole());
      for (Index a = 0; a < R.size(); ++a)
        for (Index b = 0; b < R.size(); ++b)
          if (pt.ideal.contains(R.mul(a, b))) ASSERT_TRUE(pt.ideal.contains(a) || pt.ideal.contains(b)) << A.name();
      EXPECT_TRUE(pt.maximal && pt.minimal);
    }
  }
}

TEST(Spectrum, KernelOfLocalization) {
  EXPECT_EQ(elements(ker_pi(fixture::zn(12), 0)), (oracle::Set{0, 4, 8}));
  EXPECT_EQ(elements(ker_pi(fixture::zn(6), 0)), (oracle::Set{0, 2, 4}));
  EXPECT_TRUE(ker_pi(fixture::semi({2, 3}), 1).is_zero());
  for (std::int64_t n = 2; n <= 60; ++n) {
    const Ring A = fixture::zn(n);
    for (const auto& pt : A.spectrum().points) {
      const auto& els = pt.ideal.finite().elements;
      const std::int64_t p = els.size() > 1 ? els[1] : n;
      EXPECT_EQ(elements(ker_pi(A, pt.id)), oracle::zn_kernel(n, p)) << n;
    }
  }
}

// Property: Ker pi lies in its prime, and the kernels over Max meet in zero.
TEST(Spectrum, KernelLaws) {
  for (const auto& A : corpus_rings(200)) {
    const auto& spec = A.spectrum();
    Ideal meet = whole_ideal(A);
    for (const auto& pt : spec.points) EXPECT_TRUE(ideal_subset(ker_pi(A, pt.id), pt.ideal)) << A.name();
    for (auto m : spec.maximal_ids()) meet = ideal_intersect(A, meet, ker_pi(A, m));
    EXPECT_TRUE(meet.is_zero()) << A.name();
  }
}

TEST(Spectrum, Localize) {
  const auto l12 = localize(fixture::zn(12), 0);
  EXPECT_EQ(l12.ring.size(), std::optional<std::size_t>(4));
  EXPECT_EQ(l12.map(Index{5}), 1u);
  EXPECT_EQ(localize(fixture::zn(6), 1).ring.size(), std::optional<std::size_t>(3));
  const auto ls = localize(fixture::semi({2, 3}), 1);
  EXPECT_EQ(ls.ring.descriptor(), RingDescriptor::semilocal_int({2}));
  EXPECT_TRUE(ls.ring.is_unit(frac(3)));
  try {
    localize(fixture::semi({2, 3}), 0);
    FAIL() << "zero prime accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported);
  }
}

TEST(Spectrum, MinimalPrimeWitness) {
  EXPECT_EQ(minimal_prime_witness(fixture::zn(12), 0, Index{2}), std::optional<Element>(Index{3}));
  EXPECT_FALSE(minimal_prime_witness(fixture::semi({2, 3}), 1, frac(2)).has_value());
  EXPECT_EQ(minimal_prime_witness(fixture::zn(12), 1, Index{0}), std::optional<Element>(Index{1}));
}

// Property: witness-based minimality agrees with poset minimality everywhere.
TEST(Spectrum, WitnessMinimalityMatchesOrder) {
  for (const auto& A : corpus_rings(200)) {
    const auto& spec = A.spectrum();
    for (const auto& pt : spec.points) EXPECT_EQ(all_f_have_witness(A, pt.id), pt.minimal) << A.name() << " " << pt.label;
  }
}

// Property: on reduced finite mp rings Ker pi of a prime is a minimal prime.
TEST(Spectrum, KernelIsMinimalOnReducedRings) {
  for (const auto& A : corpus_rings(200)) {
    if (!A.is_finite() || !radicals(A).nilradical.is_zero()) continue;
    const auto& spec = A.spectrum();
    for (const auto& pt : spec.points) {
      const Ideal K = ker_pi(A, pt.id);
      const bool found = std::any_of(spec.points.begin(), spec.points.end(),
                                     [&](const SpecPoint& q) { return q.minimal && q.ideal == K; });
      EXPECT_TRUE(found) << A.name();
    }
  }
}

TEST(Spectrum, MaxRegularIdeals) {
  const Ring A6 = fixture::zn(6);
  const auto r6 = max_regular_ideals(A6);
  ASSERT_EQ(r6.size(), 2u);
  EXPECT_EQ(elements(r6[0]), (oracle::Set{0, 2, 4}));
  EXPECT_EQ(elements(r6[1]), (oracle::Set{0, 3}));
  const auto r4 = max_regular_ideals(fixture::zn(4));
  ASSERT_EQ(r4.size(), 1u);
  EXPECT_TRUE(r4[0].is_zero());
  const auto rf = max_regular_ideals(fixture::poly(2, {1, 1, 1}));
  ASSERT_EQ(rf.size(), 1u);
  EXPECT_TRUE(rf[0].is_zero());
}

TEST(Spectrum, JsonAndDot) {
  const auto j6 = spectrum_to_json(fixture::zn(6));
  EXPECT_EQ(j6["points"].size(), 2u);
  EXPECT_TRUE(j6["order"].empty());
  EXPECT_EQ(j6["points"][0]["elements"], nlohmann::json({0, 2, 4}));

  const std::string dot = spectrum_to_dot(fixture::semi({2, 3}));
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) ++edges, pos += 2;
  EXPECT_EQ(edges, 2u);
  EXPECT_EQ(spectrum_to_dot(fixture::semi({2, 3})), dot);
}
