#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ringlab/error.hpp"
#include "ringlab/topology.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {

SpectralSpace parse(const char* text) { return space_from_json(json::parse(text)); }

const char* kV = R"({"points":["p","m1","m2"],"le":[["p","m1"],["p","m2"]]})";
const char* kLambda = R"({"points":["p1","p2","m"],"le":[["p1","m"],["p2","m"]]})";
const char* kChain2 = R"({"points":["a","b"],"le":[["a","b"]]})";
const char* kChain3 = R"({"points":["a","b","c"],"le":[["a","b"],["b","c"]]})";

SpectralSpace antichain(std::size_t n) {
  json pts = json::array();
  for (std::size_t i = 0; i < n; ++i) pts.push_back("x" + std::to_string(i));
  return space_from_json({{"points", pts}, {"le", json::array()}});
}

void expect_all(const CriteriaMatrix& m, bool value) {
  for (const auto& r : m.rows)
    if (r.verdict != Verdict::not_applicable)
      EXPECT_EQ(r.verdict, value ? Verdict::yes : Verdict::no) << m.theorem << " (" << r.id << ")";
}

}  // namespace

TEST(Topology, Closures) {
  const auto C = parse(kChain2);
  EXPECT_EQ(closure(C, 0, Topology::zariski), bit(0) | bit(1));
  EXPECT_EQ(closure(C, 1, Topology::flat), bit(0) | bit(1));
  EXPECT_EQ(closure(C, 0, Topology::patch), bit(0));
  EXPECT_EQ(closure(C, 1, Topology::patch), bit(1));
}

TEST(Topology, SeparationExamples) {
  EXPECT_FALSE(separation(parse(kV), Topology::zariski).normal);
  EXPECT_TRUE(separation(parse(kLambda), Topology::zariski).normal);
  EXPECT_TRUE(separation(antichain(4), Topology::zariski).hausdorff);
  EXPECT_FALSE(separation(parse(kChain2), Topology::zariski).hausdorff);
}

// Property: the neighbourhood-based separation tests match an exhaustive open-set search.
TEST(Topology, SeparationMatchesExhaustiveOracle) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& X : all_posets(n))
      for (auto t : {Topology::zariski, Topology::flat, Topology::patch}) {
        const auto s = separation(X, t);
        ASSERT_EQ(s.normal, oracle::normal(X, t)) << space_to_json(X).dump() << " " << to_string(t);
        ASSERT_EQ(s.hausdorff, oracle::hausdorff(X, t)) << space_to_json(X).dump();
      }
}

TEST(Topology, OpenSetsMatchOracle) {
  for (const auto& X : all_posets(4))
    for (auto t : {Topology::zariski, Topology::flat}) {
      auto got = open_sets(X, t);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::opens(X, t));
    }
}

TEST(Topology, Components) {
  EXPECT_EQ(connected_components(parse(kV)).size(), 1u);
  const auto two = parse(R"({"points":["a","b","c","d"],"le":[["a","b"],["c","d"]]})");
  EXPECT_EQ(connected_components(two), (std::vector<PointSet>{bit(0) | bit(1), bit(2) | bit(3)}));
  EXPECT_EQ(connected_components(antichain(2)).size(), 2u);
}

TEST(Topology, Retractions) {
  const auto L = parse(kLambda);
  const auto r = retraction(L, RetractTarget::max);
  ASSERT_TRUE(r.map.has_value());
  EXPECT_EQ(*r.map, (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_TRUE(r.continuous);

  const auto v = retraction(parse(kV), RetractTarget::max);
  EXPECT_FALSE(v.map.has_value());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, (std::array<std::size_t, 3>{0, 1, 2}));

  const auto a = retraction(antichain(3), RetractTarget::max);
  EXPECT_EQ(*a.map, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Topology, HochsterDual) {
  const auto D = hochster_dual(parse(kV));
  EXPECT_TRUE(D.le(1, 0) && D.le(2, 0));
  EXPECT_EQ(D.maximal(), bit(0));
  EXPECT_EQ(hochster_dual(antichain(3)), antichain(3));
  for (const auto& X : all_posets(4)) EXPECT_EQ(hochster_dual(hochster_dual(X)), X);
}

TEST(Topology, RelationClasses) {
  EXPECT_EQ(r_classes(parse(kV)), (std::vector<PointSet>{bit(0) | bit(1) | bit(2)}));
  EXPECT_EQ(r_classes(antichain(3)).size(), 3u);
  EXPECT_EQ(r_classes(parse(kLambda)).size(), 1u);
  EXPECT_EQ(s_classes(parse(kV)).size(), 1u);
}

TEST(Topology, ClassifySpaceExamples) {
  const auto l = classify_space(parse(kLambda));
  expect_all(l.gelfand, true);
  expect_all(l.mp, false);
  const auto v = classify_space(parse(kV));
  expect_all(v.gelfand, false);
  expect_all(v.mp, true);
  const auto c = classify_space(parse(kChain3));
  expect_all(c.gelfand, true);
  expect_all(c.mp, true);
  expect_all(c.zero_dim, false);
  expect_all(classify_space(antichain(3)).zero_dim, true);
}

// Property: over every poset on at most 5 points each class agrees internally,
// duality swaps gelfand and mp, and retractions exist exactly for the right class.
TEST(Topology, PosetSweep) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& X : all_posets(n)) {
      ++count;
      const auto c = classify_space(X);
      ASSERT_TRUE(c.gelfand.agrees()) << space_to_json(X).dump();
      ASSERT_TRUE(c.mp.agrees()) << space_to_json(X).dump();
      ASSERT_TRUE(c.zero_dim.agrees()) << space_to_json(X).dump();
      const auto d = classify_space(hochster_dual(X));
      ASSERT_EQ(c.gelfand.consensus(), d.mp.consensus());
      ASSERT_EQ(c.zero_dim.consensus(), d.zero_dim.consensus());
      const bool g = *c.gelfand.consensus(), m = *c.mp.consensus();
      ASSERT_EQ(retraction(X, RetractTarget::max).map.has_value(), g);
      ASSERT_EQ(retraction(X, RetractTarget::min).map.has_value(), m);
      ASSERT_EQ(count_retractions(X, RetractTarget::max), g ? 1u : 0u);
      if (g) {
        const auto map = *retraction(X, RetractTarget::max).map;
        EXPECT_TRUE(is_continuous(X, Topology::zariski, X, Topology::zariski, map));
        EXPECT_TRUE(is_continuous(X, Topology::flat, X, Topology::flat, map));
        EXPECT_TRUE(class_map_homeomorphism(X, X.maximal(), r_classes(X), Topology::zariski));
      }
    }
  EXPECT_EQ(count, 1u + 3u + 19u + 219u + 4231u);
}

TEST(Topology, JsonAndValidation) {
  const auto V = parse(kV);
  EXPECT_EQ(space_to_json(V), json::parse(kV));
  EXPECT_EQ(space_to_json(parse(R"({"points":["a","b","c"],"le":[["a","b"],["b","c"]]})"))["le"].size(), 3u);
  EXPECT_THROW(parse(R"({"points":["a","b"],"le":[["a","b"],["b","a"]]})"), Error);
  try {
    parse(R"({"points":["a"],"le":[["a","zz"]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/le/0"), std::string::npos) << e.what();
  }
  const std::string dot = space_to_dot(V);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_EQ(dot, space_to_dot(parse(kV)));
}
