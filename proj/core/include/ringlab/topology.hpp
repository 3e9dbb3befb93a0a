#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/verdict.hpp"

namespace ringlab {

/// Subset of the points of a space, bit i for point i.
using PointSet = std::uint64_t;
inline constexpr std::size_t kMaxPoints = 64;

inline PointSet bit(std::size_t i) { return PointSet{1} << i; }
inline bool has(PointSet s, std::size_t i) { return (s >> i) & 1U; }
std::vector<std::size_t> members(PointSet s);

/**
 * @brief A finite poset read as a spectral space: i <= j means the prime i
 * is contained in the prime j, so j is a specialization of i.
 */
class SpectralSpace {
 public:
  SpectralSpace() = default;

  /// @p le must already be reflexive, antisymmetric and transitive.
  static SpectralSpace from_order(std::vector<std::string> labels, const std::vector<std::vector<bool>>& le);
  /// Reflexive-transitive closure of @p pairs; throws ErrorKind::input on a cycle.
  static SpectralSpace from_pairs(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  bool le(std::size_t i, std::size_t j) const { return has(up_[i], j); }
  PointSet up(std::size_t i) const { return up_[i]; }
  PointSet down(std::size_t i) const { return down_[i]; }
  PointSet all() const { return size() == 64 ? ~PointSet{0} : bit(size()) - 1; }
  PointSet up_closure(PointSet s) const;
  PointSet down_closure(PointSet s) const;

  PointSet maximal() const;
  PointSet minimal() const;
  bool is_antichain() const;

  /// Same points, reversed order.
  SpectralSpace dual() const;
  /// Restriction of the order to @p s; point k of the result is the k-th member of s.
  SpectralSpace subspace(PointSet s) const;
  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  friend bool operator==(const SpectralSpace& a, const SpectralSpace& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

enum class Topology { zariski, flat, patch };
std::string to_string(Topology t);
Topology parse_topology(const std::string& s);

/// Zariski opens are down-sets, flat opens are up-sets, every set is patch open.
bool is_open(const SpectralSpace& X, PointSet s, Topology t);
bool is_closed(const SpectralSpace& X, PointSet s, Topology t);
/// Zariski: up-set of the point. Flat: down-set. Patch: the point itself.
PointSet closure(const SpectralSpace& X, std::size_t point, Topology t);
PointSet closure_of(const SpectralSpace& X, PointSet s, Topology t);
/// Smallest open set containing the point.
PointSet neighbourhood(const SpectralSpace& X, std::size_t point, Topology t);
PointSet neighbourhood_of(const SpectralSpace& X, PointSet s, Topology t);
/// All open sets, ascending as integers; needs at most 24 points.
std::vector<PointSet> open_sets(const SpectralSpace& X, Topology t);

struct Separation {
  bool hausdorff = true;
  std::optional<std::pair<std::size_t, std::size_t>> hausdorff_witness;
  bool normal = true;
  /// Points whose disjoint closures cannot be separated by disjoint opens.
  std::optional<std::pair<std::size_t, std::size_t>> normal_witness;
};
Separation separation(const SpectralSpace& X, Topology t);

/// Connected components for the Zariski and flat topologies, ordered by least member.
std::vector<PointSet> connected_components(const SpectralSpace& X);
bool totally_disconnected(const SpectralSpace& X, Topology t);

/// Is @p map (point -> point of Y) continuous from (X, tx) to (Y, ty)?
bool is_continuous(const SpectralSpace& X, Topology tx, const SpectralSpace& Y, Topology ty,
                   const std::vector<std::size_t>& map);

enum class RetractTarget { max, min };

struct Retraction {
  /// Point -> retract point (indices of X); absent when some point lies
  /// under (max) or over (min) two candidates.
  std::optional<std::vector<std::size_t>> map;
  bool continuous = false;
  /// (point, first candidate, second candidate)
  std::optional<std::array<std::size_t, 3>> witness;
};
/// Zariski retraction onto Max, or flat retraction onto Min.
Retraction retraction(const SpectralSpace& X, RetractTarget target);
/// Number of continuous retractions onto the target subspace, by exhaustive enumeration.
std::size_t count_retractions(const SpectralSpace& X, RetractTarget target);

SpectralSpace hochster_dual(const SpectralSpace& X);

/// Classes of the equivalence generated by "common upper bound exists".
std::vector<PointSet> r_classes(const SpectralSpace& X);
/// Classes of the equivalence generated by "common lower bound exists".
std::vector<PointSet> s_classes(const SpectralSpace& X);

/// Is m -> (class of m), from the subspace @p domain into the quotient of X by
/// @p classes, a homeomorphism? Both sides use topology @p t.
bool class_map_homeomorphism(const SpectralSpace& X, PointSet domain, const std::vector<PointSet>& classes, Topology t);

struct SpaceClassification {
  CriteriaMatrix gelfand;
  CriteriaMatrix mp;
  CriteriaMatrix zero_dim;
};
SpaceClassification classify_space(const SpectralSpace& X);

/// {"points":[...], "le":[[a,b],...]}; closure applied, cycles rejected.
SpectralSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const SpectralSpace& X);
std::string space_to_dot(const SpectralSpace& X, const std::string& name = "poset");

/// Every partial order on {0..n-1}, points labelled "0".."n-1".
std::vector<SpectralSpace> all_posets(std::size_t n);

}  // namespace ringlab
