#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ringlab {

enum class Verdict { yes, no, not_applicable };

std::string to_string(Verdict v);

struct CriterionResult {
  std::string id;
  Verdict verdict = Verdict::not_applicable;
  nlohmann::json witness;  // null when there is nothing to show
  std::string note;
};

/**
 * @brief One verdict per clause of a characterization; the applicable
 * verdicts of a sound implementation are all equal.
 */
struct CriteriaMatrix {
  std::string theorem;
  std::vector<CriterionResult> rows;

  CriterionResult& add(std::string id, bool holds, nlohmann::json witness = nullptr);
  CriterionResult& not_applicable(std::string id, std::string note);

  const CriterionResult* find(const std::string& id) const;
  CriterionResult* find(const std::string& id);

  /// First pair of applicable rows with different verdicts.
  std::optional<std::pair<std::string, std::string>> disagreement() const;
  bool agrees() const { return !disagreement().has_value(); }
  /// Common applicable verdict; nullopt when no row is applicable or rows disagree.
  std::optional<bool> consensus() const;
};

nlohmann::json to_json(const CriteriaMatrix& m);

}  // namespace ringlab
