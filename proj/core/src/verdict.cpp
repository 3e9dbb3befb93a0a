#include "ringlab/verdict.hpp"

namespace ringlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

CriterionResult& CriteriaMatrix::add(std::string id, bool holds, nlohmann::json witness) {
  rows.push_back({std::move(id), holds ? Verdict::yes : Verdict::no, std::move(witness), {}});
  return rows.back();
}

CriterionResult& CriteriaMatrix::not_applicable(std::string id, std::string note) {
  rows.push_back({std::move(id), Verdict::not_applicable, nullptr, std::move(note)});
  return rows.back();
}

const CriterionResult* CriteriaMatrix::find(const std::string& id) const {
  for (const auto& r : rows)
    if (r.id == id) return &r;
  return nullptr;
}

CriterionResult* CriteriaMatrix::find(const std::string& id) {
  for (auto& r : rows)
    if (r.id == id) return &r;
  return nullptr;
}

std::optional<std::pair<std::string, std::string>> CriteriaMatrix::disagreement() const {
  const CriterionResult* first = nullptr;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::not_applicable) continue;
    if (!first) {
      first = &r;
    } else if (r.verdict != first->verdict) {
      return std::make_pair(first->id, r.id);
    }
  }
  return std::nullopt;
}

std::optional<bool> CriteriaMatrix::consensus() const {
  if (disagreement()) return std::nullopt;
  for (const auto& r : rows)
    if (r.verdict != Verdict::not_applicable) return r.verdict == Verdict::yes;
  return std::nullopt;
}

nlohmann::json to_json(const CriteriaMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m.rows) {
    nlohmann::json row = {{"id", r.id}, {"verdict", to_string(r.verdict)}};
    if (!r.witness.is_null()) row["witness"] = r.witness;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  nlohmann::json j = {{"theorem", m.theorem}, {"criteria", rows}};
  const auto c = m.consensus();
  j["agree"] = m.agrees();
  j["value"] = c ? nlohmann::json(*c) : nlohmann::json(nullptr);
  return j;
}

}  // namespace ringlab
