#include "ringlab/classify.hpp"

#include <algorithm>

#include "ringlab/error.hpp"

namespace ringlab {

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::reduced: return "reduced";
    case MatrixKind::zero_dim: return "zero-dim";
    case MatrixKind::gelfand: return "gelfand";
    case MatrixKind::clean: return "clean";
    case MatrixKind::mp: return "mp";
    case MatrixKind::reduced_mp: return "reduced-mp";
    case MatrixKind::purified: return "purified";
  }
  return "?";
}

const std::vector<MatrixKind>& all_matrix_kinds() {
  static const std::vector<MatrixKind> kinds = {MatrixKind::reduced, MatrixKind::zero_dim,   MatrixKind::gelfand,
                                                MatrixKind::clean,   MatrixKind::mp,         MatrixKind::reduced_mp,
                                                MatrixKind::purified};
  return kinds;
}

MatrixKind parse_matrix_kind(const std::string& s) {
  for (auto k : all_matrix_kinds())
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::input, "unknown criteria matrix '" + s + "'");
}

CriteriaMatrix criteria(const Ring& A, MatrixKind k) {
  switch (k) {
    case MatrixKind::reduced: return criteria_reduced(A);
    case MatrixKind::zero_dim: return criteria_zero_dimensional(A);
    case MatrixKind::gelfand: return criteria_gelfand(A);
    case MatrixKind::clean: return criteria_clean(A);
    case MatrixKind::mp: return criteria_mp(A);
    case MatrixKind::reduced_mp: return criteria_reduced_mp(A);
    case MatrixKind::purified: return criteria_purified(A);
  }
  throw Error(ErrorKind::precondition, "bad matrix kind");
}

bool ClassifyReport::has_label(const std::string& l) const {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

const CriteriaMatrix* ClassifyReport::matrix(const std::string& theorem) const {
  for (const auto& m : matrices)
    if (m.theorem == theorem) return &m;
  return nullptr;
}

ClassifyReport classify_report(const Ring& A) {
  ClassifyReport r;
  r.ring = A.name();
  r.descriptor = to_json(A.descriptor());
  if (A.is_zero_ring()) {
    r.zero_ring = true;
    return r;
  }
  for (auto k : all_matrix_kinds()) r.matrices.push_back(criteria(A, k));

  auto holds = [&](const std::string& theorem) {
    const auto* m = r.matrix(theorem);
    return m && m->consensus().value_or(false);
  };
  for (const char* t : {"reduced", "zero-dim", "gelfand", "clean", "mp", "purified"})
    if (holds(t)) r.labels.emplace_back(t);
  if (holds("reduced-mp")) r.labels.emplace_back("p.f.");
  if (holds("reduced") && holds("purified")) r.labels.emplace_back("almost-p.p.");
  if (!pp_obstruction(A)) r.labels.emplace_back("p.p.");
  if (holds("reduced") && holds("zero-dim")) r.labels.emplace_back("absolutely-flat");
  return r;
}

nlohmann::json to_json(const ClassifyReport& r) {
  nlohmann::json j;
  j["ring"] = r.ring;
  j["descriptor"] = r.descriptor;
  if (r.zero_ring) {
    j["zero_ring"] = true;
    j["verdict"] = "zero ring: no prime ideals, every criterion is vacuous";
  }
  nlohmann::json ms = nlohmann::json::object();
  for (const auto& m : r.matrices) ms[m.theorem] = to_json(m);
  j["matrices"] = ms;
  j["labels"] = r.labels;
  return j;
}

}  // namespace ringlab
