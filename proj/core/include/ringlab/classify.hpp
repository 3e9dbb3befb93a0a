#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/ring.hpp"
#include "ringlab/verdict.hpp"

namespace ringlab {

/// Rows "nilpotent-scan" and "min-prime-intersection".
CriteriaMatrix criteria_reduced(const Ring& A);
CriteriaMatrix criteria_zero_dimensional(const Ring& A);
CriteriaMatrix criteria_gelfand(const Ring& A);
CriteriaMatrix criteria_clean(const Ring& A);
CriteriaMatrix criteria_mp(const Ring& A);
CriteriaMatrix criteria_reduced_mp(const Ring& A);
CriteriaMatrix criteria_purified(const Ring& A);

/// Every f has Ann(f) = Ae for a single idempotent e; returns the first f that fails.
std::optional<Element> pp_obstruction(const Ring& A);

enum class MatrixKind { reduced, zero_dim, gelfand, clean, mp, reduced_mp, purified };
std::string to_string(MatrixKind k);
MatrixKind parse_matrix_kind(const std::string& s);
const std::vector<MatrixKind>& all_matrix_kinds();
CriteriaMatrix criteria(const Ring& A, MatrixKind k);

struct ClassifyReport {
  std::string ring;
  nlohmann::json descriptor;
  bool zero_ring = false;
  std::vector<CriteriaMatrix> matrices;
  std::vector<std::string> labels;

  bool has_label(const std::string& l) const;
  const CriteriaMatrix* matrix(const std::string& theorem) const;
};

/// All matrices plus derived labels; the zero ring gets a dedicated verdict and no matrices.
ClassifyReport classify_report(const Ring& A);
nlohmann::json to_json(const ClassifyReport& r);

}  // namespace ringlab
