#pragma once

#include <string>

#include "ringlab/classify.hpp"
#include "ringlab/verify.hpp"

namespace ringlab {

enum class OutputFormat { json, dot, text, table };
OutputFormat parse_output_format(const std::string& s);

/// Plain text: labels, then one line per criterion.
std::string render_report_text(const ClassifyReport& r);

/// Per-theorem counts followed by every failing row.
std::string render_verify_summary(const VerifySummary& s);
/// One line per (ring, theorem) row.
std::string render_verify_table(const VerifySummary& s);

}  // namespace ringlab
