#include "ringlab/render.hpp"

#include <array>
#include <map>
#include <sstream>

#include "ringlab/error.hpp"

namespace ringlab {

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "dot") return OutputFormat::dot;
  if (s == "text") return OutputFormat::text;
  if (s == "table") return OutputFormat::table;
  throw Error(ErrorKind::input, "unknown format '" + s + "'");
}

std::string render_report_text(const ClassifyReport& r) {
  std::ostringstream out;
  out << r.ring << "\n";
  if (r.zero_ring) {
    out << "  zero ring: no prime ideals\n";
    return out.str();
  }
  out << "  labels:";
  for (const auto& l : r.labels) out << ' ' << l;
  out << "\n";
  for (const auto& m : r.matrices) {
    const auto c = m.consensus();
    out << "  " << m.theorem << ": " << (c ? (*c ? "true" : "false") : (m.agrees() ? "n/a" : "DISAGREE")) << "\n";
    for (const auto& row : m.rows) {
      out << "    (" << row.id << ") " << to_string(row.verdict);
      if (!row.witness.is_null()) out << "  witness " << row.witness.dump();
      if (!row.note.empty()) out << "  [" << row.note << "]";
      out << "\n";
    }
  }
  return out.str();
}

std::string render_verify_summary(const VerifySummary& s) {
  std::ostringstream out;
  std::map<std::string, std::array<std::size_t, 3>> counts;  // rows, agreeing, consensus true
  for (const auto& r : s.rows) {
    auto& c = counts[r.theorem];
    ++c[0];
    if (r.agree) ++c[1];
    if (r.detail.is_boolean() && r.detail.get<bool>()) ++c[2];
  }
  out << "seed " << s.seed << ", " << s.rings << " rings, " << s.posets << " posets\n";
  out << "theorem          rows    agree   true\n";
  for (const auto& [t, c] : counts) {
    std::string name = t;
    name.resize(std::max<std::size_t>(name.size(), 16), ' ');
    out << name << ' ' << c[0] << '\t' << c[1] << '\t' << c[2] << "\n";
  }
  const auto bad = s.failures();
  for (const auto& r : bad) out << "FAIL " << r.ring << " | " << r.theorem << " | " << r.detail.dump() << "\n";
  out << (bad.empty() ? "all criteria agree\n" : std::to_string(bad.size()) + " failing rows\n");
  return out.str();
}

std::string render_verify_table(const VerifySummary& s) {
  std::ostringstream out;
  out << "ring | theorem | agree | detail\n";
  for (const auto& r : s.rows)
    out << r.ring << " | " << r.theorem << " | " << (r.agree ? "yes" : "NO") << " | " << r.detail.dump() << "\n";
  return out.str();
}

}  // namespace ringlab
