#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/error.hpp"
#include "ringlab/render.hpp"
#include "ringlab/spectrum.hpp"
#include "ringlab/verify.hpp"

using namespace ringlab;
using nlohmann::json;

namespace {

// A file path, "-" for standard input, or inline JSON text.
json read_json(const std::string& arg, const std::string& what) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::input, "cannot open " + what + " file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::input, what + ": " + e.what());
  }
}

json parse_json_text(const std::string& s, const std::string& what) {
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::input, what + ": " + e.what());
  }
}

struct Options {
  std::string format;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t cap_ring_size = Limits{}.ring_size;
  std::size_t cap_ideal_enum = Limits{}.ideal_enum;
  std::string corpus;
  unsigned threads = 0;
  std::string ring, system, element, poset, mode = "clean";
  std::vector<std::string> ideal;
  bool dual = false;

  Limits limits() const { return {cap_ring_size, cap_ideal_enum}; }
};

Ring load_ring(const Options& o) { return ring_from_descriptor(descriptor_from_json(read_json(o.ring, "ring")), o.limits()); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Options& o) {
  const auto report = classify_report(load_ring(o));
  const auto f = parse_output_format(o.format.empty() ? "json" : o.format);
  if (f == OutputFormat::text) {
    std::cout << render_report_text(report);
  } else if (f == OutputFormat::json) {
    emit(to_json(report));
  } else {
    throw Error(ErrorKind::input, "classify supports --format json|text");
  }
  return 0;
}

int cmd_verify(const Options& o) {
  CorpusSpec spec = o.corpus.empty() ? builtin_corpus() : corpus_from_json(read_json(o.corpus, "corpus"));
  if (o.seed_set) spec.seed = o.seed;
  VerifyOptions vo;
  vo.threads = o.threads;
  const auto s = run_verify(spec, o.limits(), vo);
  const std::string f = o.format.empty() ? "summary" : o.format;
  if (f == "summary") {
    std::cout << render_verify_summary(s);
  } else if (f == "table") {
    std::cout << render_verify_table(s);
  } else if (f == "json") {
    emit(to_json(s));
  } else {
    throw Error(ErrorKind::input, "verify supports --format summary|table|json");
  }
  for (const auto& r : s.failures()) {
    std::string pair = r.detail.contains("criteria") ? r.detail["criteria"].dump() : r.detail.dump();
    std::cerr << "ringlab: disagreement: " << r.ring << " | " << r.theorem << " | " << pair << "\n";
  }
  return s.ok() ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
  const Ring A = load_ring(o);
  const auto f = parse_output_format(o.format.empty() ? "json" : o.format);
  if (f == OutputFormat::dot) {
    std::cout << spectrum_to_dot(A);
  } else if (f == OutputFormat::json) {
    emit(spectrum_to_json(A));
  } else {
    throw Error(ErrorKind::input, "spectrum supports --format json|dot");
  }
  return 0;
}

int cmd_poset(const Options& o) {
  SpectralSpace X = space_from_json(read_json(o.poset, "poset"));
  if (o.dual) X = hochster_dual(X);
  const auto f = parse_output_format(o.format.empty() ? "json" : o.format);
  if (f == OutputFormat::dot) {
    std::cout << space_to_dot(X);
  } else if (f == OutputFormat::json) {
    json j = space_to_json(X);
    const auto c = classify_space(X);
    j["classification"] = {{"gelfand", to_json(c.gelfand)}, {"mp", to_json(c.mp)}, {"zero-dim", to_json(c.zero_dim)}};
    emit(j);
  } else {
    throw Error(ErrorKind::input, "poset supports --format json|dot");
  }
  return 0;
}

int cmd_solve(const Options& o) {
  const Ring A = load_ring(o);
  const auto sys = system_from_json(A, read_json(o.system, "system"));
  emit(to_json(solve_local_global(A, sys)));
  return 0;
}

int cmd_decompose(const Options& o) {
  const Ring A = load_ring(o);
  if (o.mode == "crt") {
    const auto d = crt_decomposition(A);
    if (auto defect = crt_defect(A, d)) throw Error(ErrorKind::precondition, "CRT map is not an isomorphism: " + *defect);
    json factors = json::array();
    for (std::size_t k = 0; k < d.factors.size(); ++k)
      factors.push_back({{"maximal", A.spectrum().points[d.maximal_ids[k]].label},
                         {"ring", d.factors[k].name()},
                         {"size", d.factors[k].finite().size()}});
    emit({{"ring", A.name()}, {"factors", factors}, {"forward", d.forward}});
    return 0;
  }
  if (o.element.empty()) throw Error(ErrorKind::input, "decompose needs --element");
  const Element f = A.element_from_json(parse_json_text(o.element, "element"), "/element");
  if (o.mode == "clean") {
    const auto d = clean_decompose(A, f);
    emit({{"f", A.element_to_json(f)}, {"idempotent", A.element_to_json(d.idempotent)}, {"unit", A.element_to_json(d.unit)}});
  } else if (o.mode == "exchange") {
    emit({{"f", A.element_to_json(f)}, {"idempotent", A.element_to_json(exchange_idempotent(A, f))}});
  } else {
    throw Error(ErrorKind::input, "unknown decompose mode '" + o.mode + "' (clean|exchange|crt)");
  }
  return 0;
}

int cmd_lift(const Options& o) {
  const Ring A = load_ring(o);
  if (o.element.empty()) throw Error(ErrorKind::input, "lift needs --element");
  std::vector<Element> gens;
  for (std::size_t i = 0; i < o.ideal.size(); ++i)
    gens.push_back(A.element_from_json(parse_json_text(o.ideal[i], "ideal"), "/ideal/" + std::to_string(i)));
  const Ideal I = ideal_generate(A, gens);
  const Element f = A.element_from_json(parse_json_text(o.element, "element"), "/element");
  const auto r = lift_idempotent(A, I, f);
  json iterates = json::array();
  for (const auto& e : r.iterates) iterates.push_back(A.element_to_json(e));
  emit({{"f", A.element_to_json(f)},
        {"ideal", ideal_to_json(A, I)},
        {"idempotent", A.element_to_json(r.idempotent)},
        {"method", r.newton ? "newton" : "scan"},
        {"steps", r.steps},
        {"iterates", iterates}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on prime spectra of finite and semilocal commutative rings"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format");
  app.add_option("--cap-ring-size", o.cap_ring_size, "Largest finite ring to tabulate");
  app.add_option("--cap-ideal-enum", o.cap_ideal_enum, "Largest finite ring whose ideals are enumerated");

  auto* classify = app.add_subcommand("classify", "Criteria matrices and labels for a ring");
  classify->add_option("ring", o.ring, "Ring descriptor (file, '-' or inline JSON)")->required();

  auto* verify = app.add_subcommand("verify", "Check criterion agreement over a corpus");
  verify->add_option("--corpus", o.corpus, "Corpus spec (file or inline JSON)");
  auto* seed = verify->add_option("--seed", o.seed, "Seed recorded in the report");
  verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");

  auto* spectrum = app.add_subcommand("spectrum", "Prime spectrum as JSON or DOT");
  spectrum->add_option("ring", o.ring, "Ring descriptor")->required();

  auto* poset = app.add_subcommand("poset", "Finite spectral space as JSON or DOT");
  poset->add_option("poset", o.poset, "Poset JSON")->required();
  poset->add_flag("--dual", o.dual, "Reverse the order first");

  auto* solve = app.add_subcommand("solve", "Solve a polynomial system by local-global gluing");
  solve->add_option("ring", o.ring, "Ring descriptor")->required();
  solve->add_option("system", o.system, "System JSON")->required();

  auto* decompose = app.add_subcommand("decompose", "Clean, exchange or CRT decomposition");
  decompose->add_option("ring", o.ring, "Ring descriptor")->required();
  decompose->add_option("--element", o.element, "Element as JSON");
  decompose->add_option("--mode", o.mode, "clean | exchange | crt");

  auto* lift = app.add_subcommand("lift", "Lift an idempotent modulo an ideal");
  lift->add_option("ring", o.ring, "Ring descriptor")->required();
  lift->add_option("--ideal", o.ideal, "Ideal generators as JSON elements");
  lift->add_option("--element", o.element, "Element as JSON")->required();

  for (auto* sub : {classify, verify, spectrum, poset, solve, decompose, lift}) {
    sub->add_option("--format", o.format, "Output format");
    sub->add_option("--cap-ring-size", o.cap_ring_size, "Largest finite ring to tabulate");
    sub->add_option("--cap-ideal-enum", o.cap_ideal_enum, "Largest finite ring whose ideals are enumerated");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ringlab: error[usage]: " << e.what() << "\n";
    return 2;
  }
  o.seed_set = seed->count() > 0;

  try {
    if (*classify) return cmd_classify(o);
    if (*verify) return cmd_verify(o);
    if (*spectrum) return cmd_spectrum(o);
    if (*poset) return cmd_poset(o);
    if (*solve) return cmd_solve(o);
    if (*decompose) return cmd_decompose(o);
    if (*lift) return cmd_lift(o);
  } catch (const Error& e) {
    std::cerr << "ringlab: error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ringlab: error[internal]: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
