#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/topology.hpp"

namespace ringlab {

/// One checked (ring, theorem) pair. Poset sweep rows use "poset n=<k>" as the ring.
struct VerifyRow {
  std::string ring;
  std::string theorem;
  bool agree = true;
  nlohmann::json detail;  // consensus value, or the disagreeing criterion pair
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::size_t rings = 0;
  std::size_t posets = 0;
  std::vector<VerifyRow> rows;

  bool ok() const;
  std::vector<VerifyRow> failures() const;
};

struct VerifyOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool rings = true;
  bool posets = true;
};

/// Matrix agreement and the implication lattice for one ring.
std::vector<VerifyRow> verify_ring(const Ring& A, const CorpusSpec& spec);

/// Intra-class agreement, duality and retraction checks for one poset.
std::vector<std::string> poset_defects(const SpectralSpace& X);

VerifySummary run_verify(const CorpusSpec& spec, const Limits& limits = {}, const VerifyOptions& opts = {});

nlohmann::json to_json(const VerifySummary& s);

}  // namespace ringlab
