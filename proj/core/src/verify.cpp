#include "ringlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

void apply_tamper(ClassifyReport& r, const CorpusSpec& spec) {
  if (spec.tamper_theorem.empty()) return;
  for (auto& m : r.matrices) {
    if (m.theorem != spec.tamper_theorem) continue;
    if (auto* row = m.find(spec.tamper_criterion); row && row->verdict != Verdict::not_applicable)
      row->verdict = row->verdict == Verdict::yes ? Verdict::no : Verdict::yes;
  }
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

bool VerifySummary::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.agree; });
}

std::vector<VerifyRow> VerifySummary::failures() const {
  std::vector<VerifyRow> out;
  for (const auto& r : rows)
    if (!r.agree) out.push_back(r);
  return out;
}

std::vector<VerifyRow> verify_ring(const Ring& A, const CorpusSpec& spec) {
  std::vector<VerifyRow> rows;
  auto report = classify_report(A);
  apply_tamper(report, spec);
  if (report.zero_ring) {
    rows.push_back({report.ring, "zero-ring", true, "vacuous"});
    return rows;
  }
  for (const auto& m : report.matrices) {
    VerifyRow row{report.ring, m.theorem, true, nullptr};
    if (auto d = m.disagreement()) {
      row.agree = false;
      row.detail = {{"criteria", {d->first, d->second}}};
    } else {
      const auto c = m.consensus();
      row.detail = c ? nlohmann::json(*c) : nlohmann::json("n/a");
    }
    rows.push_back(std::move(row));
  }
  // implication lattice between the consensus values
  auto holds = [&](const std::string& t) {
    const auto* m = report.matrix(t);
    return m && m->consensus().value_or(false);
  };
  const bool pp = report.has_label("p.p."), app = report.has_label("almost-p.p."), pf = report.has_label("p.f.");
  std::vector<std::string> broken;
  if (holds("clean") && !holds("gelfand")) broken.emplace_back("clean => gelfand");
  if (holds("purified") && !holds("mp")) broken.emplace_back("purified => mp");
  if (holds("zero-dim") && !(holds("gelfand") && holds("mp") && holds("clean") && holds("purified")))
    broken.emplace_back("zero-dim => gelfand, mp, clean, purified");
  if (holds("reduced") && holds("purified") && !pf) broken.emplace_back("reduced purified => p.f.");
  if (pp && !app) broken.emplace_back("p.p. => almost-p.p.");
  if (app && !pf) broken.emplace_back("almost-p.p. => p.f.");
  VerifyRow imp{report.ring, "implications", broken.empty(), nullptr};
  imp.detail = broken.empty() ? nlohmann::json(report.labels) : nlohmann::json(broken);
  rows.push_back(std::move(imp));
  return rows;
}

std::vector<std::string> poset_defects(const SpectralSpace& X) {
  std::vector<std::string> out;
  const auto c = classify_space(X);
  for (const auto* m : {&c.gelfand, &c.mp, &c.zero_dim})
    if (auto d = m->disagreement()) out.push_back(m->theorem + ": " + d->first + " vs " + d->second);
  const auto dual = classify_space(hochster_dual(X));
  if (c.gelfand.consensus() != dual.mp.consensus()) out.emplace_back("gelfand(X) != mp(dual X)");
  const bool gelfand = c.gelfand.consensus().value_or(false);
  const auto count = count_retractions(X, RetractTarget::max);
  if (gelfand != (count > 0)) out.emplace_back("retraction onto Max exists iff gelfand fails");
  if (gelfand && count != 1) out.emplace_back("retraction onto Max is not unique");
  return out;
}

VerifySummary run_verify(const CorpusSpec& spec, const Limits& limits, const VerifyOptions& opts) {
  spec.validate();
  VerifySummary s;
  s.seed = spec.seed;
  std::vector<RingDescriptor> descs;
  if (opts.rings) {
    descs = finite_descriptors(spec);
    for (auto& d : infinite_descriptors(spec)) descs.push_back(std::move(d));
  }
  std::vector<std::vector<VerifyRow>> per(descs.size());
  parallel_for(descs.size(), opts.threads, [&](std::size_t i) {
    per[i] = verify_ring(ring_from_descriptor(descs[i], limits), spec);
  });
  s.rings = descs.size();
  for (auto& rows : per)
    for (auto& r : rows) s.rows.push_back(std::move(r));

  if (opts.posets) {
    for (std::size_t n = 1; n <= spec.poset_points; ++n) {
      const auto spaces = all_posets(n);
      std::vector<std::vector<std::string>> defects(spaces.size());
      parallel_for(spaces.size(), opts.threads, [&](std::size_t i) { defects[i] = poset_defects(spaces[i]); });
      VerifyRow row{"poset n=" + std::to_string(n), "poset-sweep", true, nullptr};
      nlohmann::json bad = nlohmann::json::array();
      for (std::size_t i = 0; i < spaces.size(); ++i)
        if (!defects[i].empty()) bad.push_back({{"poset", space_to_json(spaces[i])}, {"defects", defects[i]}});
      row.agree = bad.empty();
      row.detail = bad.empty() ? nlohmann::json{{"posets", spaces.size()}} : bad;
      s.posets += spaces.size();
      s.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(s.rows.begin(), s.rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
    return std::tie(a.ring, a.theorem) < std::tie(b.ring, b.theorem);
  });
  return s;
}

nlohmann::json to_json(const VerifySummary& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) rows.push_back({{"ring", r.ring}, {"theorem", r.theorem}, {"agree", r.agree}, {"detail", r.detail}});
  return {{"seed", s.seed}, {"rings", s.rings}, {"posets", s.posets}, {"ok", s.ok()}, {"rows", rows}};
}

}  // namespace ringlab
