#include <algorithm>
#include <thread>

#include "proxideal/harness.hpp"

namespace proxideal {

namespace {

class Collector {
 public:
  Collector(std::vector<TheoremId> selection, CampaignOptions const& options)
      : options_(options) {
    result_.selection = std::move(selection);
    for (TheoremId id : result_.selection) {
      result_.tallies[id];
      result_.classical_tallies[id];
    }
  }

  void add(AlgebraInstance const& inst, std::vector<TheoremFinding>&& findings) {
    ++result_.instances;
    bool const classical = !findings.empty() ? findings.front().stratum.classical()
                                             : Stratum::of(inst).classical();
    if (classical) ++result_.classical_instances;
    std::shared_ptr<AlgebraInstance const> copy;
    for (auto& f : findings) {
      bump(result_.tallies[f.theorem], f.status);
      if (classical) bump(result_.classical_tallies[f.theorem], f.status);
      if (f.status != FindingStatus::Counterexample) continue;
      auto& kept = kept_[f.theorem];
      auto pos = std::lower_bound(kept.begin(), kept.end(), f.fingerprint,
                                  [](KeptCounterexample const& k, std::uint64_t fp) {
                                    return k.finding.fingerprint < fp;
                                  });
      if (pos != kept.end() && pos->finding.fingerprint == f.fingerprint) continue;
      if (kept.size() >= options_.max_examples && pos == kept.end()) continue;
      if (!copy) copy = std::make_shared<AlgebraInstance const>(inst);
      kept.insert(pos, KeptCounterexample{std::move(f), copy});
      if (kept.size() > options_.max_examples) kept.pop_back();
    }
  }

  CampaignResult finish() && {
    for (TheoremId id : result_.selection) {
      auto it = kept_.find(id);
      if (it == kept_.end()) continue;
      for (auto& k : it->second) result_.counterexamples.push_back(std::move(k));
    }
    return std::move(result_);
  }

  CampaignResult& result() { return result_; }

 private:
  static void bump(TheoremTally& t, FindingStatus s) {
    switch (s) {
      case FindingStatus::Confirmed: ++t.confirmed; break;
      case FindingStatus::Counterexample: ++t.counterexamples; break;
      case FindingStatus::HypothesisNotMet: ++t.hypothesis_not_met; break;
    }
  }

  CampaignOptions options_;
  CampaignResult result_;
  std::map<TheoremId, std::vector<KeptCounterexample>> kept_;
};

std::vector<std::vector<TheoremFinding>> evaluate_batch(std::vector<AlgebraInstance> const& batch,
                                                        std::vector<TheoremId> const& selection,
                                                        std::size_t threads) {
  std::vector<std::vector<TheoremFinding>> out(batch.size());
  threads = std::max<std::size_t>(1, std::min(threads, batch.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = evaluate_instance(batch[i], selection);
    return out;
  }
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < batch.size(); i += threads)
        out[i] = evaluate_instance(batch[i], selection);
    });
  }
  for (auto& w : workers) w.join();
  return out;
}

}  // namespace

CampaignResult run_campaign(GenParams const& params, std::vector<TheoremId> const& selection,
                            CampaignOptions const& options) {
  Collector col(selection, options);
  col.result().params = params;
  InstanceStream stream(params);
  std::size_t const batch_size = std::max<std::size_t>(1, options.batch);
  std::vector<AlgebraInstance> batch;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto inst = stream.next();
      if (!inst) {
        more = false;
        break;
      }
      batch.push_back(std::move(*inst));
    }
    auto findings = evaluate_batch(batch, selection, options.threads);
    for (std::size_t i = 0; i < batch.size(); ++i) col.add(batch[i], std::move(findings[i]));
  }
  col.result().stream = stream.stats();
  return std::move(col).finish();
}

CampaignResult run_campaign(std::vector<AlgebraInstance> const& instances,
                            std::vector<TheoremId> const& selection,
                            CampaignOptions const& options) {
  Collector col(selection, options);
  col.result().params.family = Family::Fixtures;
  auto findings = evaluate_batch(instances, selection, options.threads);
  for (std::size_t i = 0; i < instances.size(); ++i) col.add(instances[i], std::move(findings[i]));
  col.result().stream.produced = instances.size();
  return std::move(col).finish();
}

}  // namespace proxideal
