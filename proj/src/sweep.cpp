#include "vocabsweep/sweep.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "vocabsweep/error.hpp"

namespace vocabsweep {

SweepInputs prepare_sweep(const Corpus& corpus, const FilterConfig& config) {
  SweepInputs inputs{build_index(corpus, config), {}, build_gold(corpus, config)};
  inputs.universe = inputs.index.universe();
  if (inputs.universe.empty()) throw EmptyVocabularyError();
  return inputs;
}

std::pair<int, int> threshold_range(MeasureKind kind, const Extractor& extractor) {
  if (is_percent_measure(kind)) return {1, 100};
  return {1, static_cast<int>(extractor.max_doc_count())};
}

void select_operating_points(SweepResult& result) {
  if (result.rows.empty()) throw ContractError("cannot select operating points from an empty sweep");

  const MetricsRow* best = nullptr;
  const MetricsRow* best_capped = nullptr;
  for (const auto& row : result.rows) {
    // Rows ascend by threshold, so strict '>' keeps the smaller threshold on ties.
    if (best == nullptr || row.f_measure > best->f_measure) best = &row;
    if (row.fallout <= result.fallout_cap &&
        (best_capped == nullptr || row.f_measure > best_capped->f_measure))
      best_capped = &row;
  }
  result.best_f = {best->threshold, *best};
  if (best_capped)
    result.best_f_under_cap = OperatingPoint{best_capped->threshold, *best_capped};
  else
    result.best_f_under_cap.reset();
}

SweepResult run_sweep(const SweepInputs& inputs, const Extractor& extractor, MeasureKind kind,
                      double fallout_cap, Execution execution) {
  if (!(fallout_cap >= 0.0 && fallout_cap <= 1.0))
    throw ContractError("fallout cap must be in [0,1]");
  if (inputs.universe.empty()) throw EmptyVocabularyError();

  const auto [first, last] = threshold_range(kind, extractor);
  SweepResult result;
  result.kind = kind;
  result.fallout_cap = fallout_cap;
  result.rows.resize(static_cast<std::size_t>(last - first + 1));

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const MeasureSpec spec{kind, first + static_cast<int>(i)};
      result.rows[i] = evaluate(extractor.extract(spec), inputs.gold, inputs.universe, spec);
    }
  };

  const std::size_t n = result.rows.size();
  const std::size_t workers =
      execution == Execution::Parallel
          ? std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n)
          : 1;
  if (workers <= 1) {
    fill(0, n);
  } else {
    // Each worker owns a disjoint slice of rows; no merge step is needed.
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk)
      jobs.push_back(std::async(std::launch::async, fill, begin, std::min(n, begin + chunk)));
    for (auto& job : jobs) job.get();
  }

  select_operating_points(result);
  return result;
}

SweepResult run_sweep(const Corpus& corpus, const FilterConfig& config, MeasureKind kind,
                      double fallout_cap, Execution execution) {
  const SweepInputs inputs = prepare_sweep(corpus, config);
  const Extractor extractor(inputs.index);
  return run_sweep(inputs, extractor, kind, fallout_cap, execution);
}

std::vector<SweepResult> run_all_sweeps(const Corpus& corpus, const FilterConfig& config,
                                        double fallout_cap, Execution execution) {
  const SweepInputs inputs = prepare_sweep(corpus, config);
  const Extractor extractor(inputs.index);

  std::vector<SweepResult> results;
  if (execution == Execution::Sequential) {
    for (MeasureKind kind : kAllMeasures)
      results.push_back(run_sweep(inputs, extractor, kind, fallout_cap, execution));
    return results;
  }

  std::vector<std::future<SweepResult>> jobs;
  for (MeasureKind kind : kAllMeasures)
    jobs.push_back(std::async(std::launch::async, [&, kind] {
      return run_sweep(inputs, extractor, kind, fallout_cap, Execution::Sequential);
    }));
  for (auto& job : jobs) results.push_back(job.get());
  return results;
}

}  // namespace vocabsweep
