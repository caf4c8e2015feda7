#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vocabsweep/corpus.hpp"
#include "vocabsweep/evaluation.hpp"
#include "vocabsweep/lexicon.hpp"
#include "vocabsweep/measures.hpp"

namespace vocabsweep {

inline constexpr double kDefaultFalloutCap = 0.10;

struct OperatingPoint {
  int threshold = 0;
  MetricsRow row;

  bool operator==(const OperatingPoint&) const = default;
};

/// All thresholds of one measure, ascending and gap-free, plus the selected
/// operating points. Ties on F go to the smaller threshold.
struct SweepResult {
  MeasureKind kind = MeasureKind::CollectionFreq;
  std::vector<MetricsRow> rows;
  OperatingPoint best_f;
  /// Best F among rows with fallout <= fallout_cap; absent if none qualify.
  std::optional<OperatingPoint> best_f_under_cap;
  double fallout_cap = kDefaultFalloutCap;

  bool operator==(const SweepResult&) const = default;
};

enum class Execution { Sequential, Parallel };

/// Everything a sweep reads. Built once and shared by every measure.
struct SweepInputs {
  CorpusIndex index;
  Lexicon universe;
  Lexicon gold;
};

/// Throws EmptyVocabularyError when the filtered universe is empty.
SweepInputs prepare_sweep(const Corpus& corpus, const FilterConfig& config);

/// Inclusive threshold range swept for a measure: 1..100 for the percent
/// measures, 1..max document count for InterdocFreq.
std::pair<int, int> threshold_range(MeasureKind kind, const Extractor& extractor);

/// Picks best_f and best_f_under_cap from already computed rows.
void select_operating_points(SweepResult& result);

SweepResult run_sweep(const SweepInputs& inputs, const Extractor& extractor, MeasureKind kind,
                      double fallout_cap, Execution execution = Execution::Sequential);

SweepResult run_sweep(const Corpus& corpus, const FilterConfig& config, MeasureKind kind,
                      double fallout_cap = kDefaultFalloutCap,
                      Execution execution = Execution::Sequential);

/// One result per measure, in kAllMeasures order. Output does not depend on
/// `execution`.
std::vector<SweepResult> run_all_sweeps(const Corpus& corpus, const FilterConfig& config,
                                        double fallout_cap = kDefaultFalloutCap,
                                        Execution execution = Execution::Parallel);

}  // namespace vocabsweep
