#include "vocabsweep/evaluation.hpp"

#include "vocabsweep/error.hpp"

namespace vocabsweep {

double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0 ? 0.0 : 2.0 * precision * recall / sum;
}

MetricsRow evaluate(const Lexicon& extracted, const Lexicon& gold, const Lexicon& universe,
                    const MeasureSpec& spec) {
  if (!extracted.is_subset_of(universe))
    throw ContractError("extracted lexicon is not a subset of the universe");
  if (!gold.is_subset_of(universe))
    throw ContractError("gold lexicon is not a subset of the universe");

  MetricsRow row;
  row.kind = spec.kind;
  row.threshold = spec.threshold;
  row.extracted_size = extracted.size();
  row.gold_size = gold.size();
  row.universe_size = universe.size();
  row.true_positives = extracted.intersection_size(gold);

  const auto e = static_cast<double>(row.extracted_size);
  const auto m = static_cast<double>(row.gold_size);
  const auto tp = static_cast<double>(row.true_positives);

  if (row.extracted_size == 0) {
    row.precision = row.gold_size == 0 ? 1.0 : 0.0;
    row.precision_defaulted = true;
  } else {
    row.precision = tp / e;
  }
  row.recall = row.gold_size == 0 ? 1.0 : tp / m;
  row.f_measure = f_measure(row.precision, row.recall);

  const std::size_t negatives = row.universe_size - row.gold_size;
  const std::size_t false_positives = row.extracted_size - row.true_positives;
  row.fallout = negatives == 0 ? 0.0
                               : static_cast<double>(false_positives) / static_cast<double>(negatives);
  return row;
}

}  // namespace vocabsweep
