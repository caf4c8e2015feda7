#pragma once

#include <cstddef>

#include "vocabsweep/lexicon.hpp"
#include "vocabsweep/measures.hpp"

namespace vocabsweep {

/// Scores of one extracted lexicon E against gold M inside universe U.
///
/// Division-by-zero conventions:
///   precision = 1 when E and M are both empty, 0 when only E is empty
///               (precision_defaulted is set in both cases);
///   recall    = 1 when M is empty;
///   fallout   = 0 when U = M;
///   f_measure = 0 when precision + recall = 0.
struct MetricsRow {
  MeasureKind kind = MeasureKind::CollectionFreq;
  int threshold = 0;
  double precision = 0;
  double recall = 0;
  double f_measure = 0;
  double fallout = 0;
  std::size_t extracted_size = 0;
  std::size_t true_positives = 0;
  std::size_t universe_size = 0;
  std::size_t gold_size = 0;
  bool precision_defaulted = false;

  bool operator==(const MetricsRow&) const = default;
};

/// Harmonic mean of precision and recall; 0 when both are 0.
double f_measure(double precision, double recall);

/// Throws ContractError unless extracted ⊆ universe and gold ⊆ universe.
MetricsRow evaluate(const Lexicon& extracted, const Lexicon& gold, const Lexicon& universe,
                    const MeasureSpec& spec);

}  // namespace vocabsweep
