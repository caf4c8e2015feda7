#pragma once

#include <cstddef>

#include "vocabsweep/corpus.hpp"
#include "vocabsweep/lexicon.hpp"

namespace vocabsweep {

/// Corpus-level counts in the style of a corpus statistics table.
struct CorpusStats {
  std::size_t n_documents = 0;
  std::size_t n_tokens = 0;
  std::size_t n_sentences = 0;
  std::size_t n_annotated_sentences = 0;
  /// |U|
  std::size_t n_distinct_vn_corpus = 0;
  /// |M|
  std::size_t n_distinct_vn_messages = 0;

  bool operator==(const CorpusStats&) const = default;
};

CorpusStats compute_stats(const Corpus& corpus, const FilterConfig& config);

}  // namespace vocabsweep
