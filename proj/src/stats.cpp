#include "vocabsweep/stats.hpp"

namespace vocabsweep {

CorpusStats compute_stats(const Corpus& corpus, const FilterConfig& config) {
  CorpusStats stats;
  stats.n_documents = corpus.documents.size();
  stats.n_tokens = corpus.token_count();
  stats.n_sentences = corpus.sentence_count();
  stats.n_annotated_sentences = corpus.annotated_sentence_count();
  stats.n_distinct_vn_corpus = build_universe(corpus, config).size();
  stats.n_distinct_vn_messages = build_gold(corpus, config).size();
  return stats;
}

}  // namespace vocabsweep
