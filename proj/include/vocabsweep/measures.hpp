#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vocabsweep/lexicon.hpp"

namespace vocabsweep {

enum class MeasureKind {
  CollectionFreq,
  DocumentFreq,
  TfIdf,
  InterdocFreq,
};

inline constexpr MeasureKind kAllMeasures[] = {MeasureKind::CollectionFreq,
                                               MeasureKind::DocumentFreq, MeasureKind::TfIdf,
                                               MeasureKind::InterdocFreq};

/// Short name used on the command line and in file names: cf, df, tfidf, idf.
std::string_view measure_name(MeasureKind kind);
/// Human-readable title, e.g. "Collection Frequency".
std::string_view measure_title(MeasureKind kind);
std::optional<MeasureKind> parse_measure(std::string_view name);

/// True for the three measures whose threshold is a percentage.
constexpr bool is_percent_measure(MeasureKind kind) { return kind != MeasureKind::InterdocFreq; }

/// Which measure to apply and its threshold: a percentage in [1,100] for the
/// percent measures, a minimum document count in [1,N] for InterdocFreq.
struct MeasureSpec {
  MeasureKind kind = MeasureKind::CollectionFreq;
  int threshold = 1;

  /// Throws ContractError when the threshold is outside its range.
  void validate(std::size_t n_documents) const;

  bool operator==(const MeasureSpec&) const = default;
};

struct ScoredKey {
  std::string key;
  double score;
};

/// k = ceil(percent/100 * L) for L distinct keys.
std::size_t top_fraction_size(std::size_t distinct_keys, int percent);

/// First k keys ordered by score descending, then key ascending by code point.
/// Duplicate keys keep their best score. Ties straddling the cut are resolved
/// by that order, so exactly k keys are returned.
Lexicon top_fraction(std::span<const ScoredKey> ranked, int percent);

/// tf(w,d) * ln(N / df(w)) with raw term counts.
struct TfIdfScore {
  std::string word;
  std::string document;
  double score;
};

double tfidf(std::uint64_t term_count, std::size_t n_documents, std::size_t doc_count);

/// One score per (word, document) pair with tf > 0, in document then word order.
std::vector<TfIdfScore> tfidf_scores(const CorpusIndex& index);

/// Precomputed rankings for all four measures over one index, so that sweeping
/// thresholds only re-cuts the rankings. The index must outlive the extractor.
class Extractor {
 public:
  explicit Extractor(const CorpusIndex& index);

  /// Percent thresholds are checked against [1,100]; InterdocFreq accepts any
  /// min_docs >= 1 (values above N select nothing).
  Lexicon extract(const MeasureSpec& spec) const;

  const CorpusIndex& index() const noexcept { return index_; }
  /// Largest number of documents any word occurs in (0 for an empty index).
  std::size_t max_doc_count() const noexcept { return max_doc_count_; }

 private:
  Lexicon from_mask(const std::vector<char>& mask) const;
  Lexicon cut_per_document(const std::vector<std::vector<WordId>>& orders, int percent) const;

  const CorpusIndex& index_;
  std::vector<WordId> collection_order_;
  std::vector<std::vector<WordId>> document_orders_;
  std::vector<std::vector<WordId>> tfidf_orders_;
  std::size_t max_doc_count_ = 0;
};

Lexicon extract_collection_freq(const CorpusIndex& index, int percent);
Lexicon extract_document_freq(const CorpusIndex& index, int percent);
Lexicon extract_tfidf(const CorpusIndex& index, int percent);
Lexicon extract_interdoc_freq(const CorpusIndex& index, int min_docs);
Lexicon extract(const CorpusIndex& index, const MeasureSpec& spec);

}  // namespace vocabsweep
