#include "vocabsweep/measures.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "vocabsweep/error.hpp"

namespace vocabsweep {

std::string_view measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::CollectionFreq: return "cf";
    case MeasureKind::DocumentFreq: return "df";
    case MeasureKind::TfIdf: return "tfidf";
    case MeasureKind::InterdocFreq: return "idf";
  }
  return "?";
}

std::string_view measure_title(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::CollectionFreq: return "Collection Frequency";
    case MeasureKind::DocumentFreq: return "Document Frequency";
    case MeasureKind::TfIdf: return "tf.idf";
    case MeasureKind::InterdocFreq: return "Inter-document Frequency";
  }
  return "?";
}

std::optional<MeasureKind> parse_measure(std::string_view name) {
  for (MeasureKind kind : kAllMeasures)
    if (measure_name(kind) == name) return kind;
  return std::nullopt;
}

namespace {

void check_percent(int percent) {
  if (percent < 1 || percent > 100)
    throw ContractError("percent threshold must be in [1,100], got " + std::to_string(percent));
}

void check_min_docs(int min_docs) {
  if (min_docs < 1)
    throw ContractError("document-count threshold must be >= 1, got " + std::to_string(min_docs));
}

}  // namespace

void MeasureSpec::validate(std::size_t n_documents) const {
  if (is_percent_measure(kind)) {
    check_percent(threshold);
    return;
  }
  check_min_docs(threshold);
  if (static_cast<std::size_t>(threshold) > n_documents)
    throw ContractError("document-count threshold must be in [1," + std::to_string(n_documents) +
                        "], got " + std::to_string(threshold));
}

std::size_t top_fraction_size(std::size_t distinct_keys, int percent) {
  check_percent(percent);
  return (static_cast<std::size_t>(percent) * distinct_keys + 99) / 100;
}

Lexicon top_fraction(std::span<const ScoredKey> ranked, int percent) {
  check_percent(percent);
  std::unordered_map<std::string_view, double> best;
  for (const auto& item : ranked) {
    auto [it, inserted] = best.emplace(item.key, item.score);
    if (!inserted) it->second = std::max(it->second, item.score);
  }
  std::vector<std::pair<std::string_view, double>> order(best.begin(), best.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  order.resize(top_fraction_size(order.size(), percent));

  std::vector<std::string> keys;
  keys.reserve(order.size());
  for (const auto& [key, _] : order) keys.emplace_back(key);
  return Lexicon(std::move(keys));
}

double tfidf(std::uint64_t term_count, std::size_t n_documents, std::size_t doc_count) {
  return static_cast<double>(term_count) *
         std::log(static_cast<double>(n_documents) / static_cast<double>(doc_count));
}

std::vector<TfIdfScore> tfidf_scores(const CorpusIndex& index) {
  std::vector<TfIdfScore> scores;
  for (std::size_t d = 0; d < index.n_documents(); ++d)
    for (const auto& posting : index.doc_freq[d])
      scores.push_back({index.words[posting.word], index.document_ids[d],
                        tfidf(posting.count, index.n_documents(), index.doc_count[posting.word])});
  return scores;
}

namespace {

// Ids are assigned in key order, so "key ascending" is "id ascending".
template <typename Score>
std::vector<WordId> rank(std::vector<std::pair<WordId, Score>> scored) {
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<WordId> order;
  order.reserve(scored.size());
  for (const auto& [id, _] : scored) order.push_back(id);
  return order;
}

}  // namespace

Extractor::Extractor(const CorpusIndex& index) : index_(index) {
  const std::size_t n_docs = index.n_documents();

  std::vector<std::pair<WordId, std::uint64_t>> collection;
  collection.reserve(index.n_words());
  for (WordId id = 0; id < index.n_words(); ++id) {
    collection.emplace_back(id, index.corpus_freq[id]);
    max_doc_count_ = std::max<std::size_t>(max_doc_count_, index.doc_count[id]);
  }
  collection_order_ = rank(std::move(collection));

  document_orders_.reserve(n_docs);
  tfidf_orders_.reserve(n_docs);
  for (const auto& row : index.doc_freq) {
    std::vector<std::pair<WordId, std::uint32_t>> counts;
    std::vector<std::pair<WordId, double>> weights;
    counts.reserve(row.size());
    weights.reserve(row.size());
    for (const auto& posting : row) {
      counts.emplace_back(posting.word, posting.count);
      weights.emplace_back(posting.word,
                           tfidf(posting.count, n_docs, index.doc_count[posting.word]));
    }
    document_orders_.push_back(rank(std::move(counts)));
    tfidf_orders_.push_back(rank(std::move(weights)));
  }
}

Lexicon Extractor::from_mask(const std::vector<char>& mask) const {
  std::vector<std::string> words;
  for (WordId id = 0; id < mask.size(); ++id)
    if (mask[id]) words.push_back(index_.words[id]);
  return Lexicon::from_sorted(std::move(words));
}

Lexicon Extractor::cut_per_document(const std::vector<std::vector<WordId>>& orders,
                                    int percent) const {
  std::vector<char> mask(index_.n_words(), 0);
  for (const auto& order : orders) {
    const std::size_t k = top_fraction_size(order.size(), percent);
    for (std::size_t i = 0; i < k; ++i) mask[order[i]] = 1;
  }
  return from_mask(mask);
}

Lexicon Extractor::extract(const MeasureSpec& spec) const {
  switch (spec.kind) {
    case MeasureKind::CollectionFreq: {
      const std::size_t k = top_fraction_size(collection_order_.size(), spec.threshold);
      std::vector<char> mask(index_.n_words(), 0);
      for (std::size_t i = 0; i < k; ++i) mask[collection_order_[i]] = 1;
      return from_mask(mask);
    }
    case MeasureKind::DocumentFreq:
      return cut_per_document(document_orders_, spec.threshold);
    case MeasureKind::TfIdf:
      return cut_per_document(tfidf_orders_, spec.threshold);
    case MeasureKind::InterdocFreq: {
      check_min_docs(spec.threshold);
      std::vector<char> mask(index_.n_words(), 0);
      for (WordId id = 0; id < index_.n_words(); ++id)
        mask[id] = index_.doc_count[id] >= static_cast<std::uint32_t>(spec.threshold);
      return from_mask(mask);
    }
  }
  throw ContractError("unknown measure kind");
}

Lexicon extract_collection_freq(const CorpusIndex& index, int percent) {
  return Extractor(index).extract({MeasureKind::CollectionFreq, percent});
}

Lexicon extract_document_freq(const CorpusIndex& index, int percent) {
  return Extractor(index).extract({MeasureKind::DocumentFreq, percent});
}

Lexicon extract_tfidf(const CorpusIndex& index, int percent) {
  return Extractor(index).extract({MeasureKind::TfIdf, percent});
}

Lexicon extract_interdoc_freq(const CorpusIndex& index, int min_docs) {
  return Extractor(index).extract({MeasureKind::InterdocFreq, min_docs});
}

Lexicon extract(const CorpusIndex& index, const MeasureSpec& spec) {
  return Extractor(index).extract(spec);
}

}  // namespace vocabsweep
