#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vocabsweep/corpus.hpp"

namespace vocabsweep {

enum class WordKeySource {
  LemmaThenSurface,
  SurfaceOnly,
};

struct FilterConfig {
  /// Matched against normalized keys.
  std::set<std::string> stopwords;
  std::set<std::string> content_pos{"VERB", "NOUN"};
  WordKeySource word_key_source = WordKeySource::LemmaThenSurface;
  bool case_fold = true;

  /// Throws ContractError when content_pos is empty.
  void validate() const;
};

/// Reads a stopword list: UTF-8, one word per line, '#' starts a comment line,
/// blank lines ignored. Entries are trimmed and, when `case_fold` is set,
/// folded so they compare equal to normalized keys.
std::set<std::string> load_stopwords(std::istream& in, bool case_fold);
std::set<std::string> load_stopwords(const std::filesystem::path& path, bool case_fold);

/// A finite set of normalized word keys, stored sorted by code point.
class Lexicon {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  Lexicon() = default;
  /// Sorts and deduplicates. Throws ContractError on an empty key.
  explicit Lexicon(std::vector<std::string> words);
  Lexicon(std::initializer_list<std::string> words);

  /// `sorted_unique` must already be strictly ascending; checked.
  static Lexicon from_sorted(std::vector<std::string> sorted_unique);

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(std::string_view word) const;
  const_iterator begin() const noexcept { return words_.begin(); }
  const_iterator end() const noexcept { return words_.end(); }
  const std::vector<std::string>& words() const noexcept { return words_; }

  bool is_subset_of(const Lexicon& other) const;
  std::size_t intersection_size(const Lexicon& other) const;

  bool operator==(const Lexicon&) const = default;

 private:
  std::vector<std::string> words_;
};

/// Writes one word per line, sorted, LF endings.
void write_lexicon(const Lexicon& lexicon, std::ostream& out);

/// Returns the normalized word key for a content token, or nothing when the
/// token's POS is not a content tag or its key is a stopword.
std::optional<std::string> normalize(const Token& token, const FilterConfig& config);

/// All distinct content keys in the corpus (U).
Lexicon build_universe(const Corpus& corpus, const FilterConfig& config);

/// Content keys occurring in at least one annotated sentence (M). M ⊆ U.
Lexicon build_gold(const Corpus& corpus, const FilterConfig& config);

using WordId = std::uint32_t;

/// Frequency tables over content, non-stopword tokens.
///
/// Word ids index `words`, which is sorted by code point, so ordering by id is
/// the same as ordering by key. Per-document rows are sorted by id.
struct CorpusIndex {
  struct Posting {
    WordId word;
    std::uint32_t count;

    bool operator==(const Posting&) const = default;
  };

  std::vector<std::string> words;
  std::vector<std::uint64_t> corpus_freq;
  std::vector<std::uint32_t> doc_count;
  /// One row per corpus document, in corpus order (rows may be empty).
  std::vector<std::vector<Posting>> doc_freq;
  std::vector<std::string> document_ids;

  std::size_t n_documents() const noexcept { return doc_freq.size(); }
  std::size_t n_words() const noexcept { return words.size(); }
  std::optional<WordId> find(std::string_view word) const;
  Lexicon universe() const { return Lexicon::from_sorted(words); }

  bool operator==(const CorpusIndex&) const = default;
};

CorpusIndex build_index(const Corpus& corpus, const FilterConfig& config);

}  // namespace vocabsweep
