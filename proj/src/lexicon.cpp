#include "vocabsweep/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "vocabsweep/error.hpp"
#include "vocabsweep/unicode.hpp"

namespace vocabsweep {

void FilterConfig::validate() const {
  if (content_pos.empty()) throw ContractError("content POS set must not be empty");
}

std::set<std::string> load_stopwords(std::istream& in, bool case_fold) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string word = unicode::trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(case_fold ? unicode::case_fold(word) : std::move(word));
  }
  return words;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path, bool case_fold) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file " + path.string());
  return load_stopwords(in, case_fold);
}

Lexicon::Lexicon(std::vector<std::string> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  if (!words_.empty() && words_.front().empty()) throw ContractError("lexicon keys must be non-empty");
}

Lexicon::Lexicon(std::initializer_list<std::string> words)
    : Lexicon(std::vector<std::string>(words)) {}

Lexicon Lexicon::from_sorted(std::vector<std::string> sorted_unique) {
  for (std::size_t i = 0; i < sorted_unique.size(); ++i) {
    if (sorted_unique[i].empty()) throw ContractError("lexicon keys must be non-empty");
    if (i > 0 && !(sorted_unique[i - 1] < sorted_unique[i]))
      throw ContractError("Lexicon::from_sorted: keys not strictly ascending");
  }
  Lexicon lexicon;
  lexicon.words_ = std::move(sorted_unique);
  return lexicon;
}

bool Lexicon::contains(std::string_view word) const {
  return std::binary_search(words_.begin(), words_.end(), word,
                            [](std::string_view a, std::string_view b) { return a < b; });
}

bool Lexicon::is_subset_of(const Lexicon& other) const {
  return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

std::size_t Lexicon::intersection_size(const Lexicon& other) const {
  std::size_t n = 0;
  auto a = words_.begin();
  auto b = other.words_.begin();
  while (a != words_.end() && b != other.words_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const auto& word : lexicon) out << word << '\n';
}

std::optional<std::string> normalize(const Token& token, const FilterConfig& config) {
  if (!config.content_pos.contains(token.pos)) return std::nullopt;
  const std::string& source =
      (config.word_key_source == WordKeySource::LemmaThenSurface && token.lemma) ? *token.lemma
                                                                                 : token.surface;
  std::string key = unicode::trim(source);
  if (config.case_fold) key = unicode::case_fold(key);
  if (key.empty() || config.stopwords.contains(key)) return std::nullopt;
  return key;
}

namespace {

template <typename Pred>
Lexicon collect_keys(const Corpus& corpus, const FilterConfig& config, Pred include_sentence) {
  config.validate();
  std::vector<std::string> keys;
  for (const auto& doc : corpus.documents)
    for (const auto& sentence : doc.sentences) {
      if (!include_sentence(sentence)) continue;
      for (const auto& token : sentence.tokens)
        if (auto key = normalize(token, config)) keys.push_back(std::move(*key));
    }
  return Lexicon(std::move(keys));
}

}  // namespace

Lexicon build_universe(const Corpus& corpus, const FilterConfig& config) {
  return collect_keys(corpus, config, [](const Sentence&) { return true; });
}

Lexicon build_gold(const Corpus& corpus, const FilterConfig& config) {
  return collect_keys(corpus, config, [](const Sentence& s) { return s.annotated; });
}

std::optional<WordId> CorpusIndex::find(std::string_view word) const {
  auto it = std::lower_bound(words.begin(), words.end(), word,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == words.end() || *it != word) return std::nullopt;
  return static_cast<WordId>(it - words.begin());
}

CorpusIndex build_index(const Corpus& corpus, const FilterConfig& config) {
  config.validate();

  // Per-document counts keyed by string first; ids are assigned once the
  // whole vocabulary is known so that id order matches key order.
  std::vector<std::map<std::string, std::uint32_t>> per_doc(corpus.documents.size());
  std::map<std::string, WordId> vocabulary;
  for (std::size_t d = 0; d < corpus.documents.size(); ++d)
    for (const auto& sentence : corpus.documents[d].sentences)
      for (const auto& token : sentence.tokens)
        if (auto key = normalize(token, config)) {
          ++per_doc[d][*key];
          vocabulary.emplace(std::move(*key), 0);
        }

  CorpusIndex index;
  index.words.reserve(vocabulary.size());
  for (auto& [word, id] : vocabulary) {
    id = static_cast<WordId>(index.words.size());
    index.words.push_back(word);
  }
  index.corpus_freq.assign(index.words.size(), 0);
  index.doc_count.assign(index.words.size(), 0);
  index.doc_freq.resize(corpus.documents.size());
  index.document_ids.reserve(corpus.documents.size());

  for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
    index.document_ids.push_back(corpus.documents[d].id);
    auto& row = index.doc_freq[d];
    row.reserve(per_doc[d].size());
    for (const auto& [word, count] : per_doc[d]) {
      const WordId id = vocabulary.at(word);
      row.push_back({id, count});
      index.corpus_freq[id] += count;
      ++index.doc_count[id];
    }
  }
  return index;
}

}  // namespace vocabsweep
