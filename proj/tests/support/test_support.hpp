#pragma once

// Shared helpers for the unit and acceptance suites: fixture loading and a
// seeded random corpus generator for property tests.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "vocabsweep/corpus.hpp"
#include "vocabsweep/lexicon.hpp"

namespace vstest {

using namespace vocabsweep;

inline std::filesystem::path data_dir() { return VS_TEST_DATA_DIR; }

inline Corpus fixture_corpus() { return load_corpus(data_dir() / "fixture.json").corpus; }

struct GenParams {
  int max_documents = 10;
  int max_vocabulary = 100;
  int max_sentences = 4;
  int max_tokens = 12;
};

/// Random small corpus. Word pool "w000".."wNNN" is skewed so that some
/// words are frequent; surfaces vary in case and inflection while lemmas stay
/// canonical; roughly a quarter of the tokens carry non-content tags.
inline Corpus random_corpus(std::mt19937_64& rng, const GenParams& params = {}) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  const int n_docs = uniform(1, params.max_documents);
  const int vocab = uniform(1, params.max_vocabulary);
  const double annotate_rate = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  static const char* const kTags[] = {"VERB", "NOUN", "NOUN", "VERB", "NOUN", "DET", "ADJ", "ADP"};

  Corpus corpus;
  corpus.name = "random";
  for (int d = 0; d < n_docs; ++d) {
    Document doc;
    doc.id = "doc" + std::to_string(d);
    const int n_sentences = uniform(1, params.max_sentences);
    for (int s = 0; s < n_sentences; ++s) {
      Sentence sentence;
      sentence.id = "s" + std::to_string(s);
      sentence.annotated = chance(annotate_rate);
      if (sentence.annotated && chance(0.7)) sentence.message_type = "m" + std::to_string(uniform(0, 47));
      const int n_tokens = uniform(0, params.max_tokens);
      for (int t = 0; t < n_tokens; ++t) {
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const int w = std::min(vocab - 1, static_cast<int>(u * u * vocab));
        char buf[16];
        std::snprintf(buf, sizeof buf, "w%03d", w);
        const std::string word = buf;

        Token token;
        token.pos = kTags[uniform(0, 7)];
        if (chance(0.7)) {
          token.lemma = word;
          token.surface = chance(0.5) ? word + "s" : "W" + word.substr(1);
        } else {
          token.surface = chance(0.3) ? "W" + word.substr(1) : word;
        }
        sentence.tokens.push_back(std::move(token));
      }
      doc.sentences.push_back(std::move(sentence));
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

/// Default filter, sometimes with a couple of stopwords or surface keys.
inline FilterConfig random_config(std::mt19937_64& rng) {
  FilterConfig config;
  if (std::bernoulli_distribution(0.4)(rng)) config.stopwords = {"w000", "w003"};
  if (std::bernoulli_distribution(0.25)(rng)) config.word_key_source = WordKeySource::SurfaceOnly;
  if (std::bernoulli_distribution(0.15)(rng)) config.case_fold = false;
  return config;
}

}  // namespace vstest
