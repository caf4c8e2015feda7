#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vocabsweep {

// Corpora arrive pre-tokenized, lemmatized and POS-tagged. Nothing here does
// linguistic analysis; the types only carry what the tagger produced.

struct Token {
  std::string surface;
  std::optional<std::string> lemma;
  std::string pos;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string id;
  bool annotated = false;
  /// Present only on annotated sentences.
  std::optional<std::string> message_type;
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::string name;
  std::vector<Document> documents;

  bool operator==(const Corpus&) const = default;

  std::size_t token_count() const;
  std::size_t sentence_count() const;
  std::size_t annotated_sentence_count() const;
};

/// A validated corpus plus the non-fatal diagnostics produced while reading it
/// (unknown fields, empty sentences, documents without sentences).
struct LoadedCorpus {
  Corpus corpus;
  std::vector<std::string> warnings;
};

/// Parses and validates the JSON interchange format:
///
///   {"name": str,
///    "documents": [{"id": str,
///                   "sentences": [{"id": str, "annotated": bool,
///                                  "message_type": str?,
///                                  "tokens": [{"surface": str,
///                                              "lemma": str?,
///                                              "pos": str}]}]}]}
///
/// Throws ParseError (with line/column) on malformed JSON and ValidationError
/// on invariant violations such as duplicate ids or a message_type on an
/// unannotated sentence.
LoadedCorpus parse_corpus(std::string_view text);

/// Reads a file and forwards to parse_corpus. Throws IoError if unreadable.
LoadedCorpus load_corpus(const std::filesystem::path& path);

/// Serializes to the interchange format. parse_corpus(write_corpus(c)).corpus == c.
std::string write_corpus(const Corpus& corpus);

/// Throws ValidationError if any structural invariant is broken. parse_corpus
/// already calls this; it is exposed for corpora built in memory.
void validate_corpus(const Corpus& corpus, std::vector<std::string>* warnings = nullptr);

}  // namespace vocabsweep
