#include "vocabsweep/corpus.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "vocabsweep/error.hpp"
#include "vocabsweep/unicode.hpp"

namespace vocabsweep {

using nlohmann::json;

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents)
    for (const auto& sentence : doc.sentences) n += sentence.tokens.size();
  return n;
}

std::size_t Corpus::sentence_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents) n += doc.sentences.size();
  return n;
}

std::size_t Corpus::annotated_sentence_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents)
    for (const auto& sentence : doc.sentences) n += sentence.annotated ? 1 : 0;
  return n;
}

namespace {

// Maps a byte offset reported by the JSON lexer to a 1-based line/column.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t stop = std::min(byte, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class Reader {
 public:
  explicit Reader(std::vector<std::string>& warnings) : warnings_(warnings) {}

  Corpus read(const json& root) {
    expect_object(root, "corpus");
    warn_unknown(root, "corpus", {"name", "documents"});

    Corpus corpus;
    corpus.name = required_string(root, "name", "corpus");
    const json& docs = required(root, "documents", "corpus");
    if (!docs.is_array()) fail("corpus.documents: expected an array");
    corpus.documents.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i)
      corpus.documents.push_back(read_document(docs[i], "documents[" + std::to_string(i) + "]"));
    return corpus;
  }

 private:
  [[noreturn]] static void fail(const std::string& message) { throw ValidationError(message); }

  static void expect_object(const json& value, const std::string& where) {
    if (!value.is_object()) fail(where + ": expected an object");
  }

  static const json& required(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) fail(where + ": missing field \"" + key + "\"");
    return *it;
  }

  static std::string required_string(const json& object, const char* key, const std::string& where) {
    const json& value = required(object, key, where);
    if (!value.is_string()) fail(where + "." + key + ": expected a string");
    return value.get<std::string>();
  }

  static std::optional<std::string> optional_string(const json& object, const char* key,
                                                    const std::string& where) {
    auto it = object.find(key);
    if (it == object.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) fail(where + "." + key + ": expected a string or null");
    return it->get<std::string>();
  }

  void warn_unknown(const json& object, const std::string& where,
                    std::initializer_list<std::string_view> known) {
    for (const auto& [key, _] : object.items()) {
      bool found = false;
      for (auto k : known) found = found || key == k;
      if (!found) warnings_.push_back(where + ": ignoring unknown field \"" + key + "\"");
    }
  }

  Document read_document(const json& value, const std::string& where) {
    expect_object(value, where);
    warn_unknown(value, where, {"id", "sentences"});
    Document doc;
    doc.id = required_string(value, "id", where);
    const json& sentences = required(value, "sentences", where);
    if (!sentences.is_array()) fail(where + ".sentences: expected an array");
    doc.sentences.reserve(sentences.size());
    for (std::size_t i = 0; i < sentences.size(); ++i)
      doc.sentences.push_back(
          read_sentence(sentences[i], where + ".sentences[" + std::to_string(i) + "]"));
    return doc;
  }

  Sentence read_sentence(const json& value, const std::string& where) {
    expect_object(value, where);
    warn_unknown(value, where, {"id", "annotated", "message_type", "tokens"});
    Sentence sentence;
    sentence.id = required_string(value, "id", where);
    const json& annotated = required(value, "annotated", where);
    if (!annotated.is_boolean()) fail(where + ".annotated: expected a boolean");
    sentence.annotated = annotated.get<bool>();
    sentence.message_type = optional_string(value, "message_type", where);
    const json& tokens = required(value, "tokens", where);
    if (!tokens.is_array()) fail(where + ".tokens: expected an array");
    sentence.tokens.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i)
      sentence.tokens.push_back(read_token(tokens[i], where + ".tokens[" + std::to_string(i) + "]"));
    return sentence;
  }

  Token read_token(const json& value, const std::string& where) {
    expect_object(value, where);
    warn_unknown(value, where, {"surface", "lemma", "pos"});
    Token token;
    token.surface = required_string(value, "surface", where);
    token.lemma = optional_string(value, "lemma", where);
    token.pos = required_string(value, "pos", where);
    return token;
  }

  std::vector<std::string>& warnings_;
};

json to_json(const Token& token) {
  json out = json::object();
  out["surface"] = token.surface;
  if (token.lemma) out["lemma"] = *token.lemma;
  out["pos"] = token.pos;
  return out;
}

}  // namespace

void validate_corpus(const Corpus& corpus, std::vector<std::string>* warnings) {
  if (corpus.documents.empty()) throw ValidationError("corpus: at least one document is required");

  std::unordered_set<std::string> doc_ids;
  for (const auto& doc : corpus.documents) {
    if (doc.id.empty()) throw ValidationError("document id must be non-empty");
    if (!doc_ids.insert(doc.id).second)
      throw ValidationError("duplicate document id \"" + doc.id + "\"");
    if (doc.sentences.empty() && warnings)
      warnings->push_back("document \"" + doc.id + "\" has no sentences");

    std::unordered_set<std::string> sentence_ids;
    for (const auto& sentence : doc.sentences) {
      const std::string where = "document \"" + doc.id + "\" sentence \"" + sentence.id + "\"";
      if (sentence.id.empty())
        throw ValidationError("document \"" + doc.id + "\": sentence id must be non-empty");
      if (!sentence_ids.insert(sentence.id).second)
        throw ValidationError("duplicate sentence id \"" + sentence.id + "\" in document \"" +
                              doc.id + "\"");
      if (sentence.message_type && !sentence.annotated)
        throw ValidationError(where + ": message_type on an unannotated sentence");
      if (sentence.tokens.empty() && warnings) warnings->push_back(where + " has no tokens");

      for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const Token& token = sentence.tokens[i];
        const std::string at = where + " token " + std::to_string(i);
        if (unicode::trim(token.surface).empty())
          throw ValidationError(at + ": surface is empty");
        if (token.lemma && unicode::trim(*token.lemma).empty())
          throw ValidationError(at + ": lemma is present but empty");
        if (token.pos.empty()) throw ValidationError(at + ": pos is empty");
      }
    }
  }
}

LoadedCorpus parse_corpus(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }

  LoadedCorpus loaded;
  loaded.corpus = Reader(loaded.warnings).read(root);
  validate_corpus(loaded.corpus, &loaded.warnings);
  return loaded;
}

LoadedCorpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading corpus file " + path.string());
  return parse_corpus(text);
}

std::string write_corpus(const Corpus& corpus) {
  json docs = json::array();
  for (const auto& doc : corpus.documents) {
    json sentences = json::array();
    for (const auto& sentence : doc.sentences) {
      json tokens = json::array();
      for (const auto& token : sentence.tokens) tokens.push_back(to_json(token));
      json s = json::object();
      s["id"] = sentence.id;
      s["annotated"] = sentence.annotated;
      if (sentence.message_type) s["message_type"] = *sentence.message_type;
      s["tokens"] = std::move(tokens);
      sentences.push_back(std::move(s));
    }
    docs.push_back(json{{"id", doc.id}, {"sentences", std::move(sentences)}});
  }
  json root = json::object();
  root["name"] = corpus.name;
  root["documents"] = std::move(docs);
  return root.dump(1, '\t') + "\n";
}

}  // namespace vocabsweep
