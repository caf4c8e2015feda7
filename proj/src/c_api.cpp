#include "vocabsweep/vocabsweep.h"

#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "vocabsweep/corpus.hpp"
#include "vocabsweep/error.hpp"
#include "vocabsweep/lexicon.hpp"
#include "vocabsweep/measures.hpp"
#include "vocabsweep/reporting.hpp"
#include "vocabsweep/stats.hpp"
#include "vocabsweep/sweep.hpp"
#include "vocabsweep/unicode.hpp"

struct vs_corpus {
  vocabsweep::LoadedCorpus loaded;
};

struct vs_config {
  vocabsweep::FilterConfig filter;
};

struct vs_lexicon {
  vocabsweep::Lexicon lexicon;
};

struct vs_sweeps {
  std::vector<vocabsweep::SweepResult> results;
};

namespace {

thread_local std::string g_last_error;

vs_status fail(vs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body` and maps library exceptions onto status codes.
template <typename F>
vs_status guarded(F&& body) {
  try {
    body();
    return VS_OK;
  } catch (const vocabsweep::ParseError& e) {
    return fail(VS_ERR_PARSE, e.what());
  } catch (const vocabsweep::ValidationError& e) {
    return fail(VS_ERR_VALIDATION, e.what());
  } catch (const vocabsweep::ContractError& e) {
    return fail(VS_ERR_CONTRACT, e.what());
  } catch (const vocabsweep::IoError& e) {
    return fail(VS_ERR_IO, e.what());
  } catch (const vocabsweep::EmptyVocabularyError& e) {
    return fail(VS_ERR_NO_VOCABULARY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VS_ERR_INTERNAL, "unknown error");
  }
}

vocabsweep::MeasureKind to_kind(vs_measure m) {
  switch (m) {
    case VS_MEASURE_COLLECTION_FREQ: return vocabsweep::MeasureKind::CollectionFreq;
    case VS_MEASURE_DOCUMENT_FREQ: return vocabsweep::MeasureKind::DocumentFreq;
    case VS_MEASURE_TFIDF: return vocabsweep::MeasureKind::TfIdf;
    case VS_MEASURE_INTERDOC_FREQ: return vocabsweep::MeasureKind::InterdocFreq;
  }
  throw vocabsweep::ContractError("unknown measure");
}

vs_measure from_kind(vocabsweep::MeasureKind kind) {
  return static_cast<vs_measure>(static_cast<int>(kind));
}

vs_metrics to_c(const vocabsweep::MetricsRow& row) {
  return vs_metrics{from_kind(row.kind), row.threshold,       row.precision,
                    row.recall,          row.f_measure,       row.fallout,
                    row.extracted_size,  row.true_positives,  row.universe_size,
                    row.gold_size,       row.precision_defaulted ? 1 : 0};
}

bool missing(const void* p, const char* what, vs_status& status) {
  if (p != nullptr) return false;
  status = fail(VS_ERR_ARGUMENT, std::string(what) + " is NULL");
  return true;
}

}  // namespace

extern "C" {

const char* vs_last_error(void) { return g_last_error.c_str(); }

const char* vs_status_name(vs_status status) {
  switch (status) {
    case VS_OK: return "ok";
    case VS_ERR_IO: return "io error";
    case VS_ERR_PARSE: return "parse error";
    case VS_ERR_VALIDATION: return "validation error";
    case VS_ERR_ARGUMENT: return "invalid argument";
    case VS_ERR_CONTRACT: return "contract violation";
    case VS_ERR_NO_VOCABULARY: return "no content vocabulary";
    case VS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* vs_measure_name(vs_measure measure) {
  switch (measure) {
    case VS_MEASURE_COLLECTION_FREQ: return "cf";
    case VS_MEASURE_DOCUMENT_FREQ: return "df";
    case VS_MEASURE_TFIDF: return "tfidf";
    case VS_MEASURE_INTERDOC_FREQ: return "idf";
  }
  return nullptr;
}

vs_status vs_measure_parse(const char* name, vs_measure* out) {
  vs_status status = VS_OK;
  if (missing(name, "name", status) || missing(out, "out", status)) return status;
  auto kind = vocabsweep::parse_measure(name);
  if (!kind) return fail(VS_ERR_ARGUMENT, std::string("unknown measure \"") + name + "\"");
  *out = from_kind(*kind);
  return VS_OK;
}

vs_status vs_corpus_load(const char* path, vs_corpus** out) {
  vs_status status = VS_OK;
  if (missing(path, "path", status) || missing(out, "out", status)) return status;
  *out = nullptr;
  return guarded([&] { *out = new vs_corpus{vocabsweep::load_corpus(path)}; });
}

vs_status vs_corpus_parse(const char* data, size_t length, vs_corpus** out) {
  vs_status status = VS_OK;
  if (missing(data, "data", status) || missing(out, "out", status)) return status;
  *out = nullptr;
  return guarded(
      [&] { *out = new vs_corpus{vocabsweep::parse_corpus(std::string_view(data, length))}; });
}

void vs_corpus_free(vs_corpus* corpus) { delete corpus; }

size_t vs_corpus_document_count(const vs_corpus* corpus) {
  return corpus ? corpus->loaded.corpus.documents.size() : 0;
}

size_t vs_corpus_warning_count(const vs_corpus* corpus) {
  return corpus ? corpus->loaded.warnings.size() : 0;
}

const char* vs_corpus_warning(const vs_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->loaded.warnings.size()) return nullptr;
  return corpus->loaded.warnings[index].c_str();
}

vs_config* vs_config_new(void) { return new (std::nothrow) vs_config{}; }

void vs_config_free(vs_config* config) { delete config; }

vs_status vs_config_clear_content_pos(vs_config* config) {
  vs_status status = VS_OK;
  if (missing(config, "config", status)) return status;
  config->filter.content_pos.clear();
  return VS_OK;
}

vs_status vs_config_add_content_pos(vs_config* config, const char* tag) {
  vs_status status = VS_OK;
  if (missing(config, "config", status) || missing(tag, "tag", status)) return status;
  if (*tag == '\0') return fail(VS_ERR_ARGUMENT, "POS tag must be non-empty");
  return guarded([&] { config->filter.content_pos.insert(tag); });
}

vs_status vs_config_set_word_key(vs_config* config, vs_word_key source) {
  vs_status status = VS_OK;
  if (missing(config, "config", status)) return status;
  switch (source) {
    case VS_WORD_KEY_LEMMA:
      config->filter.word_key_source = vocabsweep::WordKeySource::LemmaThenSurface;
      return VS_OK;
    case VS_WORD_KEY_SURFACE:
      config->filter.word_key_source = vocabsweep::WordKeySource::SurfaceOnly;
      return VS_OK;
  }
  return fail(VS_ERR_ARGUMENT, "unknown word key source");
}

vs_status vs_config_set_case_fold(vs_config* config, int enabled) {
  vs_status status = VS_OK;
  if (missing(config, "config", status)) return status;
  config->filter.case_fold = enabled != 0;
  return VS_OK;
}

vs_status vs_config_add_stopword(vs_config* config, const char* word) {
  vs_status status = VS_OK;
  if (missing(config, "config", status) || missing(word, "word", status)) return status;
  return guarded([&] {
    std::string key = vocabsweep::unicode::trim(word);
    if (config->filter.case_fold) key = vocabsweep::unicode::case_fold(key);
    if (!key.empty()) config->filter.stopwords.insert(std::move(key));
  });
}

vs_status vs_config_load_stopwords(vs_config* config, const char* path) {
  vs_status status = VS_OK;
  if (missing(config, "config", status) || missing(path, "path", status)) return status;
  return guarded([&] {
    auto words = vocabsweep::load_stopwords(std::filesystem::path(path), config->filter.case_fold);
    config->filter.stopwords.merge(words);
  });
}

vs_status vs_compute_stats(const vs_corpus* corpus, const vs_config* config, vs_stats* out) {
  vs_status status = VS_OK;
  if (missing(corpus, "corpus", status) || missing(config, "config", status) ||
      missing(out, "out", status))
    return status;
  return guarded([&] {
    const auto s = vocabsweep::compute_stats(corpus->loaded.corpus, config->filter);
    *out = vs_stats{s.n_documents,           s.n_tokens,
                    s.n_sentences,           s.n_annotated_sentences,
                    s.n_distinct_vn_corpus,  s.n_distinct_vn_messages};
  });
}

vs_status vs_build_universe(const vs_corpus* corpus, const vs_config* config, vs_lexicon** out) {
  vs_status status = VS_OK;
  if (missing(corpus, "corpus", status) || missing(config, "config", status) ||
      missing(out, "out", status))
    return status;
  *out = nullptr;
  return guarded([&] {
    *out = new vs_lexicon{vocabsweep::build_universe(corpus->loaded.corpus, config->filter)};
  });
}

vs_status vs_build_gold(const vs_corpus* corpus, const vs_config* config, vs_lexicon** out) {
  vs_status status = VS_OK;
  if (missing(corpus, "corpus", status) || missing(config, "config", status) ||
      missing(out, "out", status))
    return status;
  *out = nullptr;
  return guarded([&] {
    *out = new vs_lexicon{vocabsweep::build_gold(corpus->loaded.corpus, config->filter)};
  });
}

namespace {

// Range errors on user-supplied thresholds are argument errors, not contract
// violations inside the library.
vs_status check_spec(const vocabsweep::MeasureSpec& spec, std::size_t n_documents) {
  try {
    spec.validate(n_documents);
  } catch (const vocabsweep::ContractError& e) {
    return fail(VS_ERR_ARGUMENT, e.what());
  }
  return VS_OK;
}

}  // namespace

vs_status vs_extract(const vs_corpus* corpus, const vs_config* config, vs_measure measure,
                     int threshold, vs_lexicon** out) {
  vs_status status = VS_OK;
  if (missing(corpus, "corpus", status) || missing(config, "config", status) ||
      missing(out, "out", status))
    return status;
  *out = nullptr;
  if (vs_measure_name(measure) == nullptr) return fail(VS_ERR_ARGUMENT, "unknown measure");
  const vocabsweep::MeasureSpec spec{to_kind(measure), threshold};
  if ((status = check_spec(spec, corpus->loaded.corpus.documents.size())) != VS_OK) return status;
  return guarded([&] {
    const auto index = vocabsweep::build_index(corpus->loaded.corpus, config->filter);
    *out = new vs_lexicon{vocabsweep::extract(index, spec)};
  });
}

void vs_lexicon_free(vs_lexicon* lexicon) { delete lexicon; }

size_t vs_lexicon_size(const vs_lexicon* lexicon) { return lexicon ? lexicon->lexicon.size() : 0; }

const char* vs_lexicon_word(const vs_lexicon* lexicon, size_t index) {
  if (!lexicon || index >= lexicon->lexicon.size()) return nullptr;
  return lexicon->lexicon.words()[index].c_str();
}

vs_status vs_lexicon_write(const vs_lexicon* lexicon, const char* path) {
  vs_status status = VS_OK;
  if (missing(lexicon, "lexicon", status)) return status;
  return guarded([&] {
    if (path == nullptr) {
      vocabsweep::write_lexicon(lexicon->lexicon, std::cout);
      std::cout.flush();
      if (!std::cout) throw vocabsweep::IoError("error writing to stdout");
      return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw vocabsweep::IoError(std::string("cannot open ") + path + " for writing");
    vocabsweep::write_lexicon(lexicon->lexicon, out);
    out.close();
    if (!out) throw vocabsweep::IoError(std::string("error writing ") + path);
  });
}

vs_status vs_evaluate(const vs_corpus* corpus, const vs_config* config, vs_measure measure,
                      int threshold, vs_metrics* out) {
  vs_status status = VS_OK;
  if (missing(corpus, "corpus", status) || missing(config, "config", status) ||
      missing(out, "out", status))
    return status;
  if (vs_measure_name(measure) == nullptr) return fail(VS_ERR_ARGUMENT, "unknown measure");
  const vocabsweep::MeasureSpec spec{to_kind(measure), threshold};
  if ((status = check_spec(spec, corpus->loaded.corpus.documents.size())) != VS_OK) return status;
  return guarded([&] {
    const auto& c = corpus->loaded.corpus;
    const auto index = vocabsweep::build_index(c, config->filter);
    const auto gold = vocabsweep::build_gold(c, config->filter);
    *out = to_c(vocabsweep::evaluate(vocabsweep::extract(index, spec), gold, index.universe(), spec));
  });
}

vs_status vs_sweep_all(const vs_corpus* corpus, const vs_config* config, double fallout_cap,
                       vs_sweeps** out) {
  vs_status status = VS_OK;
  if (missing(corpus, "corpus", status) || missing(config, "config", status) ||
      missing(out, "out", status))
    return status;
  *out = nullptr;
  if (!(fallout_cap >= 0.0 && fallout_cap <= 1.0))
    return fail(VS_ERR_ARGUMENT, "fallout cap must be in [0,1]");
  return guarded([&] {
    *out = new vs_sweeps{
        vocabsweep::run_all_sweeps(corpus->loaded.corpus, config->filter, fallout_cap)};
  });
}

void vs_sweeps_free(vs_sweeps* sweeps) { delete sweeps; }

size_t vs_sweeps_count(const vs_sweeps* sweeps) { return sweeps ? sweeps->results.size() : 0; }

size_t vs_sweeps_row_count(const vs_sweeps* sweeps, size_t sweep) {
  if (!sweeps || sweep >= sweeps->results.size()) return 0;
  return sweeps->results[sweep].rows.size();
}

vs_status vs_sweeps_row(const vs_sweeps* sweeps, size_t sweep, size_t row, vs_metrics* out) {
  vs_status status = VS_OK;
  if (missing(sweeps, "sweeps", status) || missing(out, "out", status)) return status;
  if (sweep >= sweeps->results.size() || row >= sweeps->results[sweep].rows.size())
    return fail(VS_ERR_ARGUMENT, "sweep or row index out of range");
  *out = to_c(sweeps->results[sweep].rows[row]);
  return VS_OK;
}

vs_status vs_sweeps_best(const vs_sweeps* sweeps, size_t sweep, vs_metrics* best_f,
                         vs_metrics* best_under_cap, int* has_under_cap) {
  vs_status status = VS_OK;
  if (missing(sweeps, "sweeps", status)) return status;
  if (sweep >= sweeps->results.size()) return fail(VS_ERR_ARGUMENT, "sweep index out of range");
  const auto& result = sweeps->results[sweep];
  if (best_f) *best_f = to_c(result.best_f.row);
  if (has_under_cap) *has_under_cap = result.best_f_under_cap ? 1 : 0;
  if (best_under_cap && result.best_f_under_cap) *best_under_cap = to_c(result.best_f_under_cap->row);
  return VS_OK;
}

vs_status vs_sweeps_write_report(const vs_sweeps* sweeps, const char* directory) {
  vs_status status = VS_OK;
  if (missing(sweeps, "sweeps", status) || missing(directory, "directory", status)) return status;
  return guarded([&] { vocabsweep::write_report_bundle(sweeps->results, directory); });
}

}  // extern "C"
