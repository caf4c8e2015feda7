/*
 * C interface to the vocabsweep library.
 *
 * All objects are opaque handles created by a vs_*_new / vs_*_load call and
 * released with the matching vs_*_free. Functions return a vs_status; on any
 * status other than VS_OK, vs_last_error() describes the failure. The message
 * is stored per thread and stays valid until the next failing call on that
 * thread. Handles may be read from several threads at once but not mutated
 * concurrently.
 */
#ifndef VOCABSWEEP_H_
#define VOCABSWEEP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(VOCABSWEEP_BUILDING)
#define VS_API __attribute__((visibility("default")))
#else
#define VS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vs_status {
  VS_OK = 0,
  VS_ERR_IO = 1,
  VS_ERR_PARSE = 2,
  VS_ERR_VALIDATION = 3,
  VS_ERR_ARGUMENT = 4,
  VS_ERR_CONTRACT = 5,
  VS_ERR_NO_VOCABULARY = 6,
  VS_ERR_INTERNAL = 7
} vs_status;

typedef enum vs_measure {
  VS_MEASURE_COLLECTION_FREQ = 0,
  VS_MEASURE_DOCUMENT_FREQ = 1,
  VS_MEASURE_TFIDF = 2,
  VS_MEASURE_INTERDOC_FREQ = 3
} vs_measure;

typedef enum vs_word_key {
  VS_WORD_KEY_LEMMA = 0, /* lemma, falling back to surface */
  VS_WORD_KEY_SURFACE = 1
} vs_word_key;

typedef struct vs_corpus vs_corpus;
typedef struct vs_config vs_config;
typedef struct vs_lexicon vs_lexicon;
typedef struct vs_sweeps vs_sweeps;

typedef struct vs_stats {
  uint64_t n_documents;
  uint64_t n_tokens;
  uint64_t n_sentences;
  uint64_t n_annotated_sentences;
  uint64_t n_distinct_vn_corpus;
  uint64_t n_distinct_vn_messages;
} vs_stats;

typedef struct vs_metrics {
  vs_measure measure;
  int threshold;
  double precision;
  double recall;
  double f_measure;
  double fallout;
  uint64_t extracted_size;
  uint64_t true_positives;
  uint64_t universe_size;
  uint64_t gold_size;
  int precision_defaulted;
} vs_metrics;

VS_API const char* vs_last_error(void);
VS_API const char* vs_status_name(vs_status status);

/* Measures: short names are "cf", "df", "tfidf", "idf". */
VS_API const char* vs_measure_name(vs_measure measure);
VS_API vs_status vs_measure_parse(const char* name, vs_measure* out);

/* Corpus */
VS_API vs_status vs_corpus_load(const char* path, vs_corpus** out);
VS_API vs_status vs_corpus_parse(const char* data, size_t length, vs_corpus** out);
VS_API void vs_corpus_free(vs_corpus* corpus);
VS_API size_t vs_corpus_document_count(const vs_corpus* corpus);
VS_API size_t vs_corpus_warning_count(const vs_corpus* corpus);
VS_API const char* vs_corpus_warning(const vs_corpus* corpus, size_t index);

/* Filter configuration; a new config holds the defaults (VERB,NOUN; lemma
 * keys; case folding on; no stopwords). */
VS_API vs_config* vs_config_new(void);
VS_API void vs_config_free(vs_config* config);
VS_API vs_status vs_config_clear_content_pos(vs_config* config);
VS_API vs_status vs_config_add_content_pos(vs_config* config, const char* tag);
VS_API vs_status vs_config_set_word_key(vs_config* config, vs_word_key source);
VS_API vs_status vs_config_set_case_fold(vs_config* config, int enabled);
VS_API vs_status vs_config_add_stopword(vs_config* config, const char* word);
/* Uses the config's current case-fold setting to normalize entries. */
VS_API vs_status vs_config_load_stopwords(vs_config* config, const char* path);

VS_API vs_status vs_compute_stats(const vs_corpus* corpus, const vs_config* config, vs_stats* out);

/* Lexicons */
VS_API vs_status vs_build_universe(const vs_corpus* corpus, const vs_config* config,
                                   vs_lexicon** out);
VS_API vs_status vs_build_gold(const vs_corpus* corpus, const vs_config* config, vs_lexicon** out);
/* Threshold must be in [1,100] for percent measures and [1,N] for idf;
 * otherwise VS_ERR_ARGUMENT. */
VS_API vs_status vs_extract(const vs_corpus* corpus, const vs_config* config, vs_measure measure,
                            int threshold, vs_lexicon** out);
VS_API void vs_lexicon_free(vs_lexicon* lexicon);
VS_API size_t vs_lexicon_size(const vs_lexicon* lexicon);
VS_API const char* vs_lexicon_word(const vs_lexicon* lexicon, size_t index);
/* One word per line, sorted. A NULL path writes to stdout. */
VS_API vs_status vs_lexicon_write(const vs_lexicon* lexicon, const char* path);

/* Extraction at one threshold scored against the corpus gold set. */
VS_API vs_status vs_evaluate(const vs_corpus* corpus, const vs_config* config, vs_measure measure,
                             int threshold, vs_metrics* out);

/* Sweeps of all four measures, in cf, df, tfidf, idf order. */
VS_API vs_status vs_sweep_all(const vs_corpus* corpus, const vs_config* config,
                              double fallout_cap, vs_sweeps** out);
VS_API void vs_sweeps_free(vs_sweeps* sweeps);
VS_API size_t vs_sweeps_count(const vs_sweeps* sweeps);
VS_API size_t vs_sweeps_row_count(const vs_sweeps* sweeps, size_t sweep);
VS_API vs_status vs_sweeps_row(const vs_sweeps* sweeps, size_t sweep, size_t row, vs_metrics* out);
/* *has_under_cap is set to 0 when no row meets the fallout cap. */
VS_API vs_status vs_sweeps_best(const vs_sweeps* sweeps, size_t sweep, vs_metrics* best_f,
                                vs_metrics* best_under_cap, int* has_under_cap);
/* Writes <measure>.csv, <measure>.svg and summary.csv into directory. */
VS_API vs_status vs_sweeps_write_report(const vs_sweeps* sweeps, const char* directory);

#ifdef __cplusplus
}
#endif

#endif /* VOCABSWEEP_H_ */
