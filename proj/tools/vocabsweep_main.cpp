// vocabsweep: corpus statistics, gold/extracted lexicons and threshold sweeps
// from the command line. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vocabsweep/vocabsweep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string corpus_path;
  std::string stopwords_path;  // empty: no stopwords
  std::vector<std::string> pos_tags{"VERB", "NOUN"};
  std::string word_key = "lemma";
  bool no_case_fold = false;
  std::string measure;
  int threshold = 0;
  double fallout_cap = 0.10;
  std::string out_dir = "report";
  std::string output_file;  // empty: stdout
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using CorpusPtr = std::unique_ptr<vs_corpus, Deleter<vs_corpus, vs_corpus_free>>;
using ConfigPtr = std::unique_ptr<vs_config, Deleter<vs_config, vs_config_free>>;
using LexiconPtr = std::unique_ptr<vs_lexicon, Deleter<vs_lexicon, vs_lexicon_free>>;
using SweepsPtr = std::unique_ptr<vs_sweeps, Deleter<vs_sweeps, vs_sweeps_free>>;

// Carries an exit code out of a failed library call.
struct Failure {
  int exit_code;
};

int exit_code_for(vs_status status) {
  switch (status) {
    case VS_OK: return kExitOk;
    case VS_ERR_IO:
    case VS_ERR_INTERNAL: return kExitIo;
    default: return kExitUsage;
  }
}

void check(vs_status status) {
  if (status == VS_OK) return;
  std::fprintf(stderr, "error: %s: %s\n", vs_status_name(status), vs_last_error());
  throw Failure{exit_code_for(status)};
}

CorpusPtr load_corpus(const CliConfig& cfg) {
  vs_corpus* raw = nullptr;
  check(vs_corpus_load(cfg.corpus_path.c_str(), &raw));
  CorpusPtr corpus(raw);
  for (size_t i = 0; i < vs_corpus_warning_count(corpus.get()); ++i)
    std::fprintf(stderr, "warning: %s\n", vs_corpus_warning(corpus.get(), i));
  return corpus;
}

ConfigPtr make_config(const CliConfig& cfg) {
  ConfigPtr config(vs_config_new());
  if (!config) {
    std::fprintf(stderr, "error: out of memory\n");
    throw Failure{kExitIo};
  }
  check(vs_config_set_case_fold(config.get(), cfg.no_case_fold ? 0 : 1));
  check(vs_config_set_word_key(config.get(),
                               cfg.word_key == "surface" ? VS_WORD_KEY_SURFACE : VS_WORD_KEY_LEMMA));
  check(vs_config_clear_content_pos(config.get()));
  for (const auto& tag : cfg.pos_tags) check(vs_config_add_content_pos(config.get(), tag.c_str()));
  if (!cfg.stopwords_path.empty())
    check(vs_config_load_stopwords(config.get(), cfg.stopwords_path.c_str()));
  return config;
}

vs_measure measure_of(const CliConfig& cfg) {
  vs_measure measure{};
  check(vs_measure_parse(cfg.measure.c_str(), &measure));
  return measure;
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int cmd_validate(const CliConfig& cfg) {
  auto corpus = load_corpus(cfg);
  std::printf("ok: %zu documents\n", vs_corpus_document_count(corpus.get()));
  return kExitOk;
}

int cmd_stats(const CliConfig& cfg, bool write_csv) {
  auto corpus = load_corpus(cfg);
  auto config = make_config(cfg);
  vs_stats stats{};
  check(vs_compute_stats(corpus.get(), config.get(), &stats));

  const std::pair<const char*, uint64_t> fields[] = {
      {"Documents", stats.n_documents},
      {"Tokens", stats.n_tokens},
      {"Sentences", stats.n_sentences},
      {"Annotated Sentences", stats.n_annotated_sentences},
      {"Distinct Content Words in the Corpus", stats.n_distinct_vn_corpus},
      {"Distinct Content Words in the Messages", stats.n_distinct_vn_messages},
  };
  for (const auto& [label, value] : fields)
    std::printf("%-40s %llu\n", (std::string(label) + ":").c_str(),
                static_cast<unsigned long long>(value));

  if (write_csv) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    const auto path = std::filesystem::path(cfg.out_dir) / "stats.csv";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
      return kExitIo;
    }
    out << "n_documents,n_tokens,n_sentences,n_annotated_sentences,n_distinct_vn_corpus,"
           "n_distinct_vn_messages\n"
        << stats.n_documents << ',' << stats.n_tokens << ',' << stats.n_sentences << ','
        << stats.n_annotated_sentences << ',' << stats.n_distinct_vn_corpus << ','
        << stats.n_distinct_vn_messages << '\n';
    if (!out.flush()) {
      std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
      return kExitIo;
    }
  }
  return kExitOk;
}

int write_lexicon(const vs_lexicon* lexicon, const CliConfig& cfg) {
  check(vs_lexicon_write(lexicon, cfg.output_file.empty() ? nullptr : cfg.output_file.c_str()));
  return kExitOk;
}

int cmd_gold(const CliConfig& cfg) {
  auto corpus = load_corpus(cfg);
  auto config = make_config(cfg);
  vs_lexicon* raw = nullptr;
  check(vs_build_gold(corpus.get(), config.get(), &raw));
  LexiconPtr gold(raw);
  if (vs_lexicon_size(gold.get()) == 0)
    std::fprintf(stderr, "warning: gold lexicon is empty (no annotated content words)\n");
  return write_lexicon(gold.get(), cfg);
}

int cmd_extract(const CliConfig& cfg) {
  auto corpus = load_corpus(cfg);
  auto config = make_config(cfg);
  vs_lexicon* raw = nullptr;
  check(vs_extract(corpus.get(), config.get(), measure_of(cfg), cfg.threshold, &raw));
  LexiconPtr lexicon(raw);
  return write_lexicon(lexicon.get(), cfg);
}

void print_metrics_csv(const vs_metrics& m) {
  std::printf("%s,%d,%s,%s,%s,%s,%llu,%llu,%llu,%llu\n", vs_measure_name(m.measure), m.threshold,
              fmt4(m.precision).c_str(), fmt4(m.recall).c_str(), fmt4(m.f_measure).c_str(),
              fmt4(m.fallout).c_str(), static_cast<unsigned long long>(m.extracted_size),
              static_cast<unsigned long long>(m.true_positives),
              static_cast<unsigned long long>(m.universe_size),
              static_cast<unsigned long long>(m.gold_size));
}

int cmd_evaluate(const CliConfig& cfg) {
  auto corpus = load_corpus(cfg);
  auto config = make_config(cfg);
  vs_metrics metrics{};
  check(vs_evaluate(corpus.get(), config.get(), measure_of(cfg), cfg.threshold, &metrics));
  std::printf(
      "measure,threshold,precision,recall,f_measure,fallout,extracted_size,true_positives,"
      "universe_size,gold_size\n");
  print_metrics_csv(metrics);
  if (metrics.precision_defaulted)
    std::fprintf(stderr, "note: extracted set is empty; precision set by convention\n");
  return kExitOk;
}

void print_point(const char* label, const vs_metrics& m) {
  std::printf("  %-18s threshold %3d  P=%s R=%s F=%s fallout=%s |E|=%llu\n", label, m.threshold,
              fmt4(m.precision).c_str(), fmt4(m.recall).c_str(), fmt4(m.f_measure).c_str(),
              fmt4(m.fallout).c_str(), static_cast<unsigned long long>(m.extracted_size));
}

int cmd_sweep(const CliConfig& cfg) {
  auto corpus = load_corpus(cfg);
  auto config = make_config(cfg);
  vs_sweeps* raw = nullptr;
  check(vs_sweep_all(corpus.get(), config.get(), cfg.fallout_cap, &raw));
  SweepsPtr sweeps(raw);
  check(vs_sweeps_write_report(sweeps.get(), cfg.out_dir.c_str()));

  std::optional<vs_metrics> best, best_capped;
  for (size_t i = 0; i < vs_sweeps_count(sweeps.get()); ++i) {
    vs_metrics f{}, capped{};
    int has_capped = 0;
    check(vs_sweeps_best(sweeps.get(), i, &f, &capped, &has_capped));
    std::printf("%s (%zu thresholds)\n", vs_measure_name(f.measure),
                vs_sweeps_row_count(sweeps.get(), i));
    print_point("best F", f);
    if (has_capped)
      print_point("best F under cap", capped);
    else
      std::printf("  %-18s none\n", "best F under cap");
    if (!best || f.f_measure > best->f_measure) best = f;
    if (has_capped && (!best_capped || capped.f_measure > best_capped->f_measure))
      best_capped = capped;
  }
  std::printf("\n");
  std::printf("Best F-measure: %s @ %d (F=%s, fallout=%s)\n", vs_measure_name(best->measure),
              best->threshold, fmt4(best->f_measure).c_str(), fmt4(best->fallout).c_str());
  if (best_capped)
    std::printf("Best F-measure with fallout <= %s: %s @ %d (F=%s, fallout=%s)\n",
                fmt4(cfg.fallout_cap).c_str(), vs_measure_name(best_capped->measure),
                best_capped->threshold, fmt4(best_capped->f_measure).c_str(),
                fmt4(best_capped->fallout).c_str());
  else
    std::printf("Best F-measure with fallout <= %s: none\n", fmt4(cfg.fallout_cap).c_str());
  std::printf("Report written to %s\n", cfg.out_dir.c_str());
  return kExitOk;
}

void add_filter_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--corpus", cfg.corpus_path, "Corpus JSON file")->required();
  cmd->add_option("--stopwords", cfg.stopwords_path, "Stopword list, one word per line");
  cmd->add_option("--pos", cfg.pos_tags, "Content POS tag (repeatable)")
      ->default_str("VERB NOUN");
  cmd->add_option("--word-key", cfg.word_key, "Word key source")
      ->check(CLI::IsMember({"lemma", "surface"}))
      ->default_str("lemma");
  cmd->add_flag("--no-case-fold", cfg.no_case_fold, "Keep word keys case-sensitive");
}

void add_measure_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--measure", cfg.measure, "Extraction measure")
      ->check(CLI::IsMember({"cf", "df", "tfidf", "idf"}))
      ->required();
  cmd->add_option("--threshold", cfg.threshold,
                  "Percent (1-100) for cf/df/tfidf, minimum documents for idf")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Extract and evaluate vocabularies from message-annotated corpora"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Parse and validate a corpus");
  validate->add_option("--corpus", cfg.corpus_path, "Corpus JSON file")->required();

  auto* stats = app.add_subcommand("stats", "Print corpus statistics");
  add_filter_options(stats, cfg);
  auto* stats_out = stats->add_option("--out", cfg.out_dir, "Also write stats.csv into this directory");

  auto* gold = app.add_subcommand("gold", "Write the gold lexicon (content words of annotated sentences)");
  add_filter_options(gold, cfg);
  gold->add_option("-o,--output", cfg.output_file, "Output file (default: stdout)");

  auto* extract = app.add_subcommand("extract", "Write the lexicon selected by one measure");
  add_filter_options(extract, cfg);
  add_measure_options(extract, cfg);
  extract->add_option("-o,--output", cfg.output_file, "Output file (default: stdout)");

  auto* evaluate = app.add_subcommand("evaluate", "Score one measure/threshold against the gold lexicon");
  add_filter_options(evaluate, cfg);
  add_measure_options(evaluate, cfg);

  auto* sweep = app.add_subcommand("sweep", "Sweep all measures and write CSV/SVG reports");
  add_filter_options(sweep, cfg);
  sweep->add_option("--fallout-cap", cfg.fallout_cap, "Fallout cap for the constrained operating point")
      ->check(CLI::Range(0.0, 1.0))
      ->default_str("0.10");
  sweep->add_option("--out", cfg.out_dir, "Output directory")->default_str("report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*stats) return cmd_stats(cfg, stats_out->count() > 0);
    if (*gold) return cmd_gold(cfg);
    if (*extract) return cmd_extract(cfg);
    if (*evaluate) return cmd_evaluate(cfg);
    if (*sweep) return cmd_sweep(cfg);
  } catch (const Failure& failure) {
    if (failure.exit_code == kExitUsage && (*extract || *evaluate) &&
        std::string(vs_last_error()).find("threshold") != std::string::npos)
      std::fprintf(stderr, "%s", (*extract ? extract : evaluate)->help().c_str());
    return failure.exit_code;
  }
  return kExitUsage;
}
