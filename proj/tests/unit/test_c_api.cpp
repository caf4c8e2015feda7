#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "vocabsweep/vocabsweep.h"

namespace {

const std::string kFixture = std::string(VS_TEST_DATA_DIR) + "/fixture.json";

std::vector<std::string> words(const vs_lexicon* lexicon) {
  std::vector<std::string> out;
  for (size_t i = 0; i < vs_lexicon_size(lexicon); ++i) out.emplace_back(vs_lexicon_word(lexicon, i));
  return out;
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(vs_corpus_load(kFixture.c_str(), &corpus_), VS_OK) << vs_last_error();
    config_ = vs_config_new();
    ASSERT_NE(config_, nullptr);
  }
  void TearDown() override {
    vs_config_free(config_);
    vs_corpus_free(corpus_);
  }

  vs_corpus* corpus_ = nullptr;
  vs_config* config_ = nullptr;
};

}  // namespace

TEST_F(CApi, LoadAndStats) {
  EXPECT_EQ(vs_corpus_document_count(corpus_), 2u);
  EXPECT_EQ(vs_corpus_warning_count(corpus_), 0u);
  vs_stats stats{};
  ASSERT_EQ(vs_compute_stats(corpus_, config_, &stats), VS_OK);
  EXPECT_EQ(stats.n_documents, 2u);
  EXPECT_EQ(stats.n_tokens, 9u);
  EXPECT_EQ(stats.n_sentences, 3u);
  EXPECT_EQ(stats.n_annotated_sentences, 1u);
  EXPECT_EQ(stats.n_distinct_vn_corpus, 4u);
  EXPECT_EQ(stats.n_distinct_vn_messages, 2u);
}

TEST_F(CApi, GoldAndExtract) {
  vs_lexicon* gold = nullptr;
  ASSERT_EQ(vs_build_gold(corpus_, config_, &gold), VS_OK);
  EXPECT_EQ(words(gold), (std::vector<std::string>{"attack", "hostage"}));
  vs_lexicon_free(gold);

  vs_lexicon* tfidf = nullptr;
  ASSERT_EQ(vs_extract(corpus_, config_, VS_MEASURE_TFIDF, 25, &tfidf), VS_OK);
  EXPECT_EQ(words(tfidf), (std::vector<std::string>{"attack", "negotiate"}));
  vs_lexicon_free(tfidf);

  vs_lexicon* bad = nullptr;
  EXPECT_EQ(vs_extract(corpus_, config_, VS_MEASURE_COLLECTION_FREQ, 0, &bad), VS_ERR_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_NE(std::strstr(vs_last_error(), "threshold"), nullptr);
  EXPECT_EQ(vs_extract(corpus_, config_, VS_MEASURE_INTERDOC_FREQ, 3, &bad), VS_ERR_ARGUMENT);
  EXPECT_EQ(vs_extract(corpus_, config_, static_cast<vs_measure>(9), 3, &bad), VS_ERR_ARGUMENT);
}

TEST_F(CApi, ConfigAffectsFiltering) {
  ASSERT_EQ(vs_config_add_stopword(config_, "POLICE"), VS_OK);
  vs_lexicon* universe = nullptr;
  ASSERT_EQ(vs_build_universe(corpus_, config_, &universe), VS_OK);
  EXPECT_EQ(words(universe), (std::vector<std::string>{"attack", "hostage", "negotiate"}));
  vs_lexicon_free(universe);

  ASSERT_EQ(vs_config_clear_content_pos(config_), VS_OK);
  ASSERT_EQ(vs_config_add_content_pos(config_, "VERB"), VS_OK);
  ASSERT_EQ(vs_config_set_word_key(config_, VS_WORD_KEY_SURFACE), VS_OK);
  ASSERT_EQ(vs_config_set_case_fold(config_, 0), VS_OK);
  ASSERT_EQ(vs_build_universe(corpus_, config_, &universe), VS_OK);
  EXPECT_EQ(words(universe),
            (std::vector<std::string>{"Attacked", "attacks", "negotiate", "negotiated"}));
  vs_lexicon_free(universe);

  ASSERT_EQ(vs_config_clear_content_pos(config_), VS_OK);
  EXPECT_EQ(vs_build_universe(corpus_, config_, &universe), VS_ERR_CONTRACT);
  EXPECT_EQ(vs_config_add_content_pos(config_, ""), VS_ERR_ARGUMENT);
  EXPECT_EQ(vs_config_load_stopwords(config_, "/nonexistent/stop.txt"), VS_ERR_IO);
}

TEST_F(CApi, Evaluate) {
  vs_metrics m{};
  ASSERT_EQ(vs_evaluate(corpus_, config_, VS_MEASURE_DOCUMENT_FREQ, 50, &m), VS_OK);
  EXPECT_EQ(m.measure, VS_MEASURE_DOCUMENT_FREQ);
  EXPECT_EQ(m.threshold, 50);
  EXPECT_DOUBLE_EQ(m.precision, 2.0 / 3.0);
  EXPECT_EQ(m.recall, 1.0);
  EXPECT_DOUBLE_EQ(m.f_measure, 0.8);
  EXPECT_EQ(m.fallout, 0.5);
  EXPECT_EQ(m.extracted_size, 3u);
  EXPECT_EQ(m.precision_defaulted, 0);
}

TEST_F(CApi, SweepsAndReport) {
  vs_sweeps* sweeps = nullptr;
  EXPECT_EQ(vs_sweep_all(corpus_, config_, 1.5, &sweeps), VS_ERR_ARGUMENT);
  ASSERT_EQ(vs_sweep_all(corpus_, config_, 0.10, &sweeps), VS_OK);
  ASSERT_EQ(vs_sweeps_count(sweeps), 4u);
  EXPECT_EQ(vs_sweeps_row_count(sweeps, 0), 100u);
  EXPECT_EQ(vs_sweeps_row_count(sweeps, 3), 2u);

  vs_metrics row{};
  ASSERT_EQ(vs_sweeps_row(sweeps, 3, 1, &row), VS_OK);
  EXPECT_EQ(row.measure, VS_MEASURE_INTERDOC_FREQ);
  EXPECT_EQ(row.threshold, 2);
  EXPECT_EQ(vs_sweeps_row(sweeps, 3, 2, &row), VS_ERR_ARGUMENT);

  vs_metrics best{}, capped{};
  int has_capped = -1;
  ASSERT_EQ(vs_sweeps_best(sweeps, 1, &best, &capped, &has_capped), VS_OK);
  EXPECT_EQ(best.threshold, 34);
  EXPECT_EQ(has_capped, 0);
  ASSERT_EQ(vs_sweeps_best(sweeps, 3, &best, &capped, &has_capped), VS_OK);
  EXPECT_EQ(has_capped, 1);
  EXPECT_EQ(capped.threshold, 2);

  const auto dir = std::filesystem::temp_directory_path() / "vocabsweep_c_api_report";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(vs_sweeps_write_report(sweeps, dir.c_str()), VS_OK);
  EXPECT_TRUE(std::filesystem::exists(dir / "summary.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "idf.svg"));
  std::filesystem::remove_all(dir);
  vs_sweeps_free(sweeps);
}

TEST(CApiErrors, StatusCodes) {
  vs_corpus* corpus = nullptr;
  EXPECT_EQ(vs_corpus_load("/nonexistent.json", &corpus), VS_ERR_IO);
  EXPECT_EQ(corpus, nullptr);

  const char* broken = "{\"name\": ";
  EXPECT_EQ(vs_corpus_parse(broken, std::strlen(broken), &corpus), VS_ERR_PARSE);
  EXPECT_NE(std::strstr(vs_last_error(), "line 1"), nullptr) << vs_last_error();

  const char* dup = R"({"name":"x","documents":[{"id":"a","sentences":[]},{"id":"a","sentences":[]}]})";
  EXPECT_EQ(vs_corpus_parse(dup, std::strlen(dup), &corpus), VS_ERR_VALIDATION);
  EXPECT_NE(std::strstr(vs_last_error(), "\"a\""), nullptr);

  const char* empty_doc = R"({"name":"x","documents":[{"id":"a","sentences":[]}]})";
  ASSERT_EQ(vs_corpus_parse(empty_doc, std::strlen(empty_doc), &corpus), VS_OK);
  EXPECT_EQ(vs_corpus_warning_count(corpus), 1u);
  EXPECT_EQ(vs_corpus_warning(corpus, 1), nullptr);
  vs_config* config = vs_config_new();
  vs_sweeps* sweeps = nullptr;
  EXPECT_EQ(vs_sweep_all(corpus, config, 0.1, &sweeps), VS_ERR_NO_VOCABULARY);
  vs_config_free(config);
  vs_corpus_free(corpus);

  EXPECT_EQ(vs_corpus_load(nullptr, &corpus), VS_ERR_ARGUMENT);
  EXPECT_EQ(vs_compute_stats(nullptr, nullptr, nullptr), VS_ERR_ARGUMENT);
}

TEST(CApiErrors, MeasureNames) {
  vs_measure m{};
  ASSERT_EQ(vs_measure_parse("tfidf", &m), VS_OK);
  EXPECT_EQ(m, VS_MEASURE_TFIDF);
  EXPECT_STREQ(vs_measure_name(VS_MEASURE_INTERDOC_FREQ), "idf");
  EXPECT_EQ(vs_measure_parse("bm25", &m), VS_ERR_ARGUMENT);
  EXPECT_STREQ(vs_status_name(VS_ERR_NO_VOCABULARY), "no content vocabulary");
}
