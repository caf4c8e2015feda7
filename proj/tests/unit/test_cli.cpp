// Runs the vocabsweep binary end to end.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = VS_CLI_PATH;
const std::string kData = VS_TEST_DATA_DIR;
const std::string kFixture = kData + "/fixture.json";

struct CliResult {
  int exit_code;
  std::string out;
};

// Captures stdout; stderr is folded in when `merge_stderr` is set.
CliResult run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = kCli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("vocabsweep_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(CliValidate, ExitCodes) {
  EXPECT_EQ(run("validate --corpus " + kFixture).exit_code, 0);
  EXPECT_EQ(run("validate --corpus /nonexistent/corpus.json").exit_code, 1);

  const auto dir = scratch("validate");
  std::ofstream(dir / "dup.json")
      << R"({"name":"x","documents":[{"id":"d1","sentences":[]},{"id":"d1","sentences":[]}]})";
  const CliResult dup = run("validate --corpus " + (dir / "dup.json").string(), true);
  EXPECT_EQ(dup.exit_code, 2);
  EXPECT_NE(dup.out.find("\"d1\""), std::string::npos) << dup.out;

  std::ofstream(dir / "broken.json") << "{\"name\": [";
  EXPECT_EQ(run("validate --corpus " + (dir / "broken.json").string()).exit_code, 2);
  fs::remove_all(dir);
}

TEST(CliStats, Fixture) {
  const CliResult r = run("stats --corpus " + kFixture);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  EXPECT_NE(r.out.find("Documents:"), std::string::npos);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first.substr(0, 10), "Documents:");
  EXPECT_EQ(first.back(), '2');

  const auto dir = scratch("stats");
  ASSERT_EQ(run("stats --corpus " + kFixture + " --out " + dir.string()).exit_code, 0);
  EXPECT_EQ(slurp(dir / "stats.csv"),
            "n_documents,n_tokens,n_sentences,n_annotated_sentences,n_distinct_vn_corpus,"
            "n_distinct_vn_messages\n2,9,3,1,4,2\n");
  fs::remove_all(dir);
}

TEST(CliStats, UnannotatedCorpus) {
  const auto dir = scratch("unannotated");
  std::ofstream(dir / "c.json") << R"({"name":"x","documents":[{"id":"d","sentences":[
      {"id":"s","annotated":false,"tokens":[{"surface":"go","pos":"VERB"}]}]}]})";
  const CliResult r = run("stats --corpus " + (dir / "c.json").string());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Annotated Sentences:"), std::string::npos);
  const auto line_start = r.out.find("Annotated Sentences:");
  const auto line = r.out.substr(line_start, r.out.find('\n', line_start) - line_start);
  EXPECT_EQ(line.back(), '0');

  const CliResult gold = run("gold --corpus " + (dir / "c.json").string(), true);
  EXPECT_EQ(gold.exit_code, 0);
  EXPECT_NE(gold.out.find("warning"), std::string::npos);
  fs::remove_all(dir);
}

TEST(CliGold, Fixture) {
  const CliResult r = run("gold --corpus " + kFixture);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "attack\nhostage\n");
}

TEST(CliExtract, Examples) {
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure cf --threshold 50").out,
            "attack\nhostage\n");
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure idf --threshold 1").out,
            "attack\nhostage\nnegotiate\npolice\n");
  const CliResult zero = run("extract --corpus " + kFixture + " --measure cf --threshold 0", true);
  EXPECT_EQ(zero.exit_code, 2);
  EXPECT_NE(zero.out.find("--threshold"), std::string::npos);  // usage text
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure idf --threshold 3").exit_code, 2);
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure bm25 --threshold 3").exit_code, 2);
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure cf").exit_code, 2);

  const auto dir = scratch("extract");
  const auto file = dir / "lex.txt";
  ASSERT_EQ(run("extract --corpus " + kFixture + " --measure df --threshold 50 -o " + file.string())
                .exit_code,
            0);
  EXPECT_EQ(slurp(file), "attack\nhostage\nnegotiate\n");
  fs::remove_all(dir);
}

TEST(CliExtract, FilterFlags) {
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure idf --threshold 1 --stopwords " +
                kData + "/stopwords.txt")
                .out,
            "attack\nhostage\n");
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure idf --threshold 1 --pos VERB").out,
            "attack\nnegotiate\n");
  EXPECT_EQ(run("extract --corpus " + kFixture +
                " --measure idf --threshold 1 --pos VERB --word-key surface --no-case-fold")
                .out,
            "Attacked\nattacks\nnegotiate\nnegotiated\n");
  EXPECT_EQ(run("extract --corpus " + kFixture + " --measure idf --threshold 1 --word-key stem")
                .exit_code,
            2);
}

TEST(CliEvaluate, Fixture) {
  const CliResult r = run("evaluate --corpus " + kFixture + " --measure cf --threshold 50");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("cf,50,1.0000,1.0000,1.0000,0.0000,2,2,4,2\n"), std::string::npos) << r.out;
}

TEST(CliSweep, ArtifactsSummaryAndDeterminism) {
  const auto a = scratch("sweep_a");
  const auto b = scratch("sweep_b");
  const CliResult first = run("sweep --corpus " + kFixture + " --out " + a.string());
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_NE(first.out.find("Best F-measure: cf @ 26"), std::string::npos) << first.out;
  EXPECT_NE(first.out.find("Best F-measure with fallout <= 0.1000: cf @ 26"), std::string::npos);
  ASSERT_EQ(run("sweep --corpus " + kFixture + " --out " + b.string()).exit_code, 0);

  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    const auto name = entry.path().filename();
    EXPECT_EQ(slurp(entry.path()), slurp(b / name)) << name;
  }
  EXPECT_EQ(files, 9u);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(CliSweep, UnwritableOutputAndBadCap) {
  EXPECT_EQ(run("sweep --corpus " + kFixture + " --out /proc/vocabsweep").exit_code, 1);
  EXPECT_EQ(run("sweep --corpus " + kFixture + " --fallout-cap 2 --out /tmp/x").exit_code, 2);
}

TEST(CliUsage, MissingSubcommandOrCorpus) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("stats").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}
