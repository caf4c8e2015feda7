#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vocabsweep/sweep.hpp"

namespace vocabsweep {

inline constexpr const char* kCsvHeader =
    "measure,threshold,precision,recall,f_measure,fallout,extracted_size,true_positives,"
    "universe_size,gold_size";

/// Reals are rendered with exactly four decimals ("%.4f").
std::string format_metric(double value);

/// Header plus one LF-terminated line per row, thresholds ascending.
/// Returns the number of data rows written. Throws IoError if the stream fails.
std::size_t write_csv(const SweepResult& result, std::ostream& out);

/// Parses what write_csv produced. Throws ParseError on a malformed line.
std::vector<MetricsRow> read_csv(std::istream& in);

/// Self-contained SVG: threshold on x, [0,1] on y, one polyline per metric,
/// a four-entry legend and a vertical marker at the best-F threshold.
/// Throws ContractError for fewer than two rows.
void render_svg(const SweepResult& result, std::ostream& out);

/// Selected operating point of one measure, for the summary table.
struct SummaryEntry {
  MeasureKind kind;
  std::string selection;  // "best_f" or "best_f_under_cap"
  OperatingPoint point;
  double fallout_cap;
};

std::vector<SummaryEntry> summarize(std::span<const SweepResult> results);

/// Highest F across all measures (ties: earlier measure, then smaller threshold).
std::optional<SummaryEntry> overall_best(std::span<const SweepResult> results, bool under_cap);

std::size_t write_summary_csv(std::span<const SweepResult> results, std::ostream& out);

struct ReportBundle {
  std::vector<std::filesystem::path> csv_paths;
  std::vector<std::filesystem::path> svg_paths;
  std::filesystem::path summary_path;
  std::vector<SummaryEntry> summary;
  /// Sweeps with a single row get a CSV but no SVG; each is noted here.
  std::vector<std::string> warnings;
};

/// Writes <measure>.csv, <measure>.svg and summary.csv into `directory`,
/// creating it if needed. Throws IoError when anything cannot be written.
ReportBundle write_report_bundle(std::span<const SweepResult> results,
                                 const std::filesystem::path& directory);

}  // namespace vocabsweep
