#include "vocabsweep/reporting.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vocabsweep/error.hpp"

namespace vocabsweep {

std::string format_metric(double value) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.4f", value);
  return buf.data();
}

namespace {

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("write failed");
}

void write_row(std::ostream& out, std::string_view measure, const MetricsRow& row) {
  out << measure << ',' << row.threshold << ',' << format_metric(row.precision) << ','
      << format_metric(row.recall) << ',' << format_metric(row.f_measure) << ','
      << format_metric(row.fallout) << ',' << row.extracted_size << ',' << row.true_positives
      << ',' << row.universe_size << ',' << row.gold_size;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("csv line " + std::to_string(line) + ": bad number \"" + std::string(text) +
                         "\"",
                     line, 1);
  return value;
}

std::string fmt2(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.2f", v);
  return buf.data();
}

}  // namespace

std::size_t write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  const std::string_view name = measure_name(result.kind);
  for (const auto& row : result.rows) {
    write_row(out, name, row);
    out << '\n';
  }
  check_stream(out);
  return result.rows.size();
}

std::vector<MetricsRow> read_csv(std::istream& in) {
  std::vector<MetricsRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw ParseError("csv: unexpected header", 1, 1);
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw ParseError("csv line " + std::to_string(line_no) + ": expected 10 fields", line_no, 1);
    auto kind = parse_measure(f[0]);
    if (!kind) throw ParseError("csv line " + std::to_string(line_no) + ": unknown measure", line_no, 1);

    MetricsRow row;
    row.kind = *kind;
    row.threshold = parse_number<int>(f[1], line_no);
    row.precision = parse_number<double>(f[2], line_no);
    row.recall = parse_number<double>(f[3], line_no);
    row.f_measure = parse_number<double>(f[4], line_no);
    row.fallout = parse_number<double>(f[5], line_no);
    row.extracted_size = parse_number<std::size_t>(f[6], line_no);
    row.true_positives = parse_number<std::size_t>(f[7], line_no);
    row.universe_size = parse_number<std::size_t>(f[8], line_no);
    row.gold_size = parse_number<std::size_t>(f[9], line_no);
    row.precision_defaulted = row.extracted_size == 0;
    rows.push_back(row);
  }
  return rows;
}

void render_svg(const SweepResult& result, std::ostream& out) {
  if (result.rows.size() < 2) throw ContractError("render_svg needs at least two rows");

  constexpr double width = 720, height = 440;
  constexpr double left = 60, right = 170, top = 40, bottom = 56;
  constexpr double plot_w = width - left - right, plot_h = height - top - bottom;

  const int t_min = result.rows.front().threshold;
  const int t_max = result.rows.back().threshold;
  auto x = [&](double t) { return left + (t - t_min) / double(t_max - t_min) * plot_w; };
  auto y = [&](double v) { return top + (1.0 - v) * plot_h; };

  struct Series {
    const char* label;
    const char* id;
    const char* color;
    double MetricsRow::*field;
  };
  static constexpr Series series[] = {
      {"Precision", "precision", "#1f77b4", &MetricsRow::precision},
      {"Recall", "recall", "#2ca02c", &MetricsRow::recall},
      {"F-measure", "f_measure", "#d62728", &MetricsRow::f_measure},
      {"Fallout", "fallout", "#9467bd", &MetricsRow::fallout},
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<title>" << measure_title(result.kind) << " statistics</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << fmt2(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << measure_title(result.kind) << " statistics</text>\n";

  out << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= 10; ++i) {
    const double v = i / 10.0;
    out << "<line x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(y(v)) << "\" x2=\"" << fmt2(left + plot_w)
        << "\" y2=\"" << fmt2(y(v)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(top) << "\" x2=\"" << fmt2(left)
      << "\" y2=\"" << fmt2(top + plot_h) << "\"/>\n"
      << "<line x1=\"" << fmt2(left) << "\" y1=\"" << fmt2(top + plot_h) << "\" x2=\""
      << fmt2(left + plot_w) << "\" y2=\"" << fmt2(top + plot_h) << "\"/>\n"
      << "</g>\n";

  out << "<g class=\"y-ticks\" text-anchor=\"end\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    out << "<text x=\"" << fmt2(left - 6) << "\" y=\"" << fmt2(y(v) + 4) << "\">" << fmt2(v)
        << "</text>\n";
  }
  out << "</g>\n";

  const int span = t_max - t_min;
  const int step = std::max(1, (span + 9) / 10);
  out << "<g class=\"x-ticks\" text-anchor=\"middle\">\n";
  for (int t = t_min; t <= t_max; t += step)
    out << "<text x=\"" << fmt2(x(t)) << "\" y=\"" << fmt2(top + plot_h + 18) << "\">" << t
        << "</text>\n";
  out << "</g>\n";

  const char* x_label =
      is_percent_measure(result.kind) ? "Threshold (%)" : "Threshold (documents)";
  out << "<text x=\"" << fmt2(left + plot_w / 2) << "\" y=\"" << fmt2(height - 12)
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n";

  for (const auto& s : series) {
    out << "<polyline class=\"metric\" id=\"" << s.id << "\" fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& row : result.rows) {
      if (!first) out << ' ';
      first = false;
      out << fmt2(x(row.threshold)) << ',' << fmt2(y(row.*s.field));
    }
    out << "\"/>\n";
  }

  const double best_x = x(result.best_f.threshold);
  out << "<line class=\"best-f\" x1=\"" << fmt2(best_x) << "\" y1=\"" << fmt2(top) << "\" x2=\""
      << fmt2(best_x) << "\" y2=\"" << fmt2(top + plot_h)
      << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n"
      << "<text x=\"" << fmt2(best_x + 4) << "\" y=\"" << fmt2(top + 12) << "\">best F @ "
      << result.best_f.threshold << "</text>\n";

  out << "<g class=\"legend\">\n";
  for (std::size_t i = 0; i < std::size(series); ++i) {
    const double ly = top + 10 + 22.0 * static_cast<double>(i);
    const double lx = left + plot_w + 20;
    out << "<g class=\"legend-entry\"><line x1=\"" << fmt2(lx) << "\" y1=\"" << fmt2(ly)
        << "\" x2=\"" << fmt2(lx + 24) << "\" y2=\"" << fmt2(ly) << "\" stroke=\""
        << series[i].color << "\" stroke-width=\"2\"/><text x=\"" << fmt2(lx + 30) << "\" y=\""
        << fmt2(ly + 4) << "\">" << series[i].label << "</text></g>\n";
  }
  out << "</g>\n</svg>\n";
  check_stream(out);
}

std::vector<SummaryEntry> summarize(std::span<const SweepResult> results) {
  std::vector<SummaryEntry> entries;
  for (const auto& r : results) {
    entries.push_back({r.kind, "best_f", r.best_f, r.fallout_cap});
    if (r.best_f_under_cap)
      entries.push_back({r.kind, "best_f_under_cap", *r.best_f_under_cap, r.fallout_cap});
  }
  return entries;
}

std::optional<SummaryEntry> overall_best(std::span<const SweepResult> results, bool under_cap) {
  std::optional<SummaryEntry> best;
  for (const auto& r : results) {
    const std::optional<OperatingPoint> point =
        under_cap ? r.best_f_under_cap : std::optional<OperatingPoint>(r.best_f);
    if (!point) continue;
    if (!best || point->row.f_measure > best->point.row.f_measure)
      best = SummaryEntry{r.kind, under_cap ? "best_f_under_cap" : "best_f", *point, r.fallout_cap};
  }
  return best;
}

std::size_t write_summary_csv(std::span<const SweepResult> results, std::ostream& out) {
  out << "selection,fallout_cap," << kCsvHeader << '\n';
  const auto entries = summarize(results);
  for (const auto& e : entries) {
    out << e.selection << ',' << format_metric(e.fallout_cap) << ',';
    write_row(out, measure_name(e.kind), e.point.row);
    out << '\n';
  }
  check_stream(out);
  return entries.size();
}

namespace {

template <typename Writer>
std::filesystem::path write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  writer(out);
  out.close();
  if (!out) throw IoError("error writing " + path.string());
  return path;
}

}  // namespace

ReportBundle write_report_bundle(std::span<const SweepResult> results,
                                 const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec || !std::filesystem::is_directory(directory))
    throw IoError("cannot create output directory " + directory.string());

  ReportBundle bundle;
  for (const auto& result : results) {
    const std::string stem(measure_name(result.kind));
    bundle.csv_paths.push_back(write_file(directory / (stem + ".csv"),
                                          [&](std::ostream& out) { write_csv(result, out); }));
    if (result.rows.size() < 2) {
      bundle.warnings.push_back(stem + ": single-threshold sweep, no curve rendered");
      continue;
    }
    bundle.svg_paths.push_back(write_file(directory / (stem + ".svg"),
                                          [&](std::ostream& out) { render_svg(result, out); }));
  }
  bundle.summary_path = write_file(directory / "summary.csv",
                                   [&](std::ostream& out) { write_summary_csv(results, out); });
  bundle.summary = summarize(results);
  return bundle;
}

}  // namespace vocabsweep
