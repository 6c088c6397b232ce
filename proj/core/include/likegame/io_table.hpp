#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "likegame/trace.hpp"
#include "likegame/types.hpp"

namespace likegame::io {

// Shortest representation that parses back to the same double; matches the
// JSON emitter so CSV and JSONL agree byte-for-byte on every value.
std::string format_double(double x);

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(const std::string& raw);

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

// One row per round: fci per type, both entropies, then alignment, dissent
// and defined per player in id order.
std::vector<std::string> metrics_csv_header(const GameConfig& config);
std::vector<std::vector<std::string>> metrics_csv_rows(const RunTrace& trace);
void write_metrics_csv(const RunTrace& trace, const std::filesystem::path& path);

struct ChartSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

// Self-contained SVG, fixed layout, two-decimal coordinates: reruns over the
// same data produce identical bytes.
void write_line_chart_svg(const std::filesystem::path& path,
                          const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<ChartSeries>& series);

}  // namespace likegame::io
