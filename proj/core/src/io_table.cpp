#include "likegame/io_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "json.hpp"
#include "likegame/errors.hpp"

namespace likegame::io {

namespace {

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

// Round the axis bound outward to a tidy tick step.
std::pair<double, double> padded_range(double lo, double hi) {
  if (!(lo < hi)) {
    lo -= 1.0;
    hi += 1.0;
  }
  double span = hi - lo;
  return {lo - 0.05 * span, hi + 0.05 * span};
}

}  // namespace

std::string format_double(double x) { return nlohmann::json(x).dump(); }

std::string csv_field(const std::string& raw) {
  bool needs_quote = raw.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quote) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_field(row[i]);
    }
    out << '\n';
  };
  write_row(header);
  for (const auto& row : rows) write_row(row);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<std::string> metrics_csv_header(const GameConfig& config) {
  std::vector<std::string> header;
  header.push_back("round");
  for (std::size_t t = 0; t < config.type_centroids.size(); ++t)
    header.push_back("fci_" + std::to_string(t));
  header.push_back("reshare_entropy");
  header.push_back("engagement_concentration");
  for (const PlayerSpec* p : config.players_by_id()) {
    header.push_back("alignment_" + p->id.value);
    header.push_back("dissent_" + p->id.value);
    header.push_back("defined_" + p->id.value);
  }
  return header;
}

std::vector<std::vector<std::string>> metrics_csv_rows(const RunTrace& trace) {
  std::vector<std::vector<std::string>> rows;
  auto ordered = trace.config.players_by_id();
  for (const MetricsRow& m : trace.metrics.rounds) {
    std::vector<std::string> row;
    row.push_back(std::to_string(m.round));
    for (double x : m.fci) row.push_back(format_double(x));
    row.push_back(format_double(m.reshare_entropy));
    row.push_back(format_double(m.engagement_concentration));
    for (const PlayerSpec* p : ordered) {
      auto a = m.exposure_alignment.find(p->id);
      auto d = m.dissent_exposure.find(p->id);
      auto f = m.exposure_defined.find(p->id);
      row.push_back(a == m.exposure_alignment.end() ? "" : format_double(a->second));
      row.push_back(d == m.dissent_exposure.end() ? "" : format_double(d->second));
      row.push_back(f == m.exposure_defined.end() ? "" : (f->second ? "1" : "0"));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_metrics_csv(const RunTrace& trace, const std::filesystem::path& path) {
  write_csv_file(path, metrics_csv_header(trace.config), metrics_csv_rows(trace));
}

void write_line_chart_svg(const std::filesystem::path& path,
                          const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<ChartSeries>& series) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min, y_min = x_min, y_max = x_max;
  for (const ChartSeries& s : series) {
    for (auto [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!std::isfinite(x_min)) throw IoError("no data points to plot");
  auto [xl, xh] = padded_range(x_min, x_max);
  auto [yl, yh] = padded_range(y_min, y_max);

  constexpr double width = 860, height = 480;
  constexpr double left = 70, right = 640, top = 40, bottom = 430;
  auto px = [&](double x) { return left + (x - xl) / (xh - xl) * (right - left); };
  auto py = [&](double y) { return bottom - (y - yl) / (yh - yl) * (bottom - top); };

  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << fixed2((left + right) / 2) << "\" y=\"24\" "
      << "font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">"
      << xml_escape(title) << "</text>\n";

  constexpr int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    double fx = xl + (xh - xl) * i / ticks;
    double fy = yl + (yh - yl) * i / ticks;
    std::string gx = fixed2(px(fx));
    std::string gy = fixed2(py(fy));
    out << "<line x1=\"" << gx << "\" y1=\"" << fixed2(top) << "\" x2=\"" << gx
        << "\" y2=\"" << fixed2(bottom) << "\" stroke=\"#dddddd\"/>\n";
    out << "<line x1=\"" << fixed2(left) << "\" y1=\"" << gy << "\" x2=\""
        << fixed2(right) << "\" y2=\"" << gy << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << gx << "\" y=\"" << fixed2(bottom + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"middle\">"
        << fixed2(fx) << "</text>\n";
    out << "<text x=\"" << fixed2(left - 8) << "\" y=\"" << gy
        << "\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"end\" dominant-baseline=\"middle\">"
        << fixed2(fy) << "</text>\n";
  }
  out << "<rect x=\"" << fixed2(left) << "\" y=\"" << fixed2(top) << "\" width=\""
      << fixed2(right - left) << "\" height=\"" << fixed2(bottom - top)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  out << "<text x=\"" << fixed2((left + right) / 2) << "\" y=\""
      << fixed2(height - 12)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
      << xml_escape(x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << fixed2((top + bottom) / 2)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 "
      << fixed2((top + bottom) / 2) << ")\">" << xml_escape(y_label)
      << "</text>\n";

  constexpr int palette_size = static_cast<int>(std::size(kPalette));
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % palette_size];
    if (series[i].points.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (auto [x, y] : series[i].points) {
      if (!first) out << ' ';
      first = false;
      out << fixed2(px(x)) << ',' << fixed2(py(y));
    }
    out << "\"/>\n";
    double ly = top + 16 + 18.0 * static_cast<double>(i);
    out << "<line x1=\"" << fixed2(right + 12) << "\" y1=\"" << fixed2(ly)
        << "\" x2=\"" << fixed2(right + 36) << "\" y2=\"" << fixed2(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << fixed2(right + 42) << "\" y=\"" << fixed2(ly)
        << "\" font-family=\"sans-serif\" font-size=\"11\" "
           "dominant-baseline=\"middle\">"
        << xml_escape(series[i].name) << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace likegame::io
