#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "scenario.hpp"
#include "vdw/version.hpp"

namespace vdwcalc {

namespace {

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *d);
    return buf;
  }
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return *d > 0 ? "inf" : (*d < 0 ? "-inf" : "nan");
    return *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

double numeric(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<long long>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::string format_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json metadata(const Table& table, const nlohmann::json& scenario) {
  nlohmann::json j;
  j["engine"] = "vdwcalc";
  j["engine_version"] = vdw::kEngineVersion;
  j["scenario"] = scenario;
  j["columns"] = table.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["diagnostics"] = table.row_diagnostics;
  j["warnings"] = table.warnings;
  return j;
}

std::string render_svg(const Table& table) {
  constexpr double W = 640;
  constexpr double H = 400;
  constexpr double L = 70;
  constexpr double R = 20;
  constexpr double T = 30;
  constexpr double B = 50;
  static const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& row : table.rows) {
    const double x = numeric(row[0]);
    if (!std::isfinite(x)) continue;
    for (const auto c : table.plot_columns) {
      const double y = numeric(row[c]);
      if (!std::isfinite(y)) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << table.title << "</text>\n";
  if (!(xmax >= xmin) || !(ymax >= ymin)) {
    svg << "</svg>\n";
    return svg.str();
  }
  const bool logx = xmin > 0.0 && xmax / xmin > 100.0;
  const auto fx = [&](double x) { return logx ? std::log10(x) : x; };
  const double x0 = fx(xmin);
  const double x1 = xmax > xmin ? fx(xmax) : x0 + 1.0;
  const double y0 = ymin;
  const double y1 = ymax > ymin ? ymax : ymin + 1.0;
  const auto px = [&](double x) { return L + (fx(x) - x0) / (x1 - x0) * (W - L - R); };
  const auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  svg << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  char buf[64];
  const auto label = [&](double x, double y, const char* anchor, double v) {
    std::snprintf(buf, sizeof buf, "%.4g", v);
    svg << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"" << anchor << "\" font-size=\"11\">" << buf
        << "</text>\n";
  };
  label(L, H - B + 15, "start", xmin);
  label(W - R, H - B + 15, "end", xmax);
  label(L - 5, H - B, "end", ymin);
  label(L - 5, T + 10, "end", ymax);
  svg << "<text x=\"" << (W + L - R) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\" font-size=\"12\">"
      << table.columns[0] << (logx ? " (log)" : "") << "</text>\n";

  for (std::size_t k = 0; k < table.plot_columns.size(); ++k) {
    const std::size_t c = table.plot_columns[k];
    const char* colour = kColours[k % std::size(kColours)];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : table.rows) {
      const double x = numeric(row[0]);
      const double y = numeric(row[c]);
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(x), py(y));
      svg << buf;
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << W - R - 5 << "\" y=\"" << T + 15 * (k + 1) << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
        << colour << "\">" << table.columns[c] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write output file: " + path.string());
  out << content;
  if (!out) throw InputError("failed writing output file: " + path.string());
}

std::filesystem::path metadata_path(const std::filesystem::path& csv) {
  return std::filesystem::path(csv.string() + ".meta.json");
}

std::filesystem::path svg_path(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".svg");
  return p;
}

}  // namespace vdwcalc
