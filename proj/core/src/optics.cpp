#include "vdw/optics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace vdw {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& field, std::size_t row, const std::string& source) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw IngestError(source + ": row " + std::to_string(row) + ": cannot parse number '" + field + "'",
                      row);
  }
  return v;
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name,
                         const std::string& source) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw IngestError(source + ": missing column '" + name + "'", 1);
  }
  return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

std::string to_string(Axis axis) { return axis == Axis::x ? "x" : "z"; }

OpticalDataTable::OpticalDataTable(Axis axis, std::vector<OpticalSample> rows)
    : axis_(axis), rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw IngestError("optical table needs at least two rows (degenerate window)");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    // Row numbers here count data rows from 2 so they line up with a file that has a header.
    if (!(rows_[i].omega_eV > 0.0)) {
      throw IngestError("row " + std::to_string(i + 2) + ": frequency must be positive", i + 2);
    }
    if (!(rows_[i].im_eps >= 0.0)) {
      throw IngestError("row " + std::to_string(i + 2) + ": negative Im eps", i + 2);
    }
    if (i > 0 && !(rows_[i].omega_eV > rows_[i - 1].omega_eV)) {
      throw IngestError("row " + std::to_string(i + 2) + ": frequency not strictly increasing", i + 2);
    }
  }
}

TableSchema TableSchema::detect(const std::string& header_line) {
  const auto header = split_csv(header_line);
  TableSchema schema;
  if (std::find(header.begin(), header.end(), "im_eps") != header.end()) {
    schema.im_eps = "im_eps";
  }
  return schema;
}

OpticalDataTable parse_table(std::istream& in, Axis axis, const TableSchema& schema,
                             const std::string& source_name) {
  std::string line;
  std::size_t row = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++row;
    if (!trim(line).empty()) {
      header = split_csv(line);
      break;
    }
  }
  if (header.empty()) throw IngestError(source_name + ": empty file", row);

  const std::size_t i_omega = column_index(header, schema.omega, source_name);
  std::size_t i_a = 0;
  std::size_t i_b = 0;
  const bool direct = schema.im_eps.has_value();
  if (direct) {
    i_a = column_index(header, *schema.im_eps, source_name);
  } else {
    i_a = column_index(header, schema.re_n, source_name);
    i_b = column_index(header, schema.im_n, source_name);
  }

  std::vector<OpticalSample> samples;
  while (std::getline(in, line)) {
    ++row;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split_csv(t);
    if (fields.size() != header.size()) {
      throw IngestError(source_name + ": row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()),
                        row);
    }
    OpticalSample s{};
    s.omega_eV = parse_number(fields[i_omega], row, source_name);
    if (direct) {
      s.im_eps = parse_number(fields[i_a], row, source_name);
      if (s.im_eps < 0.0) {
        throw IngestError(source_name + ": row " + std::to_string(row) + ": negative Im eps", row);
      }
    } else {
      const double re_n = parse_number(fields[i_a], row, source_name);
      const double im_n = parse_number(fields[i_b], row, source_name);
      if (im_n < 0.0) {
        throw IngestError(source_name + ": row " + std::to_string(row) + ": negative Im n", row);
      }
      s.im_eps = 2.0 * re_n * im_n;
      if (s.im_eps < 0.0) {
        throw IngestError(source_name + ": row " + std::to_string(row) + ": negative Re n gives Im eps < 0",
                          row);
      }
    }
    if (!samples.empty() && !(s.omega_eV > samples.back().omega_eV)) {
      throw IngestError(source_name + ": row " + std::to_string(row) + ": frequency not strictly increasing",
                        row);
    }
    if (!(s.omega_eV > 0.0)) {
      throw IngestError(source_name + ": row " + std::to_string(row) + ": frequency must be positive", row);
    }
    samples.push_back(s);
  }
  if (samples.size() < 2) {
    throw IngestError(source_name + ": need at least two rows (degenerate window)", row);
  }
  return OpticalDataTable(axis, std::move(samples));
}

OpticalDataTable load_table(const std::filesystem::path& path, Axis axis) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open optical table: " + path.string());
  std::string header;
  std::getline(in, header);
  const auto schema = TableSchema::detect(header);
  in.clear();
  in.seekg(0);
  return parse_table(in, axis, schema, path.string());
}

OpticalDataTable load_table(const std::filesystem::path& path, Axis axis, const TableSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open optical table: " + path.string());
  return parse_table(in, axis, schema, path.string());
}

std::string serialize_table(const OpticalDataTable& table) {
  std::string out = "omega_eV,im_eps\n";
  char buf[64];
  for (const auto& r : table.rows()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", r.omega_eV, r.im_eps);
    out += buf;
  }
  return out;
}

double interpolate_im_eps_segment(const OpticalDataTable& table, std::size_t i, double omega_eV) {
  const auto& rows = table.rows();
  const auto& a = rows[i];
  const auto& b = rows[i + 1];
  if (omega_eV == a.omega_eV) return a.im_eps;
  if (omega_eV == b.omega_eV) return b.im_eps;
  if (a.im_eps <= 0.0 || b.im_eps <= 0.0) {
    const double t = (omega_eV - a.omega_eV) / (b.omega_eV - a.omega_eV);
    return a.im_eps + t * (b.im_eps - a.im_eps);
  }
  if (a.im_eps == b.im_eps) return a.im_eps;
  const double slope = std::log(b.im_eps / a.im_eps) / std::log(b.omega_eV / a.omega_eV);
  return a.im_eps * std::pow(omega_eV / a.omega_eV, slope);
}

double interpolate_im_eps(const OpticalDataTable& table, double omega_eV) {
  const auto& rows = table.rows();
  if (!(omega_eV >= table.window_lo() && omega_eV <= table.window_hi())) {
    throw std::domain_error("interpolate_im_eps: frequency outside the tabulated window");
  }
  auto it = std::upper_bound(rows.begin(), rows.end(), omega_eV,
                             [](double w, const OpticalSample& s) { return w < s.omega_eV; });
  std::size_t i = static_cast<std::size_t>(it - rows.begin());
  i = i == 0 ? 0 : i - 1;
  if (i + 1 >= rows.size()) i = rows.size() - 2;
  return interpolate_im_eps_segment(table, i, omega_eV);
}

double AxisExtrapolation::low_value(double omega_eV) const {
  if (const auto* d = std::get_if<DrudeTail>(&low)) {
    return d->plasma_eV * d->plasma_eV * d->damping_eV /
           (omega_eV * (omega_eV * omega_eV + d->damping_eV * d->damping_eV));
  }
  return std::get<ConstantTail>(low).im_eps;
}

void AxisExtrapolation::validate() const {
  if (!(high_amplitude_eV3 > 0.0)) throw IngestError("extrapolation: high-frequency amplitude must be > 0");
  if (const auto* d = std::get_if<DrudeTail>(&low)) {
    if (!(d->plasma_eV > 0.0)) throw IngestError("extrapolation: plasma frequency must be > 0");
    if (!(d->damping_eV > 0.0)) throw IngestError("extrapolation: relaxation parameter must be > 0");
  } else if (!(std::get<ConstantTail>(low).im_eps >= 0.0)) {
    throw IngestError("extrapolation: low-frequency constant must be >= 0");
  }
}

ExtrapolationSpec ExtrapolationSpec::graphite(double eps_z0_imag) {
  return ExtrapolationSpec{
      AxisExtrapolation{9.60e3, DrudeTail{1.226, 0.04}},
      AxisExtrapolation{3.49e4, ConstantTail{eps_z0_imag}},
  };
}

JoiningResiduals joining_residuals(const OpticalDataTable& table, const AxisExtrapolation& extrapolation) {
  auto rel = [](double model, double data) {
    if (data == 0.0) return model == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(model - data) / std::abs(data);
  };
  const auto& rows = table.rows();
  return JoiningResiduals{
      rel(extrapolation.low_value(rows.front().omega_eV), rows.front().im_eps),
      rel(extrapolation.high_value(rows.back().omega_eV), rows.back().im_eps),
  };
}

OpticalDataset load_dataset(const std::filesystem::path& descriptor, std::optional<double> eps_z0_override) {
  std::ifstream in(descriptor);
  if (!in) throw IngestError("cannot open optical data descriptor: " + descriptor.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IngestError(descriptor.string() + ": invalid JSON: " + e.what());
  }

  const auto base = descriptor.parent_path();
  auto table_path = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
      throw IngestError(descriptor.string() + ": missing table path '" + key + "'");
    }
    std::filesystem::path p = doc[key].get<std::string>();
    return p.is_absolute() ? p : base / p;
  };

  OpticalDataset ds;
  ds.name = doc.value("name", descriptor.stem().string());
  ds.x = std::make_shared<const OpticalDataTable>(load_table(table_path("x"), Axis::x));
  ds.z = std::make_shared<const OpticalDataTable>(load_table(table_path("z"), Axis::z));

  ds.extrapolation = ExtrapolationSpec::graphite();
  if (doc.contains("extrapolation")) {
    const auto& e = doc["extrapolation"];
    try {
      auto& x = ds.extrapolation.x;
      auto& z = ds.extrapolation.z;
      x.high_amplitude_eV3 = e.value("A_x_eV3", x.high_amplitude_eV3);
      z.high_amplitude_eV3 = e.value("A_z_eV3", z.high_amplitude_eV3);
      auto drude = std::get<DrudeTail>(x.low);
      drude.plasma_eV = e.value("omega_p_eV", drude.plasma_eV);
      drude.damping_eV = e.value("gamma_eV", drude.damping_eV);
      x.low = drude;
      z.low = ConstantTail{e.value("eps_z0_imag", std::get<ConstantTail>(z.low).im_eps)};
    } catch (const nlohmann::json::exception& ex) {
      throw IngestError(descriptor.string() + ": bad extrapolation block: " + ex.what());
    }
  }
  if (eps_z0_override) ds.extrapolation.z.low = ConstantTail{*eps_z0_override};
  ds.extrapolation.x.validate();
  ds.extrapolation.z.validate();

  for (const auto& [table, spec] : {std::pair{ds.x, ds.extrapolation.x}, std::pair{ds.z, ds.extrapolation.z}}) {
    const auto r = joining_residuals(*table, spec);
    if (r.warn()) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "axis %s: extrapolation joins the table poorly (lo %.1f%%, hi %.1f%%)",
                    to_string(table->axis()).c_str(), 100.0 * r.at_lo, 100.0 * r.at_hi);
      ds.warnings.emplace_back(buf);
    }
  }
  return ds;
}

}  // namespace vdw
