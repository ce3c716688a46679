#pragma once

// Tabulated optical data (one file per crystal axis) and the analytic
// extrapolations used outside the measured window [omega_lo, omega_hi].

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vdw {

enum class Axis { x, z };

std::string to_string(Axis axis);

/// Malformed or physically invalid optical input. `row()` is 1-based and
/// counts the header line; 0 when the problem is not tied to a row.
class IngestError : public std::runtime_error {
 public:
  IngestError(const std::string& what, std::size_t row = 0) : std::runtime_error(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

struct OpticalSample {
  double omega_eV;
  double im_eps;
};

/// Im eps(omega) on [window_lo, window_hi], strictly increasing in omega.
class OpticalDataTable {
 public:
  OpticalDataTable(Axis axis, std::vector<OpticalSample> rows);

  Axis axis() const { return axis_; }
  const std::vector<OpticalSample>& rows() const { return rows_; }
  double window_lo() const { return rows_.front().omega_eV; }
  double window_hi() const { return rows_.back().omega_eV; }

 private:
  Axis axis_;
  std::vector<OpticalSample> rows_;
};

/// Column names used to read a table. With `im_eps` set the file carries Im eps
/// directly; otherwise Re n and Im n are read and Im eps = 2 Re n Im n.
struct TableSchema {
  std::string omega = "omega_eV";
  std::optional<std::string> im_eps;
  std::string re_n = "re_n";
  std::string im_n = "im_n";

  /// Pick the canonical schema matching a header line.
  static TableSchema detect(const std::string& header_line);
};

OpticalDataTable load_table(const std::filesystem::path& path, Axis axis);
OpticalDataTable load_table(const std::filesystem::path& path, Axis axis, const TableSchema& schema);
OpticalDataTable parse_table(std::istream& in, Axis axis, const TableSchema& schema,
                             const std::string& source_name = "<stream>");

/// Canonical `omega_eV,im_eps` CSV, 17 significant digits.
std::string serialize_table(const OpticalDataTable& table);

/// Log-log piecewise-linear Im eps(omega); linear on segments with a
/// non-positive endpoint. Throws std::domain_error outside the window.
double interpolate_im_eps(const OpticalDataTable& table, double omega_eV);

/// Same, with the segment index already known (omega within rows[i]..rows[i+1]).
double interpolate_im_eps_segment(const OpticalDataTable& table, std::size_t i, double omega_eV);

/// Im eps = omega_p^2 gamma / (omega (omega^2 + gamma^2)) below the window.
struct DrudeTail {
  double plasma_eV;
  double damping_eV;
};

/// Im eps = constant below the window.
struct ConstantTail {
  double im_eps;
};

using LowTail = std::variant<DrudeTail, ConstantTail>;

/// Extrapolations for one axis; above the window Im eps = amplitude / omega^3.
struct AxisExtrapolation {
  double high_amplitude_eV3;
  LowTail low;

  double low_value(double omega_eV) const;
  double high_value(double omega_eV) const { return high_amplitude_eV3 / (omega_eV * omega_eV * omega_eV); }
  void validate() const;
};

struct ExtrapolationSpec {
  AxisExtrapolation x;
  AxisExtrapolation z;

  /// Graphite defaults: A_x = 9.60e3 eV^3, A_z = 3.49e4 eV^3, Drude tail with
  /// omega_p = 1.226 eV, gamma = 0.04 eV along x and a constant tail along z.
  static ExtrapolationSpec graphite(double eps_z0_imag = 3.0);
};

/// Relative mismatch |extrapolation - table| / table at both window edges.
struct JoiningResiduals {
  double at_lo;
  double at_hi;
  static constexpr double warning_threshold = 0.10;
  bool warn() const { return at_lo > warning_threshold || at_hi > warning_threshold; }
};

JoiningResiduals joining_residuals(const OpticalDataTable& table, const AxisExtrapolation& extrapolation);

/// Both axes of a uniaxial material plus their extrapolations.
struct OpticalDataset {
  std::shared_ptr<const OpticalDataTable> x;
  std::shared_ptr<const OpticalDataTable> z;
  ExtrapolationSpec extrapolation;
  std::string name = "tabulated";
  std::vector<std::string> warnings;
};

/// Reads a JSON descriptor:
///   { "name": "...", "x": "x.csv", "z": "z.csv",
///     "extrapolation": { "A_x_eV3": ..., "A_z_eV3": ..., "omega_p_eV": ...,
///                        "gamma_eV": ..., "eps_z0_imag": ... } }
/// Table paths are resolved relative to the descriptor. Extrapolation fields
/// default to the graphite values. `eps_z0_override` replaces eps_z0_imag.
OpticalDataset load_dataset(const std::filesystem::path& descriptor,
                            std::optional<double> eps_z0_override = std::nullopt);

}  // namespace vdw
