#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "vdw/cylinder.hpp"
#include "vdw/optics.hpp"
#include "vdw/pairwise.hpp"
#include "vdw/planar.hpp"
#include "vdw/quadrature.hpp"
#include "vdw/validation.hpp"

namespace vdwcalc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Runs fn(i) for i in [0, n) on a small pool; the first exception is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

double nm(double v) { return vdw::units::nm_to_m(v); }

json diagnostics_json(const std::string& species, const vdw::SumDiagnostics& d) {
  return {{"species", species},
          {"n_terms", d.n_terms},
          {"tail_relative", d.tail_relative},
          {"quad_error_relative", d.quad_error_relative},
          {"cap_reached", d.cap_reached},
          {"warnings", d.warnings}};
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Unique warnings in first-seen order.
void collect_warnings(Table& t, const std::string& where, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) {
    const std::string line = where + ": " + w;
    if (std::find(t.warnings.begin(), t.warnings.end(), line) == t.warnings.end()) t.warnings.push_back(line);
  }
}

std::vector<vdw::PolarizabilityModel> particles_of(const Scenario& s) {
  if (s.particles.empty()) throw InputError("no particle given");
  std::vector<vdw::PolarizabilityModel> out;
  for (const auto& p : s.particles) out.push_back(resolve_particle(p));
  return out;
}

std::string suffix(const std::vector<vdw::PolarizabilityModel>& ps, const vdw::PolarizabilityModel& p) {
  return ps.size() > 1 ? "_" + p.species() : "";
}

}  // namespace

Table eps_table(const Scenario& s) {
  const vdw::Material m = s.material.resolve();
  const std::vector<double> xi = s.frequencies.values(s.temperature_K);
  Table t;
  t.title = "eps(i xi) of " + s.material.label();
  t.columns = {"xi_rad_s", "eps_x", "eps_z"};
  t.plot_columns = {1, 2};
  t.rows.resize(xi.size());
  t.row_diagnostics.assign(xi.size(), json::object());
  parallel_for(xi.size(), s.threads, [&](std::size_t i) {
    const vdw::EpsPair e = m.at(xi[i]);
    t.rows[i] = {xi[i], e.x, e.z};
  });
  return t;
}

Table alpha_table(const Scenario& s) {
  const auto ps = particles_of(s);
  const std::vector<double> xi = s.frequencies.values(s.temperature_K);
  Table t;
  t.title = "alpha(i xi)";
  t.columns = {"xi_rad_s"};
  for (const auto& p : ps) {
    t.columns.push_back("alpha_au" + suffix(ps, p));
    t.columns.push_back("alpha_m3" + suffix(ps, p));
    t.plot_columns.push_back(t.columns.size() - 2);
  }
  for (const double x : xi) {
    std::vector<Cell> row{x};
    for (const auto& p : ps) {
      row.emplace_back(p.alpha_au(vdw::units::rad_per_s_to_hartree(x)));
      row.emplace_back(p.alpha_m3(x));
    }
    t.rows.push_back(std::move(row));
    t.row_diagnostics.push_back(json::object());
  }
  return t;
}

namespace {

struct C3Point {
  vdw::WallGeometry wall;
  double a_m;
};

C3Point c3_point(const Scenario& s, const vdw::Material& m, double v) {
  Geometry g = s.geometry;
  const std::string& var = s.scan.variable;
  if (var == "a") {
    g.a_nm = v;
  } else if (var == "R") {
    g.R_nm = v;
  } else if (var == "d") {
    g.d_nm = v;
  } else {
    throw InputError("c3 scan variable must be a, R or d (got '" + var + "')");
  }
  if (!(g.a_nm > 0.0)) throw InputError("c3: particle distance a_nm must be positive");
  vdw::WallGeometry wall = vdw::WallGeometry::semispace(m);
  if (g.kind == "semispace") {
    if (var != "a") throw InputError("c3: a semispace can only be scanned over a");
  } else if (g.kind == "plate") {
    wall = vdw::WallGeometry::plate(m, nm(g.d_nm));
  } else if (g.kind == "cylinder") {
    wall = vdw::WallGeometry::solid_cylinder(m, nm(g.R_nm));
  } else if (g.kind == "shell") {
    wall = vdw::WallGeometry::shell(m, nm(g.R_nm), nm(g.d_nm));
  } else {
    throw InputError("geometry kind must be semispace, plate, cylinder or shell (got '" + g.kind + "')");
  }
  try {
    wall.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("c3: ") + e.what() + " at " + var + " = " + fmt_g(v) + " nm");
  }
  return {wall, nm(g.a_nm)};
}

Table c3_single(const Scenario& s) {
  const auto ps = particles_of(s);
  const vdw::Material m = s.material.resolve();
  const bool cyl = s.geometry.kind == "cylinder" || s.geometry.kind == "shell";
  const bool plate = s.geometry.kind == "plate";
  Table t;
  t.title = "C3 near " + s.geometry.kind + " of " + s.material.label();
  t.columns = {s.scan.variable + "_nm"};
  for (const auto& p : ps) {
    const std::string x = suffix(ps, p);
    t.plot_columns.push_back(t.columns.size());
    if (cyl) {
      for (const char* c : {"C3_au", "C3s_au", "delta_percent", "F_J", "n_terms", "validity"}) t.columns.push_back(c + x);
    } else if (plate) {
      for (const char* c : {"C3_au", "C3s_au", "ratio_to_semispace", "F_J", "n_terms"}) t.columns.push_back(c + x);
    } else {
      for (const char* c : {"C3_au", "F_J", "n_terms"}) t.columns.push_back(c + x);
    }
  }

  const std::size_t n = s.scan.values.size();
  std::vector<C3Point> points;
  for (const double v : s.scan.values) points.push_back(c3_point(s, m, v));
  t.rows.resize(n);
  t.row_diagnostics.resize(n);
  std::vector<std::vector<std::string>> warnings(n);
  parallel_for(n, s.threads, [&](std::size_t i) {
    std::vector<Cell> row{s.scan.values[i]};
    json diag = json::array();
    for (const auto& p : ps) {
      if (cyl) {
        const vdw::CylinderResult r = vdw::c3_cylinder(p, points[i].wall, points[i].a_m, s.temperature_K, s.numerics);
        row.insert(row.end(), {r.lifshitz.c3_au, r.c3_semispace_au, 100.0 * r.delta, r.lifshitz.free_energy_J,
                               static_cast<long long>(r.lifshitz.diagnostics.n_terms),
                               std::string(vdw::to_string(r.validity))});
        diag.push_back(diagnostics_json(p.species(), r.lifshitz.diagnostics));
        warnings[i].insert(warnings[i].end(), r.lifshitz.diagnostics.warnings.begin(),
                           r.lifshitz.diagnostics.warnings.end());
      } else {
        const vdw::LifshitzResult r = vdw::c3_planar(p, points[i].wall, points[i].a_m, s.temperature_K, s.numerics);
        if (plate) {
          const double semi =
              vdw::c3_planar(p, vdw::WallGeometry::semispace(m), points[i].a_m, s.temperature_K, s.numerics).c3_au;
          row.insert(row.end(), {r.c3_au, semi, semi == 0.0 ? 0.0 : r.c3_au / semi});
        } else {
          row.emplace_back(r.c3_au);
        }
        row.insert(row.end(), {r.free_energy_J, static_cast<long long>(r.diagnostics.n_terms)});
        diag.push_back(diagnostics_json(p.species(), r.diagnostics));
        warnings[i].insert(warnings[i].end(), r.diagnostics.warnings.begin(), r.diagnostics.warnings.end());
      }
    }
    t.rows[i] = std::move(row);
    t.row_diagnostics[i] = std::move(diag);
  });
  for (std::size_t i = 0; i < n; ++i) {
    collect_warnings(t, s.scan.variable + " = " + fmt_g(s.scan.values[i]) + " nm", warnings[i]);
  }
  return t;
}

}  // namespace

std::vector<std::pair<std::string, Table>> c3_tables(const Scenario& s) {
  if (!s.series) return {{"", c3_single(s)}};
  if (s.series->variable == s.scan.variable) throw InputError("series and scan must use different variables");
  std::vector<std::pair<std::string, Table>> out;
  for (const double v : s.series->values) {
    Scenario one = s;
    one.series.reset();
    if (s.series->variable == "a") {
      one.geometry.a_nm = v;
    } else if (s.series->variable == "R") {
      one.geometry.R_nm = v;
    } else if (s.series->variable == "d") {
      one.geometry.d_nm = v;
    } else {
      throw InputError("series variable must be a, R or d");
    }
    out.emplace_back("_" + s.series->variable + fmt_g(v) + "nm", c3_single(one));
  }
  return out;
}

Table nanotube_table(const Scenario& s) {
  const auto ps = particles_of(s);
  if (ps.size() != 1) throw InputError("nanotube takes exactly one particle");
  const vdw::PolarizabilityModel& p = ps.front();
  const vdw::Material m = s.material.resolve();
  const Nanotube& nt = s.nanotube;
  Table t;

  if (nt.mode == "transect") {
    if (!(nt.R0_nm > 0.0) || !(nt.R_nm > nt.R0_nm)) throw InputError("transect needs 0 < R0_nm < R_nm");
    for (const double v : s.scan.values) {
      if (!(v > 0.0) || !(v < 2.0 * nt.R0_nm)) throw InputError("transect positions must lie in (0, 2 R0)");
    }
    t.title = "interior transect";
    t.columns = {"position_nm", "F_J"};
    t.plot_columns = {1};
    std::vector<double> pos;
    for (const double v : s.scan.values) pos.push_back(nm(v));
    const auto tr = vdw::interior_transect(p, m, nm(nt.R0_nm), nm(nt.R_nm - nt.R0_nm), pos, s.temperature_K,
                                           s.numerics);
    for (std::size_t i = 0; i < tr.size(); ++i) {
      t.rows.push_back({s.scan.values[i], tr[i].free_energy_J});
      t.row_diagnostics.push_back(json::object());
    }
    return t;
  }

  if (nt.mode != "difference") throw InputError("nanotube mode must be transect or difference");
  if (s.scan.variable != "d") throw InputError("difference mode scans the thickness d");
  const bool fixed_inner = nt.fixed == "R0";
  if (!fixed_inner && nt.fixed != "R") throw InputError("nanotube.fixed must be R0 or R");
  vdw::ExteriorFormula formula;
  if (nt.exterior == "lifshitz") {
    formula = vdw::ExteriorFormula::lifshitz;
  } else if (nt.exterior == "pairwise") {
    formula = vdw::ExteriorFormula::pairwise;
  } else {
    throw InputError("exterior formula must be lifshitz or pairwise");
  }
  t.title = "exterior minus interior free energy";
  t.columns = {"d_nm", "deltaF_J", "F_ext_J", "F_int_J", "R0_nm", "R_nm"};
  t.plot_columns = {1};
  const std::size_t n = s.scan.values.size();
  std::vector<std::pair<double, double>> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = s.scan.values[i];
    const double r0 = fixed_inner ? nt.R0_nm : nt.R_nm - d;
    if (!(d > 0.0) || !(r0 > 0.0)) throw InputError("difference: need d > 0 and a positive inner radius");
    if (!(nt.a_nm > 0.0) || !(nt.a_nm < 2.0 * r0)) throw InputError("difference: need 0 < a < 2 R0");
    radii[i] = {r0, r0 + d};
  }
  t.rows.resize(n);
  t.row_diagnostics.assign(n, json::object());
  parallel_for(n, s.threads, [&](std::size_t i) {
    const double d = s.scan.values[i];
    const auto r = vdw::inside_outside_difference(p, m, nm(radii[i].first), nm(d), nm(nt.a_nm), s.temperature_K,
                                                  formula, s.numerics);
    t.rows[i] = {d, r.difference_J, r.exterior_J, r.interior_J, radii[i].first, radii[i].second};
  });
  return t;
}

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::optional<double> temperature;
  bool svg = false;
  std::string eps_z_variant;
  std::string particle;
  std::string material;
  std::string dataset;
  std::optional<unsigned> threads;
  // eps / alpha
  std::optional<std::size_t> matsubara;
  std::optional<double> xi_min;
  std::optional<double> xi_max;
  std::optional<std::size_t> points;
  // c3
  std::string geometry;
  std::optional<double> R_nm;
  std::optional<double> d_nm;
  std::vector<double> a_nm;
  // nanotube
  std::string exterior;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "Scenario JSON file");
  sub->add_option("--out", f.out, "Output CSV path (stdout when omitted)");
  sub->add_option("--temperature", f.temperature, "Temperature in K");
  sub->add_flag("--svg", f.svg, "Also write an SVG line chart next to the CSV");
  sub->add_option("--eps-z-variant", f.eps_z_variant, "Low-frequency Im eps_z extrapolation for datasets")
      ->check(CLI::IsMember({"const3", "const0"}));
  sub->add_option("--particle", f.particle, "H-10osc, H-1osc, H2-1osc or a g_au,omega_au CSV");
  sub->add_option("--material", f.material, "Bundled material name");
  sub->add_option("--dataset", f.dataset, "Optical data descriptor (JSON)");
  sub->add_option("--threads", f.threads, "Worker threads for scans (0 = all cores)");
}

void add_frequency(CLI::App* sub, Flags& f) {
  sub->add_option("--matsubara", f.matsubara, "Use xi_1..xi_N at the scenario temperature");
  sub->add_option("--xi-min", f.xi_min, "Log grid lower end [rad/s]");
  sub->add_option("--xi-max", f.xi_max, "Log grid upper end [rad/s]");
  sub->add_option("--points", f.points, "Log grid size");
}

Scenario build_scenario(const std::string& command, const Flags& f) {
  Scenario s = f.config.empty() ? Scenario{} : Scenario::load(f.config);
  s.command = command;
  if (!f.out.empty()) s.out_path = f.out;
  if (f.temperature) s.temperature_K = *f.temperature;
  if (f.svg) s.svg = true;
  if (!f.particle.empty()) s.particles = {f.particle};
  if (!f.material.empty()) {
    s.material.bundled = f.material;
    s.material.dataset.reset();
  }
  if (!f.dataset.empty()) s.material.dataset = fs::absolute(f.dataset).lexically_normal().string();
  if (!f.eps_z_variant.empty()) s.material.eps_z_variant = f.eps_z_variant;
  if (f.threads) s.threads = *f.threads;
  if (f.matsubara) s.frequencies.matsubara = *f.matsubara;
  if (f.xi_min) s.frequencies.xi_min_rad_s = *f.xi_min;
  if (f.xi_max) s.frequencies.xi_max_rad_s = *f.xi_max;
  if (f.points) {
    s.frequencies.points = *f.points;
    s.frequencies.matsubara = 0;
  }
  if (!f.geometry.empty()) s.geometry.kind = f.geometry;
  if (f.R_nm) s.geometry.R_nm = *f.R_nm;
  if (f.d_nm) s.geometry.d_nm = *f.d_nm;
  if (!f.a_nm.empty()) {
    nlohmann::json g{{"variable", "a"}, {"values_nm", f.a_nm}};
    s.scan = parse_grid(g);
  }
  if (!f.exterior.empty()) s.nanotube.exterior = f.exterior;
  if (!(s.temperature_K > 0.0)) throw InputError("temperature must be positive");
  return s;
}

void emit(const Table& t, const Scenario& s, const fs::path& csv_path, std::ostream& out) {
  const std::string csv = format_csv(t);
  if (csv_path.empty()) {
    out << csv;
    return;
  }
  write_file(csv_path, csv);
  write_file(metadata_path(csv_path), metadata(t, s.to_json()).dump(2) + "\n");
  if (s.svg) write_file(svg_path(csv_path), render_svg(t));
}

void report_warnings(const Table& t, std::ostream& err) {
  for (const auto& w : t.warnings) err << "warning: " << w << "\n";
}

int run_validate(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<vdw::GoldenFixture> fixtures = vdw::polarizability_fixtures();
  const auto analytic = vdw::analytic_fixtures();
  fixtures.insert(fixtures.end(), analytic.begin(), analytic.end());
  if (f.dataset.empty()) {
    err << "notice: no --dataset given; graphite fixtures skipped\n";
  } else {
    MaterialRef ref;
    ref.dataset = fs::absolute(f.dataset).lexically_normal().string();
    ref.eps_z_variant = f.eps_z_variant.empty() ? std::string("const3") : f.eps_z_variant;
    const vdw::Material graphite = ref.resolve();
    for (auto&& group : {vdw::graphite_table_fixtures(graphite), vdw::graphite_pairwise_fixtures(graphite)}) {
      fixtures.insert(fixtures.end(), group.begin(), group.end());
    }
  }
  const auto outcomes = vdw::run_fixtures(fixtures);
  Table t;
  t.columns = {"id", "source", "oracle", "expected", "actual", "tolerance", "tolerance_kind", "status"};
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    const std::string status = o.pass ? "PASS" : (o.error.empty() ? "FAIL" : "ERROR");
    if (!o.pass) ++failed;
    t.rows.push_back({o.id, std::string(vdw::to_string(o.source)), o.oracle, o.expected, o.actual, o.tolerance,
                      std::string(o.tolerance_kind == vdw::ToleranceKind::relative ? "relative" : "absolute"),
                      status});
    t.row_diagnostics.push_back(o.error.empty() ? json::object() : json{{"error", o.error}});
  }
  if (f.out.empty()) {
    out << format_csv(t);
  } else {
    write_file(f.out, format_csv(t));
  }
  err << (outcomes.size() - failed) << "/" << outcomes.size() << " fixtures passed\n";
  return failed == 0 ? kExitOk : kExitNumeric;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"van der Waals free energies of atoms near planar and cylindrical walls", "vdwcalc"};
  app.require_subcommand(1);
  Flags f;

  auto* eps = app.add_subcommand("eps", "Permittivity on the imaginary frequency axis");
  add_common(eps, f);
  add_frequency(eps, f);
  auto* alpha = app.add_subcommand("alpha", "Dynamic polarizability on the imaginary frequency axis");
  add_common(alpha, f);
  add_frequency(alpha, f);
  auto* c3 = app.add_subcommand("c3", "C3 coefficient scans near planar and cylindrical walls");
  add_common(c3, f);
  c3->add_option("--geometry", f.geometry, "semispace, plate, cylinder or shell");
  c3->add_option("--R-nm", f.R_nm, "Cylinder or shell outer radius [nm]");
  c3->add_option("--d-nm", f.d_nm, "Plate or shell thickness [nm]");
  c3->add_option("--a-nm", f.a_nm, "Separations [nm], scanned in order")->delimiter(',');
  auto* tube = app.add_subcommand("nanotube", "Interior transects and inside/outside differences");
  add_common(tube, f);
  tube->add_option("--exterior", f.exterior, "Exterior formula for differences")
      ->check(CLI::IsMember({"lifshitz", "pairwise"}));
  auto* validate = app.add_subcommand("validate-data", "Run the golden fixtures, optionally against a dataset");
  validate->add_option("--dataset", f.dataset, "Optical data descriptor (JSON)");
  validate->add_option("--eps-z-variant", f.eps_z_variant, "const3 or const0")
      ->check(CLI::IsMember({"const3", "const0"}));
  validate->add_option("--out", f.out, "Report CSV path (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return run_validate(f, out, err);

    const std::string command = app.get_subcommands().front()->get_name();
    const Scenario s = build_scenario(command, f);
    if (command == "eps" || command == "alpha") {
      const Table t = command == "eps" ? eps_table(s) : alpha_table(s);
      emit(t, s, s.out_path, out);
    } else if (command == "c3") {
      const auto tables = c3_tables(s);
      if (tables.size() > 1 && s.out_path.empty()) throw InputError("a series scan needs an output path");
      for (const auto& [tag, t] : tables) {
        fs::path path = s.out_path;
        if (!tag.empty()) path = path.parent_path() / (path.stem().string() + tag + path.extension().string());
        emit(t, s, path, out);
        report_warnings(t, err);
      }
    } else {
      const Table t = nanotube_table(s);
      emit(t, s, s.out_path, out);
      report_warnings(t, err);
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const vdw::IngestError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const vdw::NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace vdwcalc
