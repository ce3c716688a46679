// Acceptance suite: one PASS / FAIL / SKIP line per criterion. Exit status is
// nonzero when any criterion fails. Criteria that need user-supplied graphite
// optical data read the descriptor path from VDW_GRAPHITE_DESCRIPTOR.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vdw/cylinder.hpp"
#include "vdw/optics.hpp"
#include "vdw/pairwise.hpp"
#include "vdw/planar.hpp"
#include "vdw/validation.hpp"

#ifdef VDW_HAVE_CLI
#include <json.hpp>

#include "cli.hpp"
#endif

using namespace vdw;

namespace {

constexpr double nm = 1e-9;
constexpr double kT = 300.0;

// Tolerances and runtime budgets.
constexpr double kLimitTol1e4 = 1e-3;
constexpr double kLimitTol1e8 = 1e-8;
constexpr double kLimitBudget_s = 10.0;
constexpr double kIdealMetalExpected = 0.2417;
constexpr double kIdealMetalTol = 0.03;
constexpr double kIdealMetalBudget_s = 1.0;
constexpr double kKKTol = 1e-4;
constexpr double kKKBudget_s = 5.0;
constexpr double kStaticAlpha = 4.50;
constexpr double kStaticAlphaTol = 0.005;
constexpr double kModelAgreementTol = 0.002;
constexpr double kPolarizabilityBudget_s = 30.0;
constexpr double kTableBudget_s = 120.0;
constexpr double kTrendBudget_s = 60.0;
constexpr double kTransectSymmetryTol = 1e-6;
constexpr double kInteriorBudget_s = 60.0;
constexpr double kTailTolerance = 1e-7;

enum class Status { pass, fail, skip };

struct Verdict {
  Status status;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Verdict()> check;
};

double rel(double a, double b) { return std::abs(a / b - 1.0); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::optional<Material> graphite() {
  const char* path = std::getenv("VDW_GRAPHITE_DESCRIPTOR");
  if (!path || !*path) return std::nullopt;
  return tabulated_material(load_dataset(path, 3.0));
}

Verdict limit_chain() {
  const auto h = hydrogen_atom_1osc();
  const double a = 5 * nm;
  const double d0 = 10 * nm;
  double worst1e4 = 0.0, worst1e8 = 0.0;
  for (const char* name : {"drude-test", "uniaxial-test"}) {
    const Material m = bundled_material(name);
    const double semi = c3_planar(h, WallGeometry::semispace(m), a, kT).c3_au;
    const double plate0 = c3_planar(h, WallGeometry::plate(m, d0), a, kT).c3_au;
    for (double rho : {1e4, 1e8}) {
      const double big = rho * a;
      const double solid = c3_cylinder(h, WallGeometry::solid_cylinder(m, big), a, kT).lifshitz.c3_au;
      const double e = std::max({rel(c3_planar(h, WallGeometry::plate(m, big), a, kT).c3_au, semi),
                                 rel(solid, semi),
                                 rel(c3_cylinder(h, WallGeometry::shell(m, big, big - a), a, kT).lifshitz.c3_au, solid),
                                 rel(c3_cylinder(h, WallGeometry::shell(m, big, d0), a, kT).lifshitz.c3_au, plate0)});
      (rho == 1e4 ? worst1e4 : worst1e8) = std::max(rho == 1e4 ? worst1e4 : worst1e8, e);
    }
  }
  const bool ok = worst1e4 < kLimitTol1e4 && worst1e8 < kLimitTol1e8;
  return {ok ? Status::pass : Status::fail,
          "worst deviation " + fmt("%.2e", worst1e4) + " at 1e4, " + fmt("%.2e", worst1e8) + " at 1e8"};
}

Verdict ideal_metal() {
  const auto r = c3_planar(hydrogen_atom_1osc(), WallGeometry::semispace(bundled_material("ideal-metal")), 0.5 * nm, kT);
  const double e = rel(r.c3_au, kIdealMetalExpected);
  return {e < kIdealMetalTol ? Status::pass : Status::fail,
          "C3 = " + fmt("%.5f", r.c3_au) + " au, deviation " + fmt("%.2f%%", 100 * e)};
}

Verdict kramers_kronig() {
  const OpticalDataset ds = synthetic_drude_dataset();
  const TabulatedKK closed{ds.x, ds.extrapolation.x, KKMethod::closed_segments};
  const TabulatedKK numeric{ds.x, ds.extrapolation.x, KKMethod::numeric};
  double worst_oracle = 0.0, worst_pair = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double xi = 1e13 * std::pow(1e5, i / 49.0);
    const double want = oracle_drude_eps(1.226, 0.04, xi);
    const double c = eps_ixi_closed_segments(closed, xi);
    const double n = eps_ixi_numeric(numeric, xi);
    worst_oracle = std::max({worst_oracle, rel(c, want), rel(n, want)});
    worst_pair = std::max(worst_pair, rel(c, n));
  }
  const bool ok = worst_oracle < kKKTol && worst_pair < kKKTol;
  return {ok ? Status::pass : Status::fail,
          "vs closed form " + fmt("%.2e", worst_oracle) + ", between pipelines " + fmt("%.2e", worst_pair)};
}

Verdict polarizability() {
  const auto h10 = hydrogen_atom_10osc();
  const auto h1 = hydrogen_atom_1osc();
  const double s = h10.static_au();
  const WallGeometry w = WallGeometry::semispace(bundled_material("drude-test"));
  double worst = 0.0;
  for (double a : {3.0, 5.0, 7.5, 10.0, 15.0, 20.0, 30.0, 50.0, 75.0, 100.0, 150.0}) {
    worst = std::max(worst, rel(c3_planar(h1, w, a * nm, kT).c3_au, c3_planar(h10, w, a * nm, kT).c3_au));
  }
  const bool ok = rel(s, kStaticAlpha) < kStaticAlphaTol && worst < kModelAgreementTol;
  return {ok ? Status::pass : Status::fail,
          "alpha(0) = " + fmt("%.4f", s) + " au, max C3 deviation " + fmt("%.3f%%", 100 * worst)};
}

Verdict fixtures_verdict(const std::vector<FixtureOutcome>& outcomes) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& o : outcomes) {
    if (o.pass) continue;
    if (failed++ == 0) first = "; first failure " + o.id + ": expected " + fmt("%.5g", o.expected) + " got " +
                               fmt("%.5g", o.actual) + (o.error.empty() ? "" : " (" + o.error + ")");
  }
  return {failed == 0 ? Status::pass : Status::fail,
          std::to_string(outcomes.size() - failed) + "/" + std::to_string(outcomes.size()) + " entries" + first};
}

Verdict table_reproduction() {
  const auto g = graphite();
  if (!g) return {Status::skip, "no graphite dataset (set VDW_GRAPHITE_DESCRIPTOR)"};
  return fixtures_verdict(run_fixtures(graphite_table_fixtures(*g)));
}

Verdict pairwise_trend() {
  const auto h = hydrogen_atom_1osc();
  const Material m = bundled_material("drude-test");
  std::string trace;
  double prev = -1.0;
  bool monotone = true;
  for (double a : {3.0, 5.0, 8.0, 10.0, 15.0, 20.0, 30.0, 40.0, 50.0}) {
    const double d = pairwise_lifshitz_discrepancy(h, m, 50 * nm, a * nm, kT);
    monotone = monotone && d > prev;
    prev = d;
    trace += (trace.empty() ? "" : " ") + fmt("%.3f%%", 100 * d);
  }
  Verdict v{monotone ? Status::pass : Status::fail, "drude-test " + trace};
  if (const auto g = graphite()) {
    const Verdict anchors = fixtures_verdict(run_fixtures(graphite_pairwise_fixtures(*g)));
    if (anchors.status == Status::fail) v.status = Status::fail;
    v.detail += "; graphite anchors " + anchors.detail;
  } else {
    v.detail += "; graphite anchors skipped (set VDW_GRAPHITE_DESCRIPTOR)";
  }
  return v;
}

Verdict interior() {
  const auto h = hydrogen_atom_1osc();
  const double R0 = 10 * nm;
  const double R = 50 * nm;
  const double a = 3 * nm;
  std::vector<double> pos;
  for (int i = 0; i <= 28; ++i) pos.push_back((3.0 + 0.5 * i) * nm);
  const auto t = interior_transect(h, bundled_material("drude-test"), R0, R - R0, pos, kT);
  double asym = 0.0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    asym = std::max(asym, rel(t[i].free_energy_J, t[t.size() - 1 - i].free_energy_J));
    if (t[i].free_energy_J > t[argmax].free_energy_J) argmax = i;
  }
  const bool axis = std::abs(t[argmax].position_m - R0) < 1e-3 * nm;

  // Both nanotube families: inner radius 10 nm, and outer radius 50 nm.
  const auto smallest = [&](const Material& m, std::string& where) {
    double lo = INFINITY;
    for (int d = 3; d <= 40; ++d) {
      for (bool fixed_inner : {true, false}) {
        const double inner = fixed_inner ? R0 : R - d * nm;
        const double diff = inside_outside_difference(h, m, inner, d * nm, a, kT).difference_J;
        if (diff < lo) {
          lo = diff;
          where = m.name() + " d=" + std::to_string(d) + (fixed_inner ? " R0=10" : " R=50");
        }
      }
    }
    return lo;
  };
  // Materials with a finite permittivity; vacuum gives exactly zero. The ideal
  // metal is reported but not judged: its shell reflects fully at any thickness
  // while the pairwise interior scales with the wall volume.
  double min_diff = INFINITY;
  std::string where;
  std::size_t materials = 0;
  std::string metal_note;
  for (const auto& name : bundled_material_names()) {
    const Material m = bundled_material(name);
    if (m.is_vacuum()) continue;
    std::string at;
    const double lo = smallest(m, at);
    if (m.is_ideal_metal()) {
      metal_note = "; not judged: ideal-metal smallest " + fmt("%.3e J", lo) + " (" + at + ")";
      continue;
    }
    ++materials;
    if (lo < min_diff) {
      min_diff = lo;
      where = at;
    }
  }
  const bool ok = asym < kTransectSymmetryTol && axis && min_diff > 0.0;
  return {ok ? Status::pass : Status::fail,
          "asymmetry " + fmt("%.1e", asym) + ", maximum at " + fmt("%.1f nm", t[argmax].position_m / nm) +
              ", smallest difference " + fmt("%.3e J", min_diff) + " (" + where + ") over " +
              std::to_string(materials) + " finite-permittivity materials" + metal_note};
}

#ifdef VDW_HAVE_CLI
std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void max_tail(const nlohmann::json& j, double& worst, std::size_t& count) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "tail_relative") {
        worst = std::max(worst, it->get<double>());
        ++count;
      } else {
        max_tail(*it, worst, count);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) max_tail(e, worst, count);
  }
}

Verdict determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::path(VDW_SCENARIO_DIR);
  const fs::path work = fs::temp_directory_path() / "vdw_acceptance";
  fs::remove_all(work);
  std::vector<fs::path> scenarios;
  for (const auto& e : fs::directory_iterator(root)) {
    if (e.path().extension() == ".json") scenarios.push_back(e.path());
  }
  std::sort(scenarios.begin(), scenarios.end());
  std::size_t csvs = 0, tails = 0;
  double worst = 0.0;
  for (const auto& sc : scenarios) {
    const std::string command = nlohmann::json::parse(slurp(sc))["command"];
    std::vector<std::string> outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path dir = work / std::to_string(rep);
      fs::create_directories(dir);
      const fs::path out = dir / (sc.stem().string() + ".csv");
      std::ostringstream o, e;
      const int code = vdwcalc::run({command, "--config", sc.string(), "--material", "drude-test", "--out", out.string()},
                                    o, e);
      if (code != 0) return {Status::fail, sc.filename().string() + " exited with " + std::to_string(code) + ": " + e.str()};
      for (const auto& f : fs::directory_iterator(dir)) {
        if (f.path().extension() != ".csv" || f.path().stem().string().rfind(sc.stem().string(), 0) != 0) continue;
        outputs[rep].push_back(f.path().filename().string());
      }
    }
    std::sort(outputs[0].begin(), outputs[0].end());
    std::sort(outputs[1].begin(), outputs[1].end());
    if (outputs[0] != outputs[1] || outputs[0].empty()) return {Status::fail, sc.filename().string() + ": output sets differ"};
    for (const auto& name : outputs[0]) {
      if (slurp(work / "0" / name) != slurp(work / "1" / name)) return {Status::fail, name + " differs between runs"};
      max_tail(nlohmann::json::parse(slurp(work / "0" / (name + ".meta.json"))), worst, tails);
      ++csvs;
    }
  }
  const bool ok = worst < kTailTolerance && tails > 0;
  return {ok ? Status::pass : Status::fail,
          std::to_string(scenarios.size()) + " scenarios, " + std::to_string(csvs) + " CSV files identical; " +
              std::to_string(tails) + " tail estimates, largest " + fmt("%.2e", worst)};
}
#else
Verdict determinism() { return {Status::skip, "built without the command-line tool"}; }
#endif

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "limit chain", kLimitBudget_s, limit_chain},
      {2, "ideal-metal oracle", kIdealMetalBudget_s, ideal_metal},
      {3, "Kramers-Kronig oracle", kKKBudget_s, kramers_kronig},
      {4, "polarizability fixtures", kPolarizabilityBudget_s, polarizability},
      {5, "graphite coefficient table", kTableBudget_s, table_reproduction},
      {6, "pairwise vs Lifshitz trend", kTrendBudget_s, pairwise_trend},
      {7, "interior physics", kInteriorBudget_s, interior},
      {8, "determinism and diagnostics", INFINITY, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {Status::fail, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.status == Status::pass && elapsed > c.budget_s) {
      v.status = Status::fail;
      v.detail += "; over the " + fmt("%.0f s", c.budget_s) + " budget";
    }
    const char* tag = v.status == Status::pass ? "PASS" : v.status == Status::fail ? "FAIL" : "SKIP";
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", tag, c.id, c.name.c_str(), v.detail.c_str(), elapsed);
    std::fflush(stdout);
    if (v.status == Status::fail) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
