#include "scenario.hpp"

#include <cmath>
#include <fstream>

#include "vdw/optics.hpp"

namespace vdwcalc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string resolve_path(const std::string& p, const fs::path& base) {
  const fs::path path(p);
  if (path.is_absolute() || base.empty()) return path.string();
  return (base / path).lexically_normal().string();
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field '") + key + "': " + e.what());
  }
}

void check_increasing(const GridSpec& g) {
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (!std::isfinite(g.values[i])) throw InputError("scan grid contains a non-finite value");
    if (i > 0 && !(g.values[i] > g.values[i - 1])) throw InputError("scan grid must be strictly increasing");
  }
}

}  // namespace

vdw::Material MaterialRef::resolve() const {
  if (!dataset) {
    try {
      return vdw::bundled_material(bundled);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  std::optional<double> eps_z0;
  if (eps_z_variant) {
    if (*eps_z_variant == "const3") {
      eps_z0 = 3.0;
    } else if (*eps_z_variant == "const0") {
      eps_z0 = 0.0;
    } else {
      throw InputError("eps-z variant must be const3 or const0, got '" + *eps_z_variant + "'");
    }
  }
  const vdw::OpticalDataset ds = vdw::load_dataset(*dataset, eps_z0);
  vdw::KKMethod method;
  if (kk_method == "closed") {
    method = vdw::KKMethod::closed_segments;
  } else if (kk_method == "numeric") {
    method = vdw::KKMethod::numeric;
  } else {
    throw InputError("kk_method must be 'closed' or 'numeric'");
  }
  return vdw::tabulated_material(ds, method);
}

std::string MaterialRef::label() const {
  if (!dataset) return bundled;
  return *dataset + (eps_z_variant ? " [" + *eps_z_variant + "]" : "");
}

std::vector<double> FrequencyGrid::values(double temperature_K) const {
  std::vector<double> xi;
  if (matsubara > 0) {
    const vdw::MatsubaraGrid grid(temperature_K);
    xi.reserve(matsubara);
    for (std::size_t l = 1; l <= matsubara; ++l) xi.push_back(grid.xi(l));
    return xi;
  }
  if (points == 0) return xi;
  if (!(xi_min_rad_s > 0.0) || !(xi_max_rad_s > xi_min_rad_s)) {
    throw InputError("frequency grid needs 0 < xi_min < xi_max");
  }
  if (points == 1) return {xi_min_rad_s};
  const double step = std::log(xi_max_rad_s / xi_min_rad_s) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    xi.push_back(i + 1 == points ? xi_max_rad_s : xi_min_rad_s * std::exp(step * static_cast<double>(i)));
  }
  return xi;
}

GridSpec parse_grid(const json& j) {
  if (!j.is_object()) throw InputError("scan must be an object");
  GridSpec g;
  g.variable = get_or<std::string>(j, "variable", "a");
  if (j.contains("values_nm")) {
    g.values = get_or<std::vector<double>>(j, "values_nm", {});
  } else if (j.contains("from_nm")) {
    const double from = get_or<double>(j, "from_nm", 0.0);
    const double to = get_or<double>(j, "to_nm", from);
    if (j.contains("step_nm")) {
      const double step = get_or<double>(j, "step_nm", 0.0);
      if (!(step > 0.0)) throw InputError("step_nm must be positive");
      // Index-based so that the grid carries no accumulated rounding.
      const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
      for (long i = 0; i <= n; ++i) g.values.push_back(from + step * static_cast<double>(i));
    } else {
      const auto n = get_or<std::size_t>(j, "points", 0);
      const bool log = get_or<bool>(j, "log", false);
      if (log && !(from > 0.0)) throw InputError("log grid needs from_nm > 0");
      for (std::size_t i = 0; i < n; ++i) {
        const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        g.values.push_back(log ? from * std::pow(to / from, t) : from + (to - from) * t);
      }
      if (n > 1) g.values.back() = to;
    }
  }
  check_increasing(g);
  return g;
}

vdw::PolarizabilityModel resolve_particle(const std::string& ref) {
  if (ref.size() > 4 && ref.substr(ref.size() - 4) == ".csv") return vdw::load_species(ref);
  try {
    return vdw::builtin_model(ref);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Scenario Scenario::from_json(const json& doc, const fs::path& base) {
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  Scenario s;
  s.command = get_or<std::string>(doc, "command", "");

  if (doc.contains("particle")) {
    const json& p = doc.at("particle");
    s.particles = p.is_array() ? p.get<std::vector<std::string>>() : std::vector<std::string>{p.get<std::string>()};
  }
  for (auto& p : s.particles) {
    if (p.size() > 4 && p.substr(p.size() - 4) == ".csv") p = resolve_path(p, base);
  }

  if (doc.contains("material")) {
    const json& m = doc.at("material");
    if (m.is_string()) {
      s.material.bundled = m.get<std::string>();
    } else {
      s.material.bundled = get_or<std::string>(m, "bundled", s.material.bundled);
      if (m.contains("dataset")) s.material.dataset = resolve_path(m.at("dataset").get<std::string>(), base);
      if (m.contains("eps_z_variant")) s.material.eps_z_variant = m.at("eps_z_variant").get<std::string>();
      s.material.kk_method = get_or<std::string>(m, "kk_method", s.material.kk_method);
    }
  }

  if (doc.contains("geometry")) {
    const json& g = doc.at("geometry");
    s.geometry.kind = get_or<std::string>(g, "kind", s.geometry.kind);
    s.geometry.R_nm = get_or<double>(g, "R_nm", 0.0);
    s.geometry.d_nm = get_or<double>(g, "d_nm", 0.0);
    s.geometry.a_nm = get_or<double>(g, "a_nm", 0.0);
  }

  if (doc.contains("nanotube")) {
    const json& n = doc.at("nanotube");
    s.nanotube.mode = get_or<std::string>(n, "mode", s.nanotube.mode);
    s.nanotube.R0_nm = get_or<double>(n, "R0_nm", 0.0);
    s.nanotube.R_nm = get_or<double>(n, "R_nm", 0.0);
    s.nanotube.a_nm = get_or<double>(n, "a_nm", s.nanotube.a_nm);
    s.nanotube.fixed = get_or<std::string>(n, "fixed", s.nanotube.fixed);
    s.nanotube.exterior = get_or<std::string>(n, "exterior", s.nanotube.exterior);
  }

  s.temperature_K = get_or<double>(doc, "temperature_K", s.temperature_K);
  if (doc.contains("scan")) s.scan = parse_grid(doc.at("scan"));
  if (doc.contains("series")) s.series = parse_grid(doc.at("series"));

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    s.frequencies.matsubara = get_or<std::size_t>(g, "matsubara", 0);
    s.frequencies.xi_min_rad_s = get_or<double>(g, "xi_min_rad_s", 0.0);
    s.frequencies.xi_max_rad_s = get_or<double>(g, "xi_max_rad_s", 0.0);
    s.frequencies.points = get_or<std::size_t>(g, "points", 0);
  }

  if (doc.contains("output")) {
    const json& o = doc.at("output");
    if (o.contains("path")) s.out_path = resolve_path(o.at("path").get<std::string>(), base);
    s.svg = get_or<bool>(o, "svg", false);
  }

  if (doc.contains("numerics")) {
    const json& n = doc.at("numerics");
    s.numerics.quad_rel_tol = get_or<double>(n, "quad_rel_tol", s.numerics.quad_rel_tol);
    s.numerics.cutoff.tail_tolerance = get_or<double>(n, "tail_tolerance", s.numerics.cutoff.tail_tolerance);
    s.numerics.cutoff.max_index = get_or<std::size_t>(n, "max_index", s.numerics.cutoff.max_index);
    s.numerics.cutoff.min_terms = get_or<std::size_t>(n, "min_terms", s.numerics.cutoff.min_terms);
    s.threads = get_or<unsigned>(n, "threads", 0);
  }
  return s;
}

Scenario Scenario::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
  return from_json(doc, path.parent_path());
}

json Scenario::to_json() const {
  json j;
  j["command"] = command;
  j["particle"] = particles;
  json m;
  m["bundled"] = material.bundled;
  if (material.dataset) m["dataset"] = *material.dataset;
  if (material.eps_z_variant) m["eps_z_variant"] = *material.eps_z_variant;
  m["kk_method"] = material.kk_method;
  j["material"] = m;
  j["geometry"] = {{"kind", geometry.kind}, {"R_nm", geometry.R_nm}, {"d_nm", geometry.d_nm}, {"a_nm", geometry.a_nm}};
  j["nanotube"] = {{"mode", nanotube.mode},   {"R0_nm", nanotube.R0_nm}, {"R_nm", nanotube.R_nm},
                   {"a_nm", nanotube.a_nm},   {"fixed", nanotube.fixed}, {"exterior", nanotube.exterior}};
  j["temperature_K"] = temperature_K;
  j["scan"] = {{"variable", scan.variable}, {"values_nm", scan.values}};
  if (series) j["series"] = {{"variable", series->variable}, {"values_nm", series->values}};
  j["grid"] = {{"matsubara", frequencies.matsubara},
               {"xi_min_rad_s", frequencies.xi_min_rad_s},
               {"xi_max_rad_s", frequencies.xi_max_rad_s},
               {"points", frequencies.points}};
  j["output"] = {{"path", out_path}, {"svg", svg}};
  j["numerics"] = {{"quad_rel_tol", numerics.quad_rel_tol},
                   {"y_span", numerics.y_span},
                   {"tail_tolerance", numerics.cutoff.tail_tolerance},
                   {"consecutive_negligible", numerics.cutoff.consecutive_negligible},
                   {"min_terms", numerics.cutoff.min_terms},
                   {"max_index", numerics.cutoff.max_index},
                   {"threads", threads}};
  return j;
}

}  // namespace vdwcalc
