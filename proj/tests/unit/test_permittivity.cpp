#include <doctest.h>

#include <cmath>
#include <memory>
#include <thread>
#include <vector>

#include "vdw/permittivity.hpp"
#include "vdw/validation.hpp"

using namespace vdw;

namespace {

// Drude permittivity on the imaginary axis, written out independently of the library.
double drude(double wp_eV, double g_eV, double xi) {
  const double wp = wp_eV * 1.519e15;
  const double g = g_eV * 1.519e15;
  return 1.0 + wp * wp / (xi * (xi + g));
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

// Lorentz oscillator with strength S, resonance w0 and width g (eV):
//   Im eps(w) = S w0^2 g w / ((w0^2 - w^2)^2 + g^2 w^2),  eps(i xi) = 1 + S w0^2 / (w0^2 + xi^2 + g xi).
struct Lorentz {
  double S = 2.0;
  double w0 = 5.0;
  double g = 1.0;
  double im(double w) const { return S * w0 * w0 * g * w / ((w0 * w0 - w * w) * (w0 * w0 - w * w) + g * g * w * w); }
  double eps(double xi_eV) const { return 1.0 + S * w0 * w0 / (w0 * w0 + xi_eV * xi_eV + g * xi_eV); }
};

TabulatedKK lorentz_table(const Lorentz& L, KKMethod method) {
  std::vector<OpticalSample> rows;
  for (double w : log_grid(0.02, 400.0, 3000)) rows.push_back({w, L.im(w)});
  TabulatedKK m;
  m.table = std::make_shared<OpticalDataTable>(Axis::x, rows);
  const double hi = rows.back().omega_eV;
  m.extrapolation = AxisExtrapolation{L.im(hi) * hi * hi * hi, ConstantTail{rows.front().im_eps}};
  m.method = method;
  return m;
}

}  // namespace

TEST_CASE("analytic models") {
  CHECK(PermittivityModel::vacuum().at(1e15) == 1.0);
  CHECK(std::isinf(PermittivityModel::ideal_metal().at(1e15)));
  CHECK(PermittivityModel::constant(4.0).at(3e14) == 4.0);
  const auto d = PermittivityModel::drude(1.226, 0.04);
  for (double xi : log_grid(1e12, 1e18, 25)) CHECK(d.at(xi) == doctest::Approx(drude(1.226, 0.04, xi)).epsilon(1e-13));
  CHECK_THROWS_AS(d.at(0.0), std::domain_error);
  CHECK_THROWS_AS(d.at(-1.0), std::domain_error);
  CHECK_THROWS(PermittivityModel::drude(-1.0, 0.04));
}

TEST_CASE("eps(i xi) is real, at least 1 and non-increasing for every bundled material") {
  for (const auto& name : bundled_material_names()) {
    const Material m = bundled_material(name);
    if (m.is_ideal_metal()) continue;
    double px = INFINITY, pz = INFINITY;
    for (double xi : log_grid(1e11, 1e19, 60)) {
      const EpsPair e = m.at(xi);
      CHECK(e.x >= 1.0);
      CHECK(e.z >= 1.0);
      CHECK(e.x <= px);
      CHECK(e.z <= pz);
      px = e.x;
      pz = e.z;
    }
    CHECK(m.at(1e20).x == doctest::Approx(1.0).epsilon(1e-3));
  }
  CHECK_THROWS_AS(bundled_material("unobtainium"), std::invalid_argument);
}

TEST_CASE("static behaviour") {
  CHECK(PermittivityModel::drude(1.0, 0.1).static_behavior().diverges());
  CHECK(PermittivityModel::ideal_metal().static_behavior().diverges());
  const auto v = PermittivityModel::vacuum().static_behavior();
  CHECK_FALSE(v.diverges());
  CHECK(v.value == 1.0);
  const auto diel = bundled_material("dielectric-test").x().static_behavior();
  CHECK(diel.value == doctest::Approx(2.0));
  // The static value is the limit of eps(i xi).
  CHECK(bundled_material("dielectric-test").at(1e9).x == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("Kramers-Kronig on a tabulated Drude spectrum recovers the closed form") {
  const OpticalDataset ds = synthetic_drude_dataset();
  const auto& table = ds.x;
  for (KKMethod method : {KKMethod::closed_segments, KKMethod::numeric}) {
    const TabulatedKK m{table, ds.extrapolation.x, method};
    for (double xi : log_grid(1e13, 1e18, 50)) {
      const double want = drude(1.226, 0.04, xi);
      const double got = method == KKMethod::numeric ? eps_ixi_numeric(m, xi) : eps_ixi_closed_segments(m, xi);
      CHECK(std::abs(got / want - 1.0) < 1e-4);
    }
  }
}

TEST_CASE("numeric and closed-segment pipelines agree") {
  const OpticalDataset ds = synthetic_drude_dataset();
  const TabulatedKK closed{ds.x, ds.extrapolation.x, KKMethod::closed_segments};
  const TabulatedKK numeric{ds.x, ds.extrapolation.x, KKMethod::numeric};
  for (double xi : log_grid(1e12, 1e19, 30)) {
    const double a = eps_ixi_closed_segments(closed, xi);
    const double b = eps_ixi_numeric(numeric, xi);
    CHECK(std::abs(a / b - 1.0) < 1e-4);
    const auto s1 = kk_segments(closed, xi, KKMethod::closed_segments);
    const auto s2 = kk_segments(closed, xi, KKMethod::numeric);
    CHECK(s1.total() == doctest::Approx(a).epsilon(1e-12));
    CHECK(s1.table == doctest::Approx(s2.table).epsilon(1e-6));
    CHECK(s1.high == doctest::Approx(s2.high).epsilon(1e-5));
  }
}

TEST_CASE("Kramers-Kronig of a tabulated Lorentz oscillator") {
  const Lorentz L;
  for (KKMethod method : {KKMethod::closed_segments, KKMethod::numeric}) {
    const TabulatedKK m = lorentz_table(L, method);
    for (double xi_eV : log_grid(0.05, 100.0, 20)) {
      const double xi = xi_eV * 1.519e15;
      const double got = method == KKMethod::numeric ? eps_ixi_numeric(m, xi) : eps_ixi_closed_segments(m, xi);
      CHECK(got == doctest::Approx(L.eps(xi_eV)).epsilon(1e-3));
    }
  }
}

TEST_CASE("tabulated materials and the Matsubara spectrum memo") {
  const OpticalDataset ds = synthetic_drude_dataset();
  const Material m = tabulated_material(ds);
  const MatsubaraGrid grid(300.0);
  const auto spec = m.spectrum(grid);
  CHECK(m.spectrum(grid).get() == spec.get());
  std::vector<std::thread> pool;
  std::vector<double> got(8);
  for (int t = 0; t < 8; ++t) pool.emplace_back([&, t] { got[t] = spec->at(50 + t).x; });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) CHECK(got[t] == m.at(grid.xi(50 + t)).x);
  CHECK(spec->cached() >= 57);
  CHECK_THROWS_AS(spec->at(0), std::domain_error);
  CHECK(m.spectrum(MatsubaraGrid(150.0)).get() != spec.get());
}

TEST_CASE("uniaxial and isotropic materials") {
  const Material u = bundled_material("uniaxial-test");
  CHECK_FALSE(u.is_isotropic());
  const EpsPair e = u.at(1e15);
  CHECK(e.x == doctest::Approx(drude(1.226, 0.04, 1e15)));
  CHECK(e.z != doctest::Approx(e.x));
  const Material iso = Material::isotropic("c", PermittivityModel::constant(3.0));
  CHECK(iso.is_isotropic());
  CHECK(iso.at(1e14).z == 3.0);
  CHECK(bundled_material("ideal-metal").at(1e14).ideal_metal);
  CHECK(bundled_material("vacuum").is_vacuum());
}
