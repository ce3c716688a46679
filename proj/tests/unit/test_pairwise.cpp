#include <doctest.h>

#include <cmath>
#include <vector>

#include "vdw/pairwise.hpp"
#include "vdw/validation.hpp"

using namespace vdw;

namespace {

constexpr double nm = 1e-9;

using Kind = BruteForceGeometry::Kind;

double factor(double G, double a) { return 1.5 * a * a * a * G; }

}  // namespace

TEST_CASE("semispace normalization") {
  for (double a : {1 * nm, 7 * nm}) CHECK(factor(semispace_geometry_integral(a), a) == doctest::Approx(1.0));
  CHECK(factor(exterior_geometry_integral(1e6 * nm, 1 * nm), 1 * nm) == doctest::Approx(1.0).epsilon(1e-5));
  const double a = 5 * nm;
  const auto r = pairwise_exterior(hydrogen_atom_1osc(), bundled_material("drude-test"), 1e7 * nm, a, 300.0);
  const double semi = c3_planar(hydrogen_atom_1osc(), WallGeometry::semispace(bundled_material("drude-test")), a, 300.0)
                          .free_energy_J;
  CHECK(r.free_energy_J == doctest::Approx(semi).epsilon(1e-6));
}

TEST_CASE("geometry integrals agree with direct volume integration") {
  struct Case {
    BruteForceGeometry g;
    double a;
    double reduced;
  };
  const std::vector<Case> cases{
      {{Kind::exterior, 50 * nm, 0.0}, 5 * nm, factor(exterior_geometry_integral(50 * nm, 5 * nm), 5 * nm)},
      {{Kind::exterior, 10 * nm, 0.0}, 10 * nm, factor(exterior_geometry_integral(10 * nm, 10 * nm), 10 * nm)},
      {{Kind::exterior, 50 * nm, 10 * nm},
       5 * nm,
       factor(exterior_geometry_integral(50 * nm, 5 * nm) - exterior_geometry_integral(40 * nm, 15 * nm), 5 * nm)},
      {{Kind::interior, 10 * nm, 40 * nm}, 5 * nm, factor(interior_geometry_integral(10 * nm, 40 * nm, 5 * nm), 5 * nm)},
      {{Kind::interior, 10 * nm, 40 * nm}, 10 * nm,
       factor(interior_geometry_integral(10 * nm, 40 * nm, 10 * nm), 10 * nm)},
      {{Kind::interior, 10 * nm, 5 * nm}, 3 * nm, factor(interior_geometry_integral(10 * nm, 5 * nm, 3 * nm), 3 * nm)},
  };
  for (const auto& c : cases) {
    const auto b = oracle_brute_force_pairwise(c.g, c.a);
    CHECK(c.reduced == doctest::Approx(b.factor).epsilon(5e-3));
  }
}

TEST_CASE("exterior geometry grows with R and stays below the semispace") {
  const double a = 5 * nm;
  double prev = 0.0;
  for (double R : {2.0, 10.0, 50.0, 500.0}) {
    const double g = exterior_geometry_integral(R * nm, a);
    CHECK(g > prev);
    CHECK(g < semispace_geometry_integral(a));
    prev = g;
  }
}

TEST_CASE("vanishing walls") {
  CHECK(interior_geometry_integral(10 * nm, 0.0, 3 * nm) == 0.0);
  CHECK(interior_geometry_integral(10 * nm, 1e-6 * nm, 3 * nm) == doctest::Approx(0.0).scale(1.0 / std::pow(nm, 3)));
  const auto shell = pairwise_exterior_shell(hydrogen_atom_1osc(), bundled_material("drude-test"), 20 * nm, 1e-6 * nm,
                                             5 * nm, 300.0);
  // The energy of a thin shell is proportional to its thickness, here 2e-7 a.
  CHECK(std::abs(shell.free_energy_J) < 1e-6 * std::abs(
      pairwise_exterior(hydrogen_atom_1osc(), bundled_material("drude-test"), 20 * nm, 5 * nm, 300.0).free_energy_J));
  CHECK_THROWS_AS(interior_geometry_integral(10 * nm, 5 * nm, 20 * nm), std::domain_error);
}

TEST_CASE("interior transect is symmetric with its maximum on the axis") {
  const double R0 = 10 * nm;
  const double d = 40 * nm;
  std::vector<double> pos;
  for (double p = 3.0; p <= 17.0 + 1e-9; p += 0.5) pos.push_back(p * nm);
  const auto t = interior_transect(hydrogen_atom_1osc(), bundled_material("drude-test"), R0, d, pos, 300.0);
  REQUIRE(t.size() == pos.size());
  const std::size_t n = t.size();
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(t[i].free_energy_J < 0.0);
    CHECK(t[i].free_energy_J == doctest::Approx(t[n - 1 - i].free_energy_J).epsilon(1e-6));
    if (t[i].free_energy_J > t[argmax].free_energy_J) argmax = i;
  }
  CHECK(t[argmax].position_m == doctest::Approx(R0));
}

TEST_CASE("interior C3 is taken at the nearest wall") {
  const auto r = pairwise_interior(hydrogen_atom_1osc(), bundled_material("drude-test"), 10 * nm, 40 * nm, 16 * nm,
                                   300.0);
  CHECK(r.c3_distance_m == doctest::Approx(4 * nm));
  CHECK(r.free_energy_J == doctest::Approx(-1.5 * units::c3_au_to_si(r.c3_semispace_au) * r.geometry).epsilon(1e-12));
}

TEST_CASE("the cavity binds more strongly than the outside") {
  const auto h = hydrogen_atom_1osc();
  const double a = 3 * nm;
  for (const auto& name : bundled_material_names()) {
    const Material m = bundled_material(name);
    if (m.is_vacuum() || m.is_ideal_metal()) continue;
    for (double d : {3.0, 10.0, 40.0}) {
      const auto fixed_inner = inside_outside_difference(h, m, 10 * nm, d * nm, a, 300.0);
      CHECK(fixed_inner.difference_J > 0.0);
      CHECK(fixed_inner.difference_J == doctest::Approx(fixed_inner.exterior_J - fixed_inner.interior_J));
      const auto fixed_outer = inside_outside_difference(h, m, (50.0 - d) * nm, d * nm, a, 300.0);
      CHECK(fixed_outer.difference_J > 0.0);
      const auto pw = inside_outside_difference(h, m, 10 * nm, d * nm, a, 300.0, ExteriorFormula::pairwise);
      CHECK(pw.difference_J > 0.0);
    }
  }
}

TEST_CASE("an ideal-metal shell outside acts like a solid cylinder at any thickness") {
  const auto h = hydrogen_atom_1osc();
  const Material metal = bundled_material("ideal-metal");
  const double thin = c3_cylinder(h, WallGeometry::shell(metal, 50 * nm, 3 * nm), 3 * nm, 300.0).lifshitz.c3_au;
  const double solid = c3_cylinder(h, WallGeometry::solid_cylinder(metal, 50 * nm), 3 * nm, 300.0).lifshitz.c3_au;
  CHECK(thin == doctest::Approx(solid).epsilon(1e-12));
  // The pairwise interior still scales with the wall, so the mixed difference
  // can change sign for thin perfect-conductor walls.
  const auto r = inside_outside_difference(h, metal, 47 * nm, 3 * nm, 3 * nm, 300.0);
  CHECK(r.difference_J < 0.0);
  CHECK(inside_outside_difference(h, metal, 47 * nm, 3 * nm, 3 * nm, 300.0, ExteriorFormula::pairwise).difference_J >
        0.0);
}

TEST_CASE("a smaller outer radius gives a deeper interior well") {
  const auto h = hydrogen_atom_1osc();
  const Material m = bundled_material("drude-test");
  for (double d : {5.0, 20.0}) {
    const double small = pairwise_interior(h, m, 10 * nm, d * nm, 3 * nm, 300.0).free_energy_J;
    const double large = pairwise_interior(h, m, 10 * nm, (d + 30.0) * nm, 3 * nm, 300.0).free_energy_J;
    CHECK(large < small);
  }
}
