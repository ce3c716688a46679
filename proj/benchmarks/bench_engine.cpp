#include <benchmark/benchmark.h>

#include "vdw/cylinder.hpp"
#include "vdw/pairwise.hpp"
#include "vdw/permittivity.hpp"
#include "vdw/planar.hpp"
#include "vdw/validation.hpp"

namespace {

constexpr double nm = 1e-9;

void BM_KramersKronig(benchmark::State& state) {
  const vdw::OpticalDataset ds = vdw::synthetic_drude_dataset();
  const auto method = state.range(0) == 0 ? vdw::KKMethod::closed_segments : vdw::KKMethod::numeric;
  const vdw::TabulatedKK m{ds.x, ds.extrapolation.x, method};
  double xi = 1e13;
  for (auto _ : state) {
    benchmark::DoNotOptimize(method == vdw::KKMethod::numeric ? vdw::eps_ixi_numeric(m, xi)
                                                             : vdw::eps_ixi_closed_segments(m, xi));
    xi = xi < 1e18 ? xi * 1.3 : 1e13;
  }
}
BENCHMARK(BM_KramersKronig)->Arg(0)->Arg(1);

void BM_C3Planar(benchmark::State& state) {
  const vdw::Material m = vdw::bundled_material("uniaxial-test");
  const auto h = vdw::hydrogen_atom_1osc();
  const double a = static_cast<double>(state.range(0)) * nm;
  // Warm the permittivity memo so the loop measures the frequency sum.
  vdw::c3_planar(h, vdw::WallGeometry::semispace(m), a, 300.0);
  for (auto _ : state) benchmark::DoNotOptimize(vdw::c3_planar(h, vdw::WallGeometry::semispace(m), a, 300.0).c3_au);
}
BENCHMARK(BM_C3Planar)->Arg(3)->Arg(30)->Arg(150);

void BM_C3Cylinder(benchmark::State& state) {
  const vdw::Material m = vdw::bundled_material("uniaxial-test");
  const auto h = vdw::hydrogen_atom_1osc();
  const auto wall = vdw::WallGeometry::solid_cylinder(m, 50 * nm);
  vdw::c3_cylinder(h, wall, 10 * nm, 300.0);
  for (auto _ : state) benchmark::DoNotOptimize(vdw::c3_cylinder(h, wall, 10 * nm, 300.0).lifshitz.c3_au);
}
BENCHMARK(BM_C3Cylinder);

void BM_ExteriorGeometry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vdw::exterior_geometry_integral(50 * nm, 10 * nm));
}
BENCHMARK(BM_ExteriorGeometry);

void BM_InteriorGeometry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vdw::interior_geometry_integral(10 * nm, 40 * nm, 4 * nm));
}
BENCHMARK(BM_InteriorGeometry);

}  // namespace

BENCHMARK_MAIN();
