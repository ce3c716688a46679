#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vdw/lifshitz.hpp"
#include "vdw/quantities.hpp"

using namespace vdw;

TEST_CASE("first Matsubara frequency at room temperature") {
  // 2 pi k_B T / hbar at 300 K, evaluated by hand.
  CHECK(matsubara_frequency(300.0, 1) == doctest::Approx(2.4678e14).epsilon(1e-4));
  CHECK(matsubara_frequency(300.0, 0) == 0.0);
  CHECK_THROWS_AS(matsubara_frequency(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(matsubara_frequency(-5.0, 1), std::domain_error);
}

TEST_CASE("Matsubara frequencies are linear in l and T") {
  const MatsubaraGrid grid(300.0);
  for (std::size_t l = 1; l < 2000; l += 37) {
    CHECK(grid.xi(l) == doctest::Approx(static_cast<double>(l) * grid.xi(1)).epsilon(1e-14));
    CHECK(matsubara_frequency(300.0, l) == doctest::Approx(grid.xi(l)).epsilon(1e-14));
    CHECK(matsubara_frequency(600.0, l) == doctest::Approx(2.0 * grid.xi(l)).epsilon(1e-14));
  }
  CHECK(grid.thermal_energy() == doctest::Approx(constants::k_B * 300.0));
}

TEST_CASE("unit conversions round-trip") {
  for (double v : {1e-20, 0.37, 1.0, 11.65, 4.2e7}) {
    CHECK(units::rad_per_s_to_ev(units::ev_to_rad_per_s(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::hartree_to_rad_per_s(units::rad_per_s_to_hartree(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::hartree_to_ev(units::ev_to_hartree(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::joule_to_ev(units::ev_to_joule(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::joule_to_hartree(units::hartree_to_joule(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::m_to_nm(units::nm_to_m(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::m_to_bohr(units::bohr_to_m(v)) == doctest::Approx(v).epsilon(1e-14));
    CHECK(units::polarizability_m3_to_au(units::polarizability_au_to_m3(v)) == doctest::Approx(v).epsilon(1e-15));
    CHECK(units::c3_si_to_au(units::c3_au_to_si(v)) == doctest::Approx(v).epsilon(1e-15));
  }
}

TEST_CASE("conversion factors are mutually consistent") {
  // One Hartree in rad/s equals (27.11 eV) * (1.519e15 rad/s per eV).
  CHECK(units::hartree_to_rad_per_s(1.0) == doctest::Approx(27.11 * 1.519e15));
  // hbar * omega for one Hartree recovers the Hartree energy in joules.
  CHECK(constants::hbar * units::hartree_to_rad_per_s(1.0) == doctest::Approx(units::hartree_to_joule(1.0)));
  // The bohr radius is the cube root of the polarizability unit.
  const double b = units::bohr_to_m(1.0);
  CHECK(b * b * b == doctest::Approx(1.482e-31).epsilon(1e-12));
  CHECK(b == doctest::Approx(0.529e-10).epsilon(2e-3));
}

TEST_CASE("zeta and the characteristic frequency") {
  const double a = 10e-9;
  CHECK(dimensionless_zeta(a, characteristic_frequency(a)) == doctest::Approx(1.0));
  CHECK(dimensionless_zeta(a, 3e15) == doctest::Approx(2.0 * a * 3e15 / constants::c));
}

TEST_CASE("Matsubara sum of a geometric series stops under the cutoff") {
  const CutoffPolicy policy;
  const double q = 0.5;
  const auto outcome = detail::matsubara_sum(policy, [&](std::size_t l) {
    return detail::TermValue{std::pow(q, static_cast<double>(l)), 0.0};
  });
  CHECK(outcome.sum == doctest::Approx(1.0 / (1.0 - q)).epsilon(1e-6));
  CHECK(outcome.diagnostics.tail_relative < policy.tail_tolerance);
  CHECK_FALSE(outcome.diagnostics.cap_reached);
  // 0.5^l first drops below 1e-7 of the sum (about 2) at l = 23; three quiet terms end at l = 25.
  CHECK(outcome.diagnostics.n_terms == 26);
}

TEST_CASE("Matsubara sum honours min_terms and the hard cap") {
  CutoffPolicy policy;
  policy.min_terms = 10;
  const auto zeros = detail::matsubara_sum(policy, [](std::size_t l) {
    return detail::TermValue{l == 0 ? 1.0 : 0.0, 0.0};
  });
  CHECK(zeros.sum == 1.0);
  CHECK(zeros.diagnostics.n_terms >= policy.min_terms);

  policy.max_index = 50;
  const auto slow = detail::matsubara_sum(policy, [](std::size_t l) {
    return detail::TermValue{1.0 / (1.0 + static_cast<double>(l)), 0.0};
  });
  CHECK(slow.diagnostics.cap_reached);
  CHECK_FALSE(slow.diagnostics.warnings.empty());
}
