#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <curvotex/ring.hpp>

using namespace curvotex;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("ring layout and vorticities") {
  RingSpec s;
  s.n = 6;
  s.r0 = 1.3;
  s.lambda = 0.2;
  const auto c = make_ring(s);
  REQUIRE(c.size() == 6);
  for (int j = 0; j < 6; ++j) {
    CHECK(std::abs(c.positions[j] - std::polar(1.3, 2.0 * kPi * j / 6.0)) <
          1e-14);
    CHECK(c.vorticities[j] == 1.0);
  }
  CHECK(c.lambda == 0.2);
}

TEST_CASE("rings are relative equilibria: velocities equal i omega0 z") {
  for (const auto greens : {GreensChoice::PoleAtInfinity, GreensChoice::Antipodal,
                            GreensChoice::Background}) {
    for (const double x : {0.0, -0.5, 0.5}) {
      if (greens != GreensChoice::Background && x != 0.0) continue;
      RingSpec s;
      s.n = 5;
      s.lambda = x;  // r0 = 1
      const auto c = make_ring(s, greens);
      const double w = omega0(s, greens);
      const auto v = velocities(c);
      for (std::size_t j = 0; j < c.size(); ++j) {
        CHECK(std::abs(v[j] - Complex(0, 1) * w * c.positions[j]) < 1e-10);
      }
    }
  }
}

TEST_CASE("background angular velocity closed form") {
  // omega0 = -((n-1) kappa / 8 pi) (1 - lambda^2 r0^4) / r0^2
  for (const int n : {3, 5, 8}) {
    for (const double lam : {0.0, 0.4, -0.3}) {
      RingSpec s;
      s.n = n;
      s.r0 = 1.2;
      s.lambda = lam;
      const double expected = -((n - 1) * s.kappa / (8.0 * kPi)) *
                              (1.0 - lam * lam * std::pow(s.r0, 4)) /
                              (s.r0 * s.r0);
      CHECK(omega0(s) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("background omega0 is even in lambda") {
  RingSpec plus, minus;
  plus.n = minus.n = 7;
  plus.r0 = minus.r0 = 0.9;
  plus.lambda = 0.35;
  minus.lambda = -0.35;
  CHECK(omega0(plus) == doctest::Approx(omega0(minus)).epsilon(1e-14));
}

TEST_CASE("three greens choices agree on the plane") {
  RingSpec s;
  s.n = 6;
  const double w0 = omega0(s, GreensChoice::Background);
  CHECK(omega0(s, GreensChoice::PoleAtInfinity) == doctest::Approx(w0));
  CHECK(omega0(s, GreensChoice::Antipodal) == doctest::Approx(w0));
  CHECK(w0 == doctest::Approx(-5.0 / (8.0 * kPi)));
}

TEST_CASE("augmented hamiltonian is critical at the ring") {
  for (const auto greens : {GreensChoice::PoleAtInfinity, GreensChoice::Antipodal,
                            GreensChoice::Background}) {
    for (const double x : {0.0, 0.3}) {
      if (greens == GreensChoice::Antipodal && x != 0.0) continue;
      RingSpec s;
      s.n = 4;
      s.lambda = x;
      const auto ring = make_ring(s, greens);
      const double w = omega0(s, greens);
      const double h = 1e-5;
      double norm2 = 0.0;
      for (std::size_t j = 0; j < ring.size(); ++j) {
        for (const Complex dir : {Complex(h, 0.0), Complex(0.0, h)}) {
          VortexConfig fwd = ring, bwd = ring;
          fwd.positions[j] += dir;
          bwd.positions[j] -= dir;
          const double g = (augmented_hamiltonian(fwd, w) -
                            augmented_hamiltonian(bwd, w)) /
                           (2.0 * h);
          norm2 += g * g;
        }
      }
      CHECK(std::sqrt(norm2) < 1e-9);
    }
  }
}

TEST_CASE("ring energy tracks the direct hamiltonian up to a constant") {
  // ring_energy drops an n-dependent additive constant, so compare
  // differences across (r0, lambda) at fixed n.
  RingSpec a, b;
  a.n = b.n = 7;
  a.r0 = 1.1;
  a.lambda = 0.25;
  b.r0 = 0.8;
  b.lambda = -0.3;
  const double closed = ring_energy(a) - ring_energy(b);
  const double direct = hamiltonian(make_ring(a)) - hamiltonian(make_ring(b));
  CHECK(closed == doctest::Approx(direct).epsilon(1e-12));
  // And the closed form itself.
  const double expected =
      -(7.0 * 6.0 / (8.0 * M_PI)) *
      std::log(a.r0 * a.r0 /
               ((1.0 + a.lambda * a.r0 * a.r0) * (1.0 + a.lambda * a.r0 * a.r0)));
  CHECK(ring_energy(a) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("phase offset rotates the ring rigidly") {
  RingSpec a, b;
  a.n = b.n = 5;
  b.phase = 0.7;
  const auto ca = make_ring(a);
  const auto cb = make_ring(b);
  const Complex rot = std::polar(1.0, 0.7);
  for (std::size_t j = 0; j < ca.size(); ++j) {
    CHECK(std::abs(cb.positions[j] - rot * ca.positions[j]) < 1e-14);
  }
  CHECK(hamiltonian(cb) == doctest::Approx(hamiltonian(ca)).epsilon(1e-13));
}
