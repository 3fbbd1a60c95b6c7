#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "curvotex/bifurcation.hpp"
#include "curvotex/errors.hpp"
#include "curvotex/ring.hpp"
#include "curvotex/spectral.hpp"
#include "curvotex/stability.hpp"
#include "curvotex/vortex.hpp"

using namespace curvotex;

namespace {

std::vector<DihedralElement> all_elements(int n) {
  std::vector<DihedralElement> out;
  for (int k = 0; k < n; ++k) {
    out.push_back({k, false});
    out.push_back({k, true});
  }
  return out;
}

VortexConfig random_identical_config(int n, double lambda, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  VortexConfig c;
  c.lambda = lambda;
  c.greens = GreensChoice::Background;
  for (int j = 0; j < n; ++j) {
    c.positions.push_back({1.0 + 0.4 * u(rng), 0.4 * u(rng)});
    c.vorticities.push_back(1.0);
  }
  return c;
}

bool same_point_set(const std::vector<Complex>& a,
                    const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<bool> used(b.size(), false);
  for (const Complex& p : a) {
    bool found = false;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!used[i] && std::abs(p - b[i]) < tol) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

// True when some choice of signs makes l1 +- l2 +- l3 a multiple of n.
bool triple_couples(int n, int l1, int l2, int l3) {
  for (int s2 : {-1, 1}) {
    for (int s3 : {-1, 1}) {
      if ((l1 + s2 * l2 + s3 * l3) % n == 0) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("dihedral group law") {
  const int n = 7;
  const DihedralElement id{0, false};
  const DihedralElement m{0, true};
  // m is an involution; every reflection is.
  for (int k = 0; k < n; ++k) {
    const DihedralElement refl{k, true};
    const DihedralElement sq = dihedral_compose(n, refl, refl);
    CHECK(sq.rotation_power == 0);
    CHECK_FALSE(sq.reflected);
  }
  // Rotations add; c^n = identity.
  DihedralElement acc = id;
  for (int k = 0; k < n; ++k) {
    acc = dihedral_compose(n, acc, {1, false});
  }
  CHECK(acc.rotation_power == 0);
  CHECK_FALSE(acc.reflected);
  // m c m = c^{-1}.
  const DihedralElement mcm =
      dihedral_compose(n, dihedral_compose(n, m, {1, false}), m);
  CHECK(mcm.rotation_power == n - 1);
  CHECK_FALSE(mcm.reflected);
  // Associativity over the whole group.
  for (const auto& a : all_elements(n)) {
    for (const auto& b : all_elements(n)) {
      for (const auto& c : all_elements(n)) {
        const auto lhs = dihedral_compose(n, dihedral_compose(n, a, b), c);
        const auto rhs = dihedral_compose(n, a, dihedral_compose(n, b, c));
        CHECK(lhs.rotation_power == rhs.rotation_power);
        CHECK(lhs.reflected == rhs.reflected);
      }
    }
  }
}

TEST_CASE("group action fixes the reference ring and is a homomorphism") {
  const int n = 6;
  RingSpec s;
  s.n = n;
  s.lambda = 0.2;
  const VortexConfig ring = make_ring(s);
  for (const auto& g : all_elements(n)) {
    const VortexConfig moved = act(g, ring);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(moved.positions[j] - ring.positions[j]) < 1e-14);
    }
  }
  std::mt19937 rng(101);
  const VortexConfig c = random_identical_config(n, 0.1, rng);
  for (const auto& a : all_elements(n)) {
    for (const auto& b : all_elements(n)) {
      const VortexConfig lhs = act(dihedral_compose(n, a, b), c);
      const VortexConfig rhs = act(a, act(b, c));
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(lhs.positions[j] - rhs.positions[j]) < 1e-13);
      }
    }
  }
  // Mixed vorticities are rejected.
  VortexConfig mixed = c;
  mixed.vorticities[0] = 2.0;
  CHECK_THROWS_AS(act({1, false}, mixed), std::invalid_argument);
}

TEST_CASE("Hamiltonian and augmented Hamiltonian are invariant") {
  std::mt19937 rng(202);
  for (int n : {5, 6}) {
    for (int trial = 0; trial < 4; ++trial) {
      const VortexConfig c = random_identical_config(n, 0.15, rng);
      const double h0 = hamiltonian(c);
      const double a0 = augmented_hamiltonian(c, 0.37);
      for (const auto& g : all_elements(n)) {
        const VortexConfig moved = act(g, c);
        CHECK(std::abs(hamiltonian(moved) - h0) <
              1e-12 * std::max(1.0, std::abs(h0)));
        CHECK(std::abs(augmented_hamiltonian(moved, 0.37) - a0) <
              1e-12 * std::max(1.0, std::abs(a0)));
      }
    }
  }
}

TEST_CASE("acting then projecting equals the mode transformation law") {
  const int n = 7;
  RingSpec s;
  s.n = n;
  s.lambda = 0.1;
  std::mt19937 rng(303);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd d(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    d(i) = 0.01 * u(rng);
  }
  VortexConfig c = make_ring(s);
  for (int j = 0; j < n; ++j) {
    c.positions[j] =
        std::polar(s.r0 + d(j), 2.0 * M_PI * j / n + d(n + j));
  }
  for (const auto& g : all_elements(n)) {
    const VortexConfig moved = act(g, c);
    const Eigen::VectorXd dm = polar_displacement(s, moved);
    for (int ell = 0; 2 * ell <= n; ++ell) {
      for (ModeKind kind : {ModeKind::Radial, ModeKind::Angular}) {
        const ModeCoefficient before = project_mode(s, d, ell, kind);
        const ModeCoefficient after = project_mode(s, dm, ell, kind);
        const ModeCoefficient expected = act_on_mode(n, g, before);
        CHECK(std::abs(after.value - expected.value) < 1e-10);
      }
    }
  }
}

TEST_CASE("transformation laws on coefficients are homomorphisms") {
  const int n = 9;
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Complex z{u(rng), u(rng)};
  for (const auto& a : all_elements(n)) {
    for (const auto& b : all_elements(n)) {
      const auto ab = dihedral_compose(n, a, b);
      for (ModeKind kind : {ModeKind::Radial, ModeKind::Angular}) {
        const ModeCoefficient mc{2, kind, z};
        const Complex lhs = act_on_mode(n, ab, mc).value;
        const Complex rhs = act_on_mode(n, a, act_on_mode(n, b, mc)).value;
        CHECK(std::abs(lhs - rhs) < 1e-13);
      }
      const Complex zl = act_on_zeta_prime(n, ab, z);
      const Complex zr = act_on_zeta_prime(n, a, act_on_zeta_prime(n, b, z));
      CHECK(std::abs(zl - zr) < 1e-13);
    }
  }
  // The V_1' coefficient transforms like an l = 1 radial coefficient.
  for (const auto& g : all_elements(n)) {
    const Complex via_mode = act_on_mode(n, g, {1, ModeKind::Radial, z}).value;
    CHECK(std::abs(act_on_zeta_prime(n, g, z) - via_mode) < 1e-14);
  }
}

TEST_CASE("selection rule for cubic couplings") {
  const int n = 7;
  RingSpec s;
  s.n = n;
  s.lambda = 0.1;
  const auto dir = [&](int ell, ModeKind kind, ModePart part) {
    return mode_components(s, {ell, kind, part});
  };
  struct Triple {
    int l1, l2, l3;
  };
  const Triple triples[] = {{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3},
                            {1, 2, 3}, {1, 1, 2}, {2, 2, 1}, {1, 3, 3}};
  bool saw_nonzero = false;
  for (const Triple& t : triples) {
    const double v = directional_derivative(
        3, s,
        {dir(t.l1, ModeKind::Radial, ModePart::Alpha),
         dir(t.l2, ModeKind::Radial, ModePart::Alpha),
         dir(t.l3, ModeKind::Radial, ModePart::Alpha)});
    if (!triple_couples(n, t.l1, t.l2, t.l3)) {
      CHECK(std::abs(v) < 1e-7);
    } else if (std::abs(v) > 1e-3) {
      saw_nonzero = true;
    }
  }
  CHECK(saw_nonzero);
}

TEST_CASE("the degenerate square couples only to the rotation plane") {
  // At the heptagon's degenerate point the cubic C(a, a, .) pairs the
  // mode-3 square (l + l = 6 = -1 mod 7) with l = 1 alone.
  const int n = 7;
  RingSpec s;
  s.n = n;  // b_7 = 0, so x* = 0 and lambda = 0
  const Eigen::VectorXd a = mode_components(s, {3, ModeKind::Radial, ModePart::Alpha});
  const auto basis = slice_basis(s);
  // V_1' direction couples.
  const double c1 = directional_derivative(3, s, {a, a, basis[0]});
  CHECK(std::abs(c1) > 1e-2);
  // Every l >= 2 slice direction decouples.
  for (std::size_t i = 2; i < basis.size(); ++i) {
    const double v = directional_derivative(3, s, {a, a, basis[i]});
    CHECK(std::abs(v) < 1e-7);
  }
}

TEST_CASE("derivative forms scale multilinearly") {
  const int n = 7;
  RingSpec s;
  s.n = n;
  const Eigen::VectorXd a =
      mode_components(s, {3, ModeKind::Radial, ModePart::Alpha});
  const Eigen::VectorXd b = slice_basis(s)[0];
  const double g1 = directional_derivative(3, s, {a, a, b});
  const double g2 = directional_derivative(
      3, s, {Eigen::VectorXd(2.0 * a), Eigen::VectorXd(2.0 * a),
             Eigen::VectorXd(3.0 * b)});
  CHECK(g2 == doctest::Approx(12.0 * g1).epsilon(1e-5));
  const double d1 = directional_derivative(4, s, {a, a, a, a});
  const double d2 = directional_derivative(
      4, s,
      {Eigen::VectorXd(2.0 * a), Eigen::VectorXd(2.0 * a),
       Eigen::VectorXd(2.0 * a), Eigen::VectorXd(2.0 * a)});
  CHECK(d2 == doctest::Approx(16.0 * d1).epsilon(1e-5));
  // Order and direction-count guards.
  CHECK_THROWS_AS(directional_derivative(2, s, {a, a}), std::invalid_argument);
  CHECK_THROWS_AS(directional_derivative(3, s, {a, a}), std::invalid_argument);
}

TEST_CASE("quartic on the degenerate plane is isotropic") {
  const int n = 7;
  RingSpec s;
  s.n = n;
  const Eigen::VectorXd a =
      mode_components(s, {3, ModeKind::Radial, ModePart::Alpha});
  const Eigen::VectorXd b =
      mode_components(s, {3, ModeKind::Radial, ModePart::Beta});
  const double ref = directional_derivative(4, s, {a, a, a, a});
  for (double theta : {M_PI / 8.0, M_PI / 3.0, 1.1}) {
    const Eigen::VectorXd mix = std::cos(theta) * a + std::sin(theta) * b;
    const double v = directional_derivative(4, s, {mix, mix, mix, mix});
    CHECK(v == doctest::Approx(ref).epsilon(1e-4));
  }
}

TEST_CASE("heptagon probe reproduces the degenerate fourth-order data") {
  const DegeneracyReport rep = odd_probe(7);
  CHECK(rep.n == 7);
  CHECK(rep.parity == ProbeParity::Odd);
  CHECK(rep.x_star == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(rep.odd_data.has_value());
  const OddProbeData& d = *rep.odd_data;
  CHECK(d.beta == doctest::Approx(21.0 / (2.0 * M_PI)).epsilon(1e-6));
  CHECK(d.gamma == doctest::Approx(63.0 / (4.0 * M_PI)).epsilon(1e-6));
  CHECK(d.delta == doctest::Approx(1071.0 / (8.0 * M_PI)).epsilon(1e-6));
  CHECK(d.discriminant == doctest::Approx(d.beta * d.delta - d.gamma * d.gamma)
                              .epsilon(1e-12));
  CHECK(d.discriminant > 0.0);
  // The weighted fourth-order condition holds strictly.
  CHECK(d.beta * d.delta > 3.0 * d.gamma * d.gamma);
  CHECK(rep.verdict == ProbeVerdict::StableDegenerate);
  CHECK(rep.warnings.empty());
}

TEST_CASE("odd probes at other n") {
  const DegeneracyReport five = odd_probe(5, true);
  REQUIRE(five.odd_data.has_value());
  CHECK(five.x_star == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-9));
  CHECK(five.odd_data->beta == doctest::Approx(37.105).epsilon(1e-3));
  CHECK(five.odd_data->gamma == doctest::Approx(-9.043).epsilon(1e-3));
  CHECK(five.odd_data->delta == doctest::Approx(15.807).epsilon(1e-3));
  CHECK(five.verdict == ProbeVerdict::StableDegenerate);
  CHECK(five.odd_data->beta * five.odd_data->delta >
        3.0 * five.odd_data->gamma * five.odd_data->gamma);

  const DegeneracyReport nine = odd_probe(9);
  REQUIRE(nine.odd_data.has_value());
  CHECK(nine.odd_data->beta == doctest::Approx(6.946).epsilon(1e-2));
  CHECK(nine.odd_data->gamma == doctest::Approx(13.839).epsilon(1e-2));
  CHECK(nine.odd_data->delta == doctest::Approx(182.4).epsilon(1e-2));
  CHECK(nine.verdict == ProbeVerdict::StableDegenerate);

  // The reciprocal root only exists on the positive side.
  CHECK_THROWS_AS(odd_probe(7, true), std::invalid_argument);
  CHECK_THROWS_AS(odd_probe(4), std::invalid_argument);
}

TEST_CASE("even probes: the quartic term carries the degeneracy") {
  for (int n = 4; n <= 12; n += 2) {
    const DegeneracyReport rep = even_probe(n);
    CHECK(rep.parity == ProbeParity::Even);
    CHECK(rep.x_star == doctest::Approx(b_n(n)).epsilon(1e-12));
    REQUIRE(rep.even_data.has_value());
    const EvenProbeData& d = *rep.even_data;
    CHECK(std::abs(d.t2_coeff) < 1e-7 * std::abs(d.t4_coeff));
    CHECK(d.t4_coeff > 0.0);
    // Fitted coefficient against the closed form of the bracket.
    const double sig = 1.0 + rep.x_star;
    const double closed =
        n * d.T_value / (768.0 * M_PI * sig * sig * sig * sig);
    CHECK(d.t4_coeff == doctest::Approx(closed).epsilon(1e-4));
    CHECK(rep.verdict == ProbeVerdict::StableDegenerate);
    CHECK(rep.warnings.empty());
  }
  CHECK_THROWS_AS(even_probe(5), std::invalid_argument);
}

TEST_CASE("sweep covers both parities") {
  const auto reports = conjecture_sweep(8);
  REQUIRE(static_cast<int>(reports.size()) == 5);  // n = 4..8
  for (const auto& rep : reports) {
    CHECK(rep.verdict == ProbeVerdict::StableDegenerate);
    if (rep.n % 2 == 0) {
      CHECK(rep.even_data.has_value());
    } else {
      CHECK(rep.odd_data.has_value());
    }
  }
}

TEST_CASE("crossing speed helper matches the root finder") {
  for (int n : {6, 9}) {
    for (int ell = 2; 2 * ell <= n; ++ell) {
      const auto bp = bifurcation_value(n, ell);
      REQUIRE(bp.has_value());
      CHECK(eigenvalue_crossing_speed(n, ell) ==
            doctest::Approx(bp->crossing_speed).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(eigenvalue_crossing_speed(8, 1), std::out_of_range);
}

TEST_CASE("tabulated sum and product stay positive") {
  for (int m = 0; m <= 100; ++m) {
    CHECK(even_probe_sum(m) > 0.0);
    CHECK(even_probe_product(m) > 0.0);
  }
}

TEST_CASE("normal form contours and branch structure") {
  // k = 3: transcritical; seven critical points once the branches exist.
  {
    const NormalFormField f =
        normal_form_contours({3, 1.0, 0.4, 0.5}, 41, 1.5);
    CHECK(f.structure == BranchStructure::Transcritical);
    CHECK(static_cast<int>(f.values.size()) == 41 * 41);
    std::map<CriticalPointType, int> count;
    for (const auto& p : f.critical_points) {
      ++count[p.type];
    }
    CHECK(static_cast<int>(f.critical_points.size()) == 7);
    CHECK(count[CriticalPointType::Maximum] == 1);
    CHECK(count[CriticalPointType::Minimum] == 3);
    CHECK(count[CriticalPointType::Saddle] == 3);
  }
  {
    // Just past the transcritical point on the other side.
    const NormalFormField f =
        normal_form_contours({3, 1.0, 0.4, -0.01}, 41, 1.5);
    CHECK(static_cast<int>(f.critical_points.size()) == 7);
    CHECK(f.critical_points.front().type == CriticalPointType::Minimum);
  }
  // k = 5: dihedral pitchfork with 1 + 5 + 5 points.
  {
    const NormalFormField f =
        normal_form_contours({5, 1.0, 0.2, 0.4}, 41, 1.2);
    CHECK(f.structure == BranchStructure::DihedralPitchfork);
    CHECK(static_cast<int>(f.critical_points.size()) == 11);
    std::map<CriticalPointType, int> count;
    for (const auto& p : f.critical_points) {
      ++count[p.type];
    }
    CHECK(count[CriticalPointType::Maximum] == 1);
    CHECK(count[CriticalPointType::Minimum] == 5);
    CHECK(count[CriticalPointType::Saddle] == 5);
  }
  // k = 4, |alpha| > |beta|: both square and diagonal branches.
  {
    const NormalFormField f =
        normal_form_contours({4, 1.0, 0.3, 0.5}, 41, 1.2);
    CHECK(f.structure == BranchStructure::DihedralPitchfork);
    CHECK(static_cast<int>(f.critical_points.size()) == 9);
  }
  // k = 4, |alpha| < |beta|: one family escapes to infinity.
  {
    const NormalFormField f =
        normal_form_contours({4, 0.2, 0.5, 0.5}, 41, 1.2);
    CHECK(f.structure == BranchStructure::Transcritical);
    CHECK(static_cast<int>(f.critical_points.size()) == 5);
  }
  // k = 2: classical pitchfork section.
  {
    const NormalFormField f = normal_form_contours({2, 1.0, 0.0, 0.5}, 21, 1.0);
    CHECK(static_cast<int>(f.critical_points.size()) == 3);
    CHECK(f.critical_points[0].type == CriticalPointType::Saddle);
    CHECK(f.critical_points[1].type == CriticalPointType::Minimum);
    const NormalFormField g =
        normal_form_contours({2, 1.0, 0.0, -0.5}, 21, 1.0);
    CHECK(static_cast<int>(g.critical_points.size()) == 1);
    CHECK(g.critical_points[0].type == CriticalPointType::Minimum);
  }
  // Degenerate parameter guards.
  CHECK_THROWS_AS(normal_form_contours({2, 0.0, 0.0, 0.5}, 11, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(normal_form_contours({3, 1.0, 0.0, 0.5}, 11, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(normal_form_contours({4, 0.5, 0.5, 0.5}, 11, 1.0),
                  std::invalid_argument);
}

TEST_CASE("gallery phases and stabilizers") {
  CHECK(gallery_phase(7, 2, GalleryBranch::M) == 0.0);
  CHECK(gallery_phase(8, 2, GalleryBranch::MPrime) ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-15));
  CHECK(gallery_phase(12, 3, GalleryBranch::MPrime) ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-15));
  // m' is conjugate to m when n/gcd is odd, and degenerates at l = n/2.
  CHECK_THROWS_AS(gallery_phase(7, 2, GalleryBranch::MPrime),
                  std::invalid_argument);
  CHECK_THROWS_AS(gallery_phase(6, 2, GalleryBranch::MPrime),
                  std::invalid_argument);
  CHECK_THROWS_AS(gallery_phase(8, 4, GalleryBranch::MPrime),
                  std::invalid_argument);
  CHECK_THROWS_AS(gallery_phase(8, 1, GalleryBranch::M), std::out_of_range);

  struct Case {
    int n, ell;
    GalleryBranch branch;
    int refl_base;
  };
  const Case cases[] = {{8, 2, GalleryBranch::M, 0},
                        {8, 2, GalleryBranch::MPrime, 1},
                        {9, 3, GalleryBranch::M, 0},
                        {12, 3, GalleryBranch::MPrime, 1}};
  for (const Case& tc : cases) {
    const int g = std::gcd(tc.n, tc.ell);
    const int step = tc.n / g;
    const VortexConfig c =
        perturbation_gallery(tc.n, tc.ell, 0.05, tc.branch);
    // Stabilizer of order 2 gcd(n, l): rotations c^{j step} and reflections
    // with offset refl_base + j step.
    for (int j = 0; j < g; ++j) {
      const VortexConfig rot = act({j * step, false}, c);
      CHECK(same_point_set(rot.positions, c.positions, 1e-12));
      const VortexConfig refl = act({tc.refl_base + j * step, true}, c);
      CHECK(same_point_set(refl.positions, c.positions, 1e-12));
    }
    // A generic rotation moves the perturbed set.
    const VortexConfig moved = act({1, false}, c);
    CHECK_FALSE(same_point_set(moved.positions, c.positions, 1e-6));
    // Energy is still invariant under the whole group.
    const double h0 = hamiltonian(c);
    for (const auto& el : all_elements(tc.n)) {
      CHECK(std::abs(hamiltonian(act(el, c)) - h0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(perturbation_gallery(8, 4, 0.05, GalleryBranch::MPrime),
                  std::invalid_argument);
}

TEST_CASE("restricted quartic on a mode plane with n/gcd = 4") {
  std::vector<std::string> warnings;
  const auto [alpha, beta] = restricted_quartic(8, 2, &warnings);
  CHECK(alpha == doctest::Approx(0.883978).epsilon(1e-4));
  CHECK(beta == doctest::Approx(0.660270).epsilon(1e-4));
  CHECK(std::abs(beta) < std::abs(alpha));  // bounded quartic section
  // Defined exactly when n/gcd(n, l) = 4.
  CHECK_NOTHROW(restricted_quartic(12, 3));
  CHECK_THROWS_AS(restricted_quartic(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(restricted_quartic(8, 4), std::invalid_argument);
}
