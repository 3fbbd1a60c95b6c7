#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "curvotex/ring.hpp"
#include "curvotex/spectral.hpp"
#include "curvotex/vortex.hpp"

namespace curvotex {

/// Element c^k m^e of the dihedral group D_n. On labelled configurations
///   c: z'_j = exp(-2 pi i / n) z_{(j+1) mod n},
///   m: z'_j = conj(z_{(-j) mod n}),
/// so the reference ring is fixed by every element. An element applies the
/// reflection first, then the rotation.
struct DihedralElement {
  int rotation_power = 0;
  bool reflected = false;
};

/// Group law: (k1, e1)(k2, e2) = (k1 + (-1)^{e1} k2 mod n, e1 xor e2).
DihedralElement dihedral_compose(int n, const DihedralElement& a,
                                 const DihedralElement& b);

/// Action on a configuration of n identical vortices.
VortexConfig act(const DihedralElement& g, const VortexConfig& c);

/// Complex Fourier coefficient (1/n) sum_j a_j exp(2 pi i l j / n) of the
/// radial or angular slots of a polar displacement.
struct ModeCoefficient {
  int ell = 0;
  ModeKind kind = ModeKind::Radial;
  Complex value{0.0, 0.0};
};

/// Transformation law of a mode coefficient: c multiplies by
/// exp(-2 pi i l / n); m conjugates (radial) or negates the conjugate
/// (angular).
ModeCoefficient act_on_mode(int n, const DihedralElement& g,
                            const ModeCoefficient& mc);

/// Coefficient on the plane V_1', which transforms like an l = 1 radial
/// coefficient: c multiplies by exp(-2 pi i / n), m conjugates.
Complex act_on_zeta_prime(int n, const DihedralElement& g, Complex zp);

/// Polar displacement (dr, dtheta slots) of a configuration relative to the
/// reference ring of s.
Eigen::VectorXd polar_displacement(const RingSpec& s, const VortexConfig& c);

ModeCoefficient project_mode(const RingSpec& s, const Eigen::VectorXd& d,
                             int ell, ModeKind kind);

/// Mixed directional derivative of order 3 or 4 of the augmented Hamiltonian
/// at the ring (Background choice, omega = omega0), along the given slice
/// directions in polar displacement coordinates. Tensor-product fourth-order
/// central differences, Richardson-extrapolated over doubled steps; appends a
/// warning when the last two extrapolants disagree by more than 1e-4
/// relative (values below a small absolute floor count as zero).
double directional_derivative(int order, const RingSpec& s,
                              const std::vector<Eigen::VectorXd>& dirs,
                              std::vector<std::string>* warnings = nullptr);

enum class ProbeParity { Even, Odd };
enum class ProbeVerdict { StableDegenerate, Inconclusive };

struct EvenProbeData {
  double t2_coeff = 0.0;  // vanishes at the bifurcation point
  double t4_coeff = 0.0;  // equals n T / (768 pi r0^4 sigma^4)
  double T_value = 0.0;   // closed-form bracket T
};

struct OddProbeData {
  double beta = 0.0;   // eps_1' = quadratic form on the V_1' vector
  double gamma = 0.0;  // trilinear form C(a1, a1, b1)
  double delta = 0.0;  // quartic form D a^4 / |a|^4 on V_c (isotropic)
  double discriminant = 0.0;  // beta delta - gamma^2
};

/// Outcome of a degenerate-critical-point probe at the bifurcation value of
/// the dominant mode: the fourth-order data deciding stability where the
/// linear analysis is silent.
struct DegeneracyReport {
  int n = 0;
  double x_star = 0.0;
  ProbeParity parity = ProbeParity::Even;
  std::optional<EvenProbeData> even_data;
  std::optional<OddProbeData> odd_data;
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  std::vector<std::string> warnings;
};

/// Alternating-radius curve z_j = (r0 + (-1)^j t) e^{2 pi i j / n} at the
/// mode-n/2 bifurcation point: fits the even Taylor series of the augmented
/// Hamiltonian and compares the t^4 coefficient with its closed form.
DegeneracyReport even_probe(int n);

/// Probe of the two-dimensional degeneracy for odd n at the mode-(n-1)/2
/// bifurcation point. beta, gamma, delta are the raw derivative forms of the
/// augmented Hamiltonian on the unnormalized mode bases of V_c and V_1';
/// the verdict uses delta > 0 and the discriminant beta delta - gamma^2 > 0.
/// A warning is appended if the weighted fourth-order condition
/// beta delta > 3 gamma^2 fails despite a positive discriminant. The quartic
/// is checked for isotropy over eight directions of V_c (anisotropy_error
/// otherwise). The reciprocal root (the antipodally equivalent ring beyond
/// the equator) requires x_star > 0.
DegeneracyReport odd_probe(int n, bool at_reciprocal_root = false);

/// Probes every n in 4..n_max (even and odd alike).
std::vector<DegeneracyReport> conjecture_sweep(int n_max);

/// d(eps_r^(l))/dx at the bifurcation value, kappa = r0 = 1. Throws if the
/// mode never degenerates.
double eigenvalue_crossing_speed(int n, int ell);

/// Tabulated closed forms for T1+T2 and T1 T2 (the even-probe bracket
/// evaluated at the two roots of the bifurcation relation) as functions of
/// m = n - 2. Kept exactly as tabulated for reference: they correspond to a
/// variant of the quartic bracket and differ from the sum and product of
/// even_probe's T_value by a few percent, while sharing strict positivity
/// for every m >= 0.
double even_probe_sum(double m);
double even_probe_product(double m);

/// u-parametrized normal form with D_k symmetry:
///   k = 2:  f = -u x^2 + alpha x^4 + y^2,
///   k >= 3: f = -u N + alpha N^2 + beta P,  N = x^2+y^2, P = Re (x+iy)^k.
struct NormalFormSpec {
  int k = 2;
  double alpha = 0.0;
  double beta = 0.0;
  double u = 0.0;
};

enum class BranchStructure { Transcritical, DihedralPitchfork };
enum class CriticalPointType { Minimum, Maximum, Saddle, Degenerate };

struct CriticalPoint {
  double x = 0.0;
  double y = 0.0;
  CriticalPointType type = CriticalPointType::Saddle;
};

struct NormalFormField {
  NormalFormSpec spec;
  int grid = 0;
  double extent = 0.0;
  std::vector<double> values;  // row-major grid x grid samples
  std::vector<CriticalPoint> critical_points;
  BranchStructure structure = BranchStructure::Transcritical;
};

/// Samples the normal form on [-extent, extent]^2 and classifies its
/// critical points within radius extent. Throws on degenerate parameters
/// (beta = 0 for k >= 3, alpha = 0 for k = 2, |alpha| = |beta| for k = 4).
NormalFormField normal_form_contours(const NormalFormSpec& spec, int grid,
                                     double extent = 1.0);

enum class GalleryBranch { M, MPrime };

/// Phase of the radial perturbation fixed by the branch reflection:
/// 0 for m, pi l / n for m' (recorded in tool output; the opposite sign
/// gives the same group orbit with a conjugated stabilizer).
double gallery_phase(int n, int ell, GalleryBranch branch);

/// Mode-l perturbed ring z_j = (r0 + eps cos(2 pi l j / n + phi)) e^{2 pi i
/// j / n}, invariant under the dihedral subgroup of order 2 gcd(n, l)
/// generated by c^{n/gcd} and the branch reflection. Branch m' is rejected
/// when n/gcd(n, l) is odd (its reflections are conjugate to m) and when
/// l = n/2 (the perturbation would vanish identically).
VortexConfig perturbation_gallery(int n, int ell, double eps,
                                  GalleryBranch branch, double r0 = 1.0,
                                  double lambda = 0.0);

/// Quartic coefficients (alpha, beta) of the augmented Hamiltonian
/// restricted to the mode-l plane at its bifurcation point, fitted as
/// (1/4!) d^4 a(theta)^4 = alpha + beta cos(4 theta + psi). Only defined
/// when n/gcd(n, l) = 4; no reduction of the coupled lower modes is
/// attempted, so this is raw restricted data, not a full normal form.
std::pair<double, double> restricted_quartic(
    int n, int ell, std::vector<std::string>* warnings = nullptr);

}  // namespace curvotex
