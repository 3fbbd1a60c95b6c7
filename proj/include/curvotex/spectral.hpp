#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "curvotex/ring.hpp"

namespace curvotex {

/// Tangent vectors at the ring live in polar displacement coordinates
/// (dr_0..dr_{n-1}, dtheta_0..dtheta_{n-1}). The complexified mode vectors
/// zeta_r^(l) and zeta_theta^(l) have slot components exp(-2 pi i l j / n)
/// (divided by r0 for the angular kind); Alpha and Beta name their real and
/// imaginary parts. Beta parts vanish identically for l = 0 and l = n/2.
enum class ModeKind { Radial, Angular };
enum class ModePart { Alpha, Beta };

struct FourierVector {
  int ell = 0;
  ModeKind kind = ModeKind::Radial;
  ModePart part = ModePart::Alpha;
};

/// Mode eigenvalues of the augmented-Hamiltonian Hessian at the ring,
/// indexed by l = 0..floor(n/2).
struct ModeSpectrum {
  RingSpec ring;
  GreensChoice greens = GreensChoice::Background;
  std::vector<double> eps_r;
  std::vector<double> eps_theta;
  double eps1prime_value = 0.0;
};

/// Derivative of the total momentum along the complexified mode zeta.
struct DJEntry {
  int ell = 0;
  ModeKind kind = ModeKind::Radial;
  Complex dJ_c;
  double dJ_u = 0.0;
};

/// Closed form of sum_{j=1}^{n-1} cos(2 pi l j / n) / (1 - cos(2 pi j / n)),
/// namely (n^2 - 1)/6 - l(n - l), for 0 <= l <= n.
double trig_identity(int n, int ell);

/// Component vector of a Fourier mode in polar displacement coordinates.
Eigen::VectorXd mode_components(const RingSpec& s, const FourierVector& v);

/// Augmented Hamiltonian as a function of the polar displacement from the
/// ring, with omega = omega0(s, greens). Shared by the numerical Hessian and
/// the higher-order probes.
std::function<double(const Eigen::VectorXd&)> polar_hamiltonian(
    const RingSpec& s, GreensChoice greens = GreensChoice::Background);

/// Closed-form Hessian of the augmented Hamiltonian at the ring, a symmetric
/// circulant pair of blocks in (dr, dtheta) coordinates. Available for the
/// Background and PoleAtInfinity choices.
Eigen::MatrixXd hessian_closed_form(
    const RingSpec& s, GreensChoice greens = GreensChoice::Background);

/// Finite-difference Hessian of the augmented Hamiltonian at the ring:
/// Richardson-extrapolated fourth-order central stencils, then symmetrized.
Eigen::MatrixXd hessian_numerical(
    const RingSpec& s, GreensChoice greens = GreensChoice::Background);

/// Mode eigenvalues for the Background choice:
///   eps_r^(l)     = (kappa^2 / 4 pi r0^2)(2(n-1)(1 + x^2)/sigma^2 - l(n-l)),
///   eps_theta^(l) = (kappa^2 / 4 pi) l(n-l),  x = lambda r0^2.
ModeSpectrum mode_eigenvalues(const RingSpec& s);

/// Mode eigenvalues for the PoleAtInfinity choice, where the radial entry
/// becomes (kappa^2 / 4 pi r0^2)(2(n-1)(1 - x^2)/sigma^2 - l(n-l)), the
/// circulant eigenvalue of that Hamiltonian's Hessian r-block.
ModeSpectrum mode_eigenvalues_alt(const RingSpec& s);

/// Hessian eigenvalue on the rotation-coupled plane V_1' spanned by
/// sigma alpha_r^(1) - sigmatilde beta_theta^(1) and
/// sigma beta_r^(1) + sigmatilde alpha_theta^(1):
///   eps_1' = n(n-1) kappa^2 sigmatilde^2 / (4 pi r0^2).
/// Vanishes exactly on the equator lambda r0^2 = 1.
double eps1prime(const RingSpec& s);

/// dJ on the complexified modes: nonzero only for zeta_r^(0) -> (0, n kappa
/// r0 / sigma^2), zeta_r^(1) -> (n kappa sigmatilde / sigma^2, 0) and
/// zeta_theta^(1) -> (i n kappa / sigma, 0).
std::vector<DJEntry> dJ_on_modes(const RingSpec& s);

/// Ordered basis of the symplectic slice N = V_1' + V_2 + ... (dimension
/// 2n - 4): the two V_1' vectors, then alpha_r, beta_r, alpha_theta,
/// beta_theta per l = 2..floor(n/2), beta parts omitted at l = n/2.
std::vector<Eigen::VectorXd> slice_basis(const RingSpec& s);

}  // namespace curvotex
