#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvotex/surface.hpp"

namespace curvotex {

/// N point vortices on the surface of parameter lambda, with chart positions
/// and circulations, interacting through the chosen Green's function. The
/// phase space carries the weighted symplectic form kappa_j * 2 dx dy / sigma^2.
struct VortexConfig {
  double lambda = 0.0;
  std::vector<Complex> positions;
  std::vector<double> vorticities;
  GreensChoice greens = GreensChoice::Background;

  SurfaceParam surface() const { return {lambda}; }
  std::size_t size() const { return positions.size(); }
};

/// Fixed-step integration record. Invariants (energy and momentum) are logged
/// at every accepted step; `aborted` is set when a collision approach stopped
/// the run early, leaving the partial trajectory in place.
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<Complex>> states;
  std::vector<double> energy;
  std::vector<Complex> momentum_c;
  std::vector<double> momentum_u;
  bool aborted = false;
  std::string abort_reason;
};

/// Linearization of the flow in the frame co-rotating with a relative
/// equilibrium. `residual` measures how far the configuration is from rigid
/// rotation; `equilibrium` is false (with the spectrum still reported) when it
/// exceeds 1e-6.
struct LinearizedSpectrum {
  std::vector<Complex> eigenvalues;
  double omega = 0.0;
  double residual = 0.0;
  bool equilibrium = true;
};

/// Interaction energy H = -(1/4pi) sum_{i<j} kappa_i kappa_j G(z_i; z_j).
double hamiltonian(const VortexConfig& c);

/// Total momentum sum_j kappa_j (z_j, |z_j|^2) / sigma_j.
std::pair<Complex, double> momentum(const VortexConfig& c);

/// Augmented Hamiltonian H - omega * J with J = sum_j kappa_j |z_j|^2 / sigma_j.
double augmented_hamiltonian(const VortexConfig& c, double omega);

/// Equations of motion dz_j/dt = i (sigma_j^2 / kappa_j) dH/d(conj z_j); the
/// sign is fixed so a regular ring rotates with its known angular velocity.
std::vector<Complex> velocities(const VortexConfig& c);

/// Classical fixed-step RK4. Aborts (keeping the partial trajectory) when the
/// minimum pairwise distance drops below 1e-6.
Trajectory integrate(const VortexConfig& c, double t_end, double dt);

/// Eigenvalues of the numerically differentiated vector field in the frame
/// rotating at the estimated equilibrium rate.
LinearizedSpectrum linearized_spectrum(const VortexConfig& c);

}  // namespace curvotex
