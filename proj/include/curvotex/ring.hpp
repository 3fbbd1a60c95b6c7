#pragma once

#include "curvotex/vortex.hpp"

namespace curvotex {

/// Regular ring of n identical vortices at chart radius r0:
/// z_j = r0 exp(i(2 pi j / n + phase)), j = 0..n-1.
struct RingSpec {
  int n = 3;
  double kappa = 1.0;
  double r0 = 1.0;
  double lambda = 0.0;
  double phase = 0.0;
};

/// The ring as a vortex configuration with the given Green's choice.
VortexConfig make_ring(const RingSpec& s,
                       GreensChoice greens = GreensChoice::Background);

/// Ring energy -(n(n-1) kappa^2 / 8 pi) log(r0^2 / (1 + lambda r0^2)^2), up to
/// a configuration-independent constant.
double ring_energy(const RingSpec& s);

/// Angular velocity making the ring a relative equilibrium for the given
/// Green's choice. For Background this is
/// -((n-1) kappa / 8 pi) (1 - lambda^2 r0^4) / r0^2, even in lambda.
double omega0(const RingSpec& s, GreensChoice greens = GreensChoice::Background);

}  // namespace curvotex
