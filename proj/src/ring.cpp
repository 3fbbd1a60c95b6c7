#include "curvotex/ring.hpp"

#include <cmath>
#include <stdexcept>

#include "curvotex/errors.hpp"

namespace curvotex {

namespace {

void validate(const RingSpec& s) {
  if (s.n < 2) {
    throw std::invalid_argument("a ring needs at least two vortices");
  }
  if (s.r0 <= 0.0) {
    throw std::invalid_argument("ring radius must be positive");
  }
  if (s.kappa == 0.0) {
    throw std::invalid_argument("ring vorticity must be nonzero");
  }
  if (1.0 + s.lambda * s.r0 * s.r0 <= 0.0) {
    throw chart_domain_error("ring radius outside the chart domain");
  }
}

}  // namespace

VortexConfig make_ring(const RingSpec& s, GreensChoice greens) {
  validate(s);
  VortexConfig c;
  c.lambda = s.lambda;
  c.greens = greens;
  c.positions.reserve(s.n);
  c.vorticities.assign(s.n, s.kappa);
  for (int j = 0; j < s.n; ++j) {
    const double angle = 2.0 * M_PI * j / s.n + s.phase;
    c.positions.push_back(std::polar(s.r0, angle));
  }
  return c;
}

double ring_energy(const RingSpec& s) {
  validate(s);
  const double r2 = s.r0 * s.r0;
  const double sig = 1.0 + s.lambda * r2;
  return -(s.n * (s.n - 1) * s.kappa * s.kappa / (8.0 * M_PI)) *
         std::log(r2 / (sig * sig));
}

double omega0(const RingSpec& s, GreensChoice greens) {
  validate(s);
  const double r2 = s.r0 * s.r0;
  const double x = s.lambda * r2;
  const double sig = 1.0 + x;
  const double base = -s.kappa / (8.0 * M_PI * r2);
  switch (greens) {
    case GreensChoice::Background:
      return base * (s.n - 1) * (1.0 - x * x);
    case GreensChoice::PoleAtInfinity:
      return base * (s.n - 1) * sig * sig;
    case GreensChoice::Antipodal: {
      // Rational in x = lambda r0^2; regular at x = 0 and singular only at
      // (-x)^n = 1, which lies outside the chart.
      const double q = -x;
      const double qn1 = std::pow(q, s.n - 1);
      const double qn = qn1 * q;
      return base * (sig / (1.0 - qn)) *
             ((s.n - 1) * sig * (1.0 + qn1) + 2.0 * x * (1.0 - qn1));
    }
  }
  throw std::invalid_argument("unknown Green's function choice");
}

}  // namespace curvotex
