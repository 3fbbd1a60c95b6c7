#include "curvotex/stability.hpp"

#include <cmath>
#include <stdexcept>

#include "curvotex/errors.hpp"
#include "curvotex/ring.hpp"
#include "curvotex/spectral.hpp"

namespace curvotex {

namespace {

double criterion_rhs(int n) {
  if (n < 2) {
    throw std::invalid_argument("stability criterion needs n >= 2");
  }
  return static_cast<double>((n * n) / 4) / (2.0 * (n - 1));
}

void check_chart(double x) {
  if (x <= -1.0) {
    throw chart_domain_error("x = lambda r0^2 must exceed -1");
  }
}

// Root of (1+x^2)/(1+x)^2 = K in (-1, 1], from (1-K)x^2 - 2Kx + (1-K) = 0.
double threshold_root(double K) {
  if (std::abs(K - 1.0) < 1e-15) {
    return 0.0;
  }
  return (K - std::sqrt(2.0 * K - 1.0)) / (1.0 - K);
}

double radial_slope(int n, double x) {
  const double sig = 1.0 + x;
  return (n - 1) / M_PI * (x - 1.0) / (sig * sig * sig);
}

}  // namespace

bool is_stable(int n, double x) {
  check_chart(x);
  return (1.0 + x * x) / ((1.0 + x) * (1.0 + x)) > criterion_rhs(n);
}

bool is_stable_alt(int n, double x) {
  check_chart(x);
  return (1.0 - x) / (1.0 + x) > criterion_rhs(n);
}

double b_n(int n) {
  if (n < 4) {
    throw std::invalid_argument("b_n is defined for n >= 4");
  }
  return threshold_root(criterion_rhs(n));
}

std::optional<BifurcationPoint> bifurcation_value(int n, int ell) {
  if (ell < 2 || 2 * ell > n) {
    throw std::out_of_range("bifurcation mode needs 2 <= l <= n/2");
  }
  const double K = static_cast<double>(ell) * (n - ell) / (2.0 * (n - 1));
  if (2.0 * K - 1.0 < 0.0) {
    return std::nullopt;
  }
  BifurcationPoint p;
  p.n = n;
  p.ell = ell;
  p.x = threshold_root(K);
  if (p.x > 0.0) {
    p.partner = 1.0 / p.x;
  }
  p.crossing_speed = radial_slope(n, p.x);
  return p;
}

StabilityVerdict classify(int n, double x, double tol) {
  check_chart(x);
  if (std::abs(x - 1.0) < 1e-12) {
    throw equator_error("linear analysis breaks down on the equator");
  }

  RingSpec s;
  s.n = n;
  s.lambda = x;  // kappa = r0 = 1, so lambda r0^2 = x
  const ModeSpectrum spec = mode_eigenvalues(s);

  StabilityVerdict v;
  for (int ell = 2; 2 * ell <= n; ++ell) {
    const double e = spec.eps_r[ell];
    if (e < -tol) {
      v.failing_modes.push_back(ell);
    } else if (e <= tol) {
      v.degenerate_modes.push_back(ell);
    }
  }
  // eps_theta and eps1' are strictly positive off the equator, so the
  // radial modes alone decide the verdict.
  if (!v.failing_modes.empty()) {
    v.classification = StabilityClass::LinearlyUnstable;
  } else if (!v.degenerate_modes.empty()) {
    v.classification = StabilityClass::Degenerate;
  } else {
    v.classification = StabilityClass::Stable;
  }
  return v;
}

StabilityRange stability_range(int n) {
  if (n < 3) {
    throw std::invalid_argument("stability_range needs n >= 3");
  }
  StabilityRange r;
  r.n = n;
  if (n == 3) {
    r.always_stable = true;
    return r;
  }
  const double b = b_n(n);
  r.stable_up_to = std::log1p(b);
  if (b > 0.0) {
    r.second_from = std::log1p(1.0 / b);
  }
  return r;
}

}  // namespace curvotex
