#pragma once

#include <optional>
#include <vector>

namespace curvotex {

// Verdict of the linear analysis of a regular n-ring at x = lambda r0^2.
enum class StabilityClass { Stable, LinearlyUnstable, Degenerate };

struct StabilityVerdict {
  StabilityClass classification = StabilityClass::Stable;
  std::vector<int> failing_modes;     // l with eps_r^(l) < 0 beyond tolerance
  std::vector<int> degenerate_modes;  // l with eps_r^(l) = 0 within tolerance
};

// Parameter value where the radial eigenvalue of one Fourier mode vanishes.
struct BifurcationPoint {
  int n = 0;
  int ell = 0;
  double x = 0.0;                  // root of eps_r^(l) = 0 in (-1, 1]
  std::optional<double> partner;   // reciprocal root 1/x when x > 0
  double crossing_speed = 0.0;     // d(eps_r)/dx at x, kappa = r0 = 1
};

// Breakpoints of the stable range in log(1+x) coordinates.
struct StabilityRange {
  int n = 0;
  bool always_stable = false;
  std::optional<double> stable_up_to;  // log(1 + b_n)
  std::optional<double> second_from;   // log(1 + 1/b_n), only when b_n > 0
};

// Linear stability criterion (1+x^2)/(1+x)^2 > floor(n^2/4)/(2(n-1)).
bool is_stable(int n, double x);

// Same test for the plain-log Hamiltonian: (1-x)/(1+x) > rhs, the positivity
// condition of its top radial eigenvalue.
bool is_stable_alt(int n, double x);

// Threshold b_n: the root of the criterion's equality case in (-1, 1].
double b_n(int n);

// Root of eps_r^(l) = 0 for 2 <= l <= n/2, or nothing if the mode never
// degenerates.
std::optional<BifurcationPoint> bifurcation_value(int n, int ell);

// Per-mode sign analysis; throws equator_error at x = 1.
StabilityVerdict classify(int n, double x, double tol = 1e-9);

StabilityRange stability_range(int n);

}  // namespace curvotex
