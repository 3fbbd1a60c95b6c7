#pragma once

#include <array>
#include <complex>
#include <functional>
#include <utility>

namespace curvotex {

using Complex = std::complex<double>;

/// Curvature parameter of the surface family x^2 + y^2 + lambda u^2 - u = 0.
/// Gaussian curvature is 4*lambda: sphere for lambda > 0, plane at lambda = 0,
/// hyperbolic plane for lambda < 0. All surfaces share one stereographic chart
/// z with conformal factor sigma = 1 + lambda|z|^2 and metric |dz|^2 / sigma^2,
/// valid on { z : sigma(z) > 0 }.
struct SurfaceParam {
  double lambda = 0.0;
};

/// Point of the ambient (x, y, u) space carrying the surface family.
struct AmbientPoint {
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
};

/// Green's function of the Laplace-Beltrami operator entering the vortex
/// Hamiltonian. The three choices coincide on the plane (lambda = 0):
///  - PoleAtInfinity: log|z-w|^2, harmonic away from w.
///  - Antipodal:      log(|z-w|^2 / |1 + lambda z conj(w)|^2), opposite pole
///                    at the antipode of w.
///  - Background:     log(|z-w|^2 / (sigma(z) sigma(w))), uniform background
///                    with Delta G = -4 lambda.
enum class GreensChoice { PoleAtInfinity, Antipodal, Background };

/// Conformal factor 1 + lambda|z|^2. Throws chart_domain_error if <= 0.
double sigma(Complex z, SurfaceParam p);

/// Geodesic distance from the chart origin to chart radius r >= 0.
/// Analytic across lambda = 0: arctan(r sqrt(l))/sqrt(l) on the sphere,
/// r on the plane, artanh(r sqrt(-l))/sqrt(-l) on the hyperbolic plane.
double geodesic_radius(double r, SurfaceParam p);

/// Inverse of geodesic_radius: chart radius at geodesic distance a >= 0.
double chart_radius(double a, SurfaceParam p);

/// Antipodal point -1/(lambda conj(z)); sphere only (lambda > 0, z != 0).
Complex antipode(Complex z, SurfaceParam p);

/// Embedding of the chart into the ambient space: (x+iy, u) = (z, |z|^2)/sigma.
AmbientPoint embed(Complex z, SurfaceParam p);

/// Defining polynomial x^2 + y^2 + lambda u^2 - u of the surface family.
double casimir(const AmbientPoint& q, SurfaceParam p);

/// Chart components of the three ambient Killing fields, as complex numbers
/// v_x + i v_y. The third generator is the rotation field i z.
std::array<Complex, 3> killing_fields(Complex z, SurfaceParam p);

/// Momentum map (z, |z|^2)/sigma; first component complex, second real.
std::pair<Complex, double> momentum_map(Complex z, SurfaceParam p);

/// Green's function of the given choice at the pair (z, w), z != w.
double greens(GreensChoice choice, Complex z, Complex w, SurfaceParam p);

/// Wirtinger derivative dG/d(conj z) of greens in its first argument.
Complex greens_dzbar(GreensChoice choice, Complex z, Complex w, SurfaceParam p);

/// Laplace-Beltrami operator sigma^2 (f_xx + f_yy) applied to a scalar field,
/// via Richardson-extrapolated central differences. Base step h defaults to
/// 1e-3 * max(1, |z|); the stencil must stay inside the chart domain.
double laplace_beltrami(const std::function<double(Complex)>& f, Complex z,
                        SurfaceParam p, double h = 0.0);

}  // namespace curvotex
