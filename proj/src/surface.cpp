#include "curvotex/surface.hpp"

#include <cmath>
#include <string>

#include "curvotex/errors.hpp"

namespace curvotex {

namespace {

constexpr double kCoincidenceTol = 1e-14;
constexpr double kAntipodeTol = 1e-12;

// atan(sqrt(s))/sqrt(s) continued through s <= 0 as artanh(sqrt(-s))/sqrt(-s);
// the removable singularity at s = 0 is handled by the common series.
double atan_over_sqrt(double s) {
  if (std::abs(s) < 1e-8) {
    return 1.0 - s / 3.0 + s * s / 5.0;
  }
  if (s > 0.0) {
    const double q = std::sqrt(s);
    return std::atan(q) / q;
  }
  const double q = std::sqrt(-s);
  return std::atanh(q) / q;
}

// tan(sqrt(s))/sqrt(s) continued through s <= 0 as tanh(sqrt(-s))/sqrt(-s).
double tan_over_sqrt(double s) {
  if (std::abs(s) < 1e-8) {
    return 1.0 + s / 3.0 + 2.0 * s * s / 15.0;
  }
  if (s > 0.0) {
    const double q = std::sqrt(s);
    return std::tan(q) / q;
  }
  const double q = std::sqrt(-s);
  return std::tanh(q) / q;
}

}  // namespace

double sigma(Complex z, SurfaceParam p) {
  const double s = 1.0 + p.lambda * std::norm(z);
  if (s <= 0.0) {
    throw chart_domain_error("point outside chart domain: 1 + lambda|z|^2 = " +
                             std::to_string(s));
  }
  return s;
}

double geodesic_radius(double r, SurfaceParam p) {
  if (r < 0.0) {
    throw chart_domain_error("chart radius must be nonnegative");
  }
  if (p.lambda < 0.0 && r * r * (-p.lambda) >= 1.0) {
    throw chart_domain_error("chart radius beyond hyperbolic disc boundary");
  }
  return r * atan_over_sqrt(p.lambda * r * r);
}

double chart_radius(double a, SurfaceParam p) {
  if (a < 0.0) {
    throw chart_domain_error("geodesic radius must be nonnegative");
  }
  if (p.lambda > 0.0) {
    const double sl = std::sqrt(p.lambda);
    if (a >= M_PI / (2.0 * sl)) {
      throw chart_domain_error("geodesic radius reaches past the chart equator");
    }
  }
  return a * tan_over_sqrt(p.lambda * a * a);
}

Complex antipode(Complex z, SurfaceParam p) {
  if (p.lambda <= 0.0) {
    throw unsupported_geometry_error("antipode requires positive curvature");
  }
  if (std::abs(z) == 0.0) {
    throw pole_error("antipode of the chart origin is the point at infinity");
  }
  return -1.0 / (p.lambda * std::conj(z));
}

AmbientPoint embed(Complex z, SurfaceParam p) {
  const double s = sigma(z, p);
  return {z.real() / s, z.imag() / s, std::norm(z) / s};
}

double casimir(const AmbientPoint& q, SurfaceParam p) {
  return q.x * q.x + q.y * q.y + p.lambda * q.u * q.u - q.u;
}

std::array<Complex, 3> killing_fields(Complex z, SurfaceParam p) {
  const double x = z.real();
  const double y = z.imag();
  const double l = p.lambda;
  const Complex xi1{l * x * y, 0.5 * (1.0 - l * (x * x - y * y))};
  const Complex xi2{-0.5 * (1.0 + l * (x * x - y * y)), -l * x * y};
  const Complex xi3{-y, x};
  return {xi1, xi2, xi3};
}

std::pair<Complex, double> momentum_map(Complex z, SurfaceParam p) {
  const double s = sigma(z, p);
  return {z / s, std::norm(z) / s};
}

double greens(GreensChoice choice, Complex z, Complex w, SurfaceParam p) {
  const double sep2 = std::norm(z - w);
  if (sep2 < kCoincidenceTol * kCoincidenceTol) {
    throw collision_error("Green's function evaluated at coincident points");
  }
  switch (choice) {
    case GreensChoice::PoleAtInfinity:
      return std::log(sep2);
    case GreensChoice::Antipodal: {
      const double opp2 = std::norm(1.0 + p.lambda * z * std::conj(w));
      if (p.lambda > 0.0 && opp2 < kAntipodeTol * kAntipodeTol) {
        throw collision_error("point collides with the antipode of the source");
      }
      sigma(z, p);
      sigma(w, p);
      return std::log(sep2 / opp2);
    }
    case GreensChoice::Background:
      return std::log(sep2 / (sigma(z, p) * sigma(w, p)));
  }
  throw std::invalid_argument("unknown Green's function choice");
}

Complex greens_dzbar(GreensChoice choice, Complex z, Complex w, SurfaceParam p) {
  const Complex dz = std::conj(z) - std::conj(w);
  if (std::abs(dz) < kCoincidenceTol) {
    throw collision_error("Green's gradient evaluated at coincident points");
  }
  switch (choice) {
    case GreensChoice::PoleAtInfinity:
      return 1.0 / dz;
    case GreensChoice::Antipodal: {
      const Complex denom = 1.0 + p.lambda * std::conj(z) * w;
      if (p.lambda > 0.0 && std::abs(denom) < kAntipodeTol) {
        throw collision_error("point collides with the antipode of the source");
      }
      return 1.0 / dz - p.lambda * w / denom;
    }
    case GreensChoice::Background:
      return 1.0 / dz - p.lambda * z / sigma(z, p);
  }
  throw std::invalid_argument("unknown Green's function choice");
}

double laplace_beltrami(const std::function<double(Complex)>& f, Complex z,
                        SurfaceParam p, double h) {
  if (h <= 0.0) {
    h = 1e-3 * std::max(1.0, std::abs(z));
  }
  // Domain check for the widest stencil points in both axes.
  for (const Complex offset : {Complex{h, 0.0}, Complex{0.0, h}}) {
    sigma(z + offset, p);
    sigma(z - offset, p);
  }

  const auto second = [&](Complex dir, double step) {
    return (f(z + step * dir) - 2.0 * f(z) + f(z - step * dir)) / (step * step);
  };
  const auto richardson = [&](Complex dir) {
    const double d0 = second(dir, h);
    const double d1 = second(dir, h / 2.0);
    const double d2 = second(dir, h / 4.0);
    const double r0 = (4.0 * d1 - d0) / 3.0;
    const double r1 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
  };

  const double s = sigma(z, p);
  return s * s * (richardson({1.0, 0.0}) + richardson({0.0, 1.0}));
}

}  // namespace curvotex
