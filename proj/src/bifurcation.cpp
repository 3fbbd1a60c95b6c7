#include "curvotex/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "curvotex/errors.hpp"
#include "curvotex/numerics.hpp"
#include "curvotex/stability.hpp"

namespace curvotex {

namespace {

int mod_n(int k, int n) { return ((k % n) + n) % n; }

void check_mode_range(int n, int ell) {
  if (ell < 0 || ell >= n) {
    throw std::out_of_range("mode index must satisfy 0 <= l < n");
  }
}

double bifurcation_x(int n, int ell) {
  const auto bp = bifurcation_value(n, ell);
  if (!bp) {
    throw std::invalid_argument("mode never degenerates");
  }
  return bp->x;
}

Eigen::VectorXd v1prime_vector(const RingSpec& s, int which) {
  const double x = s.lambda * s.r0 * s.r0;
  const double sig = 1.0 + x;
  const double sigt = 1.0 - x;
  if (which == 0) {
    return sig * mode_components(s, {1, ModeKind::Radial, ModePart::Alpha}) -
           sigt * mode_components(s, {1, ModeKind::Angular, ModePart::Beta});
  }
  return sig * mode_components(s, {1, ModeKind::Radial, ModePart::Beta}) +
         sigt * mode_components(s, {1, ModeKind::Angular, ModePart::Alpha});
}

}  // namespace

DihedralElement dihedral_compose(int n, const DihedralElement& a,
                                 const DihedralElement& b) {
  if (n < 1) {
    throw std::invalid_argument("dihedral group needs n >= 1");
  }
  DihedralElement out;
  out.rotation_power =
      mod_n(a.rotation_power + (a.reflected ? -1 : 1) * b.rotation_power, n);
  out.reflected = a.reflected != b.reflected;
  return out;
}

VortexConfig act(const DihedralElement& g, const VortexConfig& c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) {
    throw std::invalid_argument("dihedral action needs a nonempty config");
  }
  for (double kappa : c.vorticities) {
    if (kappa != c.vorticities.front()) {
      throw std::invalid_argument(
          "dihedral action needs identical vorticities");
    }
  }
  std::vector<Complex> w(c.positions);
  if (g.reflected) {
    for (int j = 0; j < n; ++j) {
      w[j] = std::conj(c.positions[mod_n(-j, n)]);
    }
  }
  const int k = mod_n(g.rotation_power, n);
  const Complex phase = std::polar(1.0, -2.0 * M_PI * k / n);
  VortexConfig out = c;
  for (int j = 0; j < n; ++j) {
    out.positions[j] = phase * w[(j + k) % n];
  }
  return out;
}

ModeCoefficient act_on_mode(int n, const DihedralElement& g,
                            const ModeCoefficient& mc) {
  check_mode_range(n, mc.ell);
  ModeCoefficient out = mc;
  if (g.reflected) {
    out.value = std::conj(out.value);
    if (mc.kind == ModeKind::Angular) {
      out.value = -out.value;
    }
  }
  out.value *= std::polar(1.0, -2.0 * M_PI * mc.ell * g.rotation_power / n);
  return out;
}

Complex act_on_zeta_prime(int n, const DihedralElement& g, Complex zp) {
  if (g.reflected) {
    zp = std::conj(zp);
  }
  return zp * std::polar(1.0, -2.0 * M_PI * g.rotation_power / n);
}

Eigen::VectorXd polar_displacement(const RingSpec& s, const VortexConfig& c) {
  if (static_cast<int>(c.size()) != s.n) {
    throw std::invalid_argument("configuration size does not match the ring");
  }
  Eigen::VectorXd d(2 * s.n);
  for (int j = 0; j < s.n; ++j) {
    const double ref = 2.0 * M_PI * j / s.n + s.phase;
    d(j) = std::abs(c.positions[j]) - s.r0;
    d(s.n + j) = std::arg(c.positions[j] * std::polar(1.0, -ref));
  }
  return d;
}

ModeCoefficient project_mode(const RingSpec& s, const Eigen::VectorXd& d,
                             int ell, ModeKind kind) {
  check_mode_range(s.n, ell);
  if (d.size() != 2 * s.n) {
    throw std::invalid_argument("displacement must have 2n components");
  }
  const int offset = (kind == ModeKind::Radial) ? 0 : s.n;
  Complex acc{0.0, 0.0};
  for (int j = 0; j < s.n; ++j) {
    acc += d(offset + j) * std::polar(1.0, 2.0 * M_PI * ell * j / s.n);
  }
  return {ell, kind, acc / static_cast<double>(s.n)};
}

double directional_derivative(int order, const RingSpec& s,
                              const std::vector<Eigen::VectorXd>& dirs,
                              std::vector<std::string>* warnings) {
  if (order != 3 && order != 4) {
    throw std::invalid_argument("directional derivative order must be 3 or 4");
  }
  if (static_cast<int>(dirs.size()) != order) {
    throw std::invalid_argument("need one direction per derivative order");
  }
  for (const auto& dir : dirs) {
    if (dir.size() != 2 * s.n) {
      throw std::invalid_argument("directions must have 2n components");
    }
  }

  const auto f = polar_hamiltonian(s, GreensChoice::Background);

  // Tensor product of 5-point fourth-order first-derivative stencils, one
  // per direction.
  static const std::array<int, 4> off = {-2, -1, 1, 2};
  static const std::array<double, 4> wgt = {1.0, -8.0, 8.0, -1.0};
  const auto tensor = [&](double h) {
    std::vector<int> idx(order, 0);
    double acc = 0.0;
    for (;;) {
      double w = 1.0;
      Eigen::VectorXd d = Eigen::VectorXd::Zero(2 * s.n);
      for (int a = 0; a < order; ++a) {
        w *= wgt[idx[a]];
        d += (h * off[idx[a]]) * dirs[a];
      }
      acc += w * f(d);
      int a = 0;
      while (a < order && ++idx[a] == 4) {
        idx[a++] = 0;
      }
      if (a == order) {
        break;
      }
    }
    return acc / std::pow(12.0 * h, order);
  };

  const double h0 = 1e-2 * s.r0;
  double final_value = 0.0;
  double prev_value = 0.0;
  if (order == 3) {
    const double d0 = tensor(h0);
    const double d1 = tensor(2.0 * h0);
    const double d2 = tensor(4.0 * h0);
    const double r0 = (16.0 * d0 - d1) / 15.0;
    const double r1 = (16.0 * d1 - d2) / 15.0;
    final_value = (64.0 * r0 - r1) / 63.0;
    prev_value = r0;
  } else {
    const double d0 = tensor(h0);
    const double d1 = tensor(2.0 * h0);
    final_value = (16.0 * d0 - d1) / 15.0;
    prev_value = d0;
  }

  if (warnings != nullptr) {
    const double floor = 1e-7 * s.kappa * s.kappa * s.n * s.n /
                         (4.0 * M_PI * std::pow(s.r0, order - 2));
    const double denom = std::max(std::abs(final_value), std::abs(prev_value));
    if (denom > floor &&
        std::abs(final_value - prev_value) > 1e-4 * denom) {
      std::ostringstream msg;
      msg << "order-" << order
          << " derivative: extrapolation levels disagree by "
          << std::abs(final_value - prev_value) / denom << " relative";
      warnings->push_back(msg.str());
    }
  }
  return final_value;
}

DegeneracyReport even_probe(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("even_probe needs even n >= 4");
  }
  DegeneracyReport rep;
  rep.n = n;
  rep.x_star = bifurcation_x(n, n / 2);
  rep.parity = ProbeParity::Even;

  RingSpec s;
  s.n = n;
  s.lambda = rep.x_star;  // kappa = r0 = 1
  const auto f = polar_hamiltonian(s);
  const Eigen::VectorXd probe =
      mode_components(s, {n / 2, ModeKind::Radial, ModePart::Alpha});
  const auto fit = num::fit_even_series(
      [&](double t) { return f(t * probe); }, 2e-2 * s.r0);

  const double x = rep.x_star;
  const double sig = 1.0 + x;
  const double T =
      (n - 2.0) * (std::pow(static_cast<double>(n), 3) + 2.0 * n * n -
                   12.0 * n + 24.0) *
          std::pow(sig, 4) +
      24.0 * (n - 1.0) * x *
          (16.0 * x * x * x - 36.0 * x * x + 40.0 * x - 4.0);

  EvenProbeData data;
  data.t2_coeff = fit[1];
  data.t4_coeff = fit[2];
  data.T_value = T;
  const double closed_t4 = n * T / (768.0 * M_PI * std::pow(sig, 4));
  if (std::abs(data.t4_coeff - closed_t4) >
      1e-4 * std::max(std::abs(closed_t4), 1e-12)) {
    rep.warnings.push_back("fitted t^4 coefficient drifts from closed form");
  }
  rep.even_data = data;
  rep.verdict = data.t4_coeff > 0.0 ? ProbeVerdict::StableDegenerate
                                    : ProbeVerdict::Inconclusive;
  return rep;
}

DegeneracyReport odd_probe(int n, bool at_reciprocal_root) {
  if (n < 5 || n % 2 == 0) {
    throw std::invalid_argument("odd_probe needs odd n >= 5");
  }
  DegeneracyReport rep;
  rep.n = n;
  rep.parity = ProbeParity::Odd;
  const double root = bifurcation_x(n, (n - 1) / 2);
  if (at_reciprocal_root) {
    if (root <= 0.0) {
      throw std::invalid_argument(
          "no reciprocal root: the bifurcation value is not positive");
    }
    rep.x_star = 1.0 / root;
  } else {
    rep.x_star = root;
  }

  RingSpec s;
  s.n = n;
  s.lambda = rep.x_star;  // kappa = r0 = 1
  const Eigen::VectorXd a1 =
      mode_components(s, {(n - 1) / 2, ModeKind::Radial, ModePart::Alpha});
  const Eigen::VectorXd a2 =
      mode_components(s, {(n - 1) / 2, ModeKind::Radial, ModePart::Beta});
  const Eigen::VectorXd b1 = v1prime_vector(s, 0);

  OddProbeData data;
  data.beta = eps1prime(s);
  const Eigen::MatrixXd hess = hessian_closed_form(s);
  const double quad = b1.dot(hess * b1);
  if (std::abs(quad - data.beta) > 1e-8 * std::abs(data.beta)) {
    rep.warnings.push_back("Hessian quadratic form on V_1' drifts from eps_1'");
  }

  data.gamma = directional_derivative(3, s, {a1, a1, b1}, &rep.warnings);

  double mean = 0.0;
  std::array<double, 8> quartic{};
  for (int i = 0; i < 8; ++i) {
    const double theta = i * M_PI / 8.0;
    const Eigen::VectorXd a = std::cos(theta) * a1 + std::sin(theta) * a2;
    quartic[i] = directional_derivative(4, s, {a, a, a, a}, &rep.warnings);
    mean += quartic[i] / 8.0;
  }
  const auto [lo, hi] = std::minmax_element(quartic.begin(), quartic.end());
  if (*hi - *lo > 1e-4 * std::abs(mean)) {
    throw anisotropy_error("quartic form is not isotropic on V_c");
  }
  data.delta = mean;
  data.discriminant = data.beta * data.delta - data.gamma * data.gamma;

  rep.odd_data = data;
  rep.verdict = (data.delta > 0.0 && data.discriminant > 0.0)
                    ? ProbeVerdict::StableDegenerate
                    : ProbeVerdict::Inconclusive;
  // The full fourth-order test carries multinomial weights: positivity of
  // delta a^4 + 6 gamma a^2 b + 3 beta b^2 needs beta delta > 3 gamma^2,
  // stronger than the reported discriminant.  Flag any gap between the two.
  if (rep.verdict == ProbeVerdict::StableDegenerate &&
      data.beta * data.delta <= 3.0 * data.gamma * data.gamma) {
    rep.warnings.push_back(
        "discriminant positive but beta*delta <= 3*gamma^2; the weighted "
        "fourth-order test is inconclusive");
  }
  return rep;
}

std::vector<DegeneracyReport> conjecture_sweep(int n_max) {
  if (n_max < 4) {
    throw std::invalid_argument("conjecture_sweep needs n_max >= 4");
  }
  std::vector<DegeneracyReport> out(n_max - 3);
  num::parallel_for(out.size(), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 4;
    out[i] = (n % 2 == 0) ? even_probe(n) : odd_probe(n);
  });
  return out;
}

double eigenvalue_crossing_speed(int n, int ell) {
  const auto bp = bifurcation_value(n, ell);
  if (!bp) {
    throw std::invalid_argument("mode never degenerates");
  }
  return bp->crossing_speed;
}

double even_probe_sum(double m) {
  static const std::array<double, 10> poly = {384.0,   2560.0,  4832.0,
                                              5024.0,  10616.0, 15888.0,
                                              10778.0, 3266.0,  177.0,
                                              4.0};
  double p = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    p = p * m + *it;
  }
  const double q = m * m - 4.0 * m - 4.0;
  return 128.0 * (m + 1.0) * p / std::pow(q, 4);
}

double even_probe_product(double m) {
  static const std::array<double, 11> poly = {576.0,   5376.0,  15136.0,
                                              25824.0, 57332.0, 85512.0,
                                              39960.0, 1044.0,  7409.0,
                                              648.0,   16.0};
  double p = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    p = p * m + *it;
  }
  const double q = m * m - 4.0 * m - 4.0;
  return 4096.0 * (m + 1.0) * (m + 1.0) * p / std::pow(q, 4);
}

namespace {

struct Hessian2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;
};

CriticalPointType classify_hessian(const Hessian2& h) {
  const double scale =
      std::max({std::abs(h.xx), std::abs(h.yy), std::abs(h.xy), 1e-30});
  const double det = h.xx * h.yy - h.xy * h.xy;
  if (std::abs(det) < 1e-10 * scale * scale) {
    return CriticalPointType::Degenerate;
  }
  if (det < 0.0) {
    return CriticalPointType::Saddle;
  }
  return (h.xx + h.yy > 0.0) ? CriticalPointType::Minimum
                             : CriticalPointType::Maximum;
}

Hessian2 normal_form_hessian(const NormalFormSpec& spec, double x, double y) {
  Hessian2 h;
  if (spec.k == 2) {
    h.xx = -2.0 * spec.u + 12.0 * spec.alpha * x * x;
    h.yy = 2.0;
    h.xy = 0.0;
    return h;
  }
  const double n2 = x * x + y * y;
  const Complex z{x, y};
  const Complex zk2 = std::pow(z, spec.k - 2);
  const double c = spec.beta * spec.k * (spec.k - 1);
  h.xx = -2.0 * spec.u + 4.0 * spec.alpha * n2 + 8.0 * spec.alpha * x * x +
         c * zk2.real();
  h.yy = -2.0 * spec.u + 4.0 * spec.alpha * n2 + 8.0 * spec.alpha * y * y -
         c * zk2.real();
  h.xy = 8.0 * spec.alpha * x * y - c * zk2.imag();
  return h;
}

double normal_form_value(const NormalFormSpec& spec, double x, double y) {
  if (spec.k == 2) {
    return -spec.u * x * x + spec.alpha * std::pow(x, 4) + y * y;
  }
  const double n2 = x * x + y * y;
  return -spec.u * n2 + spec.alpha * n2 * n2 +
         spec.beta * std::pow(Complex{x, y}, spec.k).real();
}

// Positive roots of -2u + 4 alpha rho^2 + s k beta rho^{k-2} on (0, extent].
std::vector<double> radial_roots(const NormalFormSpec& spec, int sign,
                                 double extent) {
  const auto g = [&](double rho) {
    return -2.0 * spec.u + 4.0 * spec.alpha * rho * rho +
           sign * spec.k * spec.beta * std::pow(rho, spec.k - 2);
  };
  std::vector<double> roots;
  const int cells = 4096;
  double prev_rho = extent / cells * 0.25;  // skip the origin itself
  double prev_val = g(prev_rho);
  for (int i = 1; i <= cells; ++i) {
    const double rho = extent * i / cells;
    const double val = g(rho);
    if (val == 0.0) {
      roots.push_back(rho);
    } else if (prev_val * val < 0.0) {
      double lo = prev_rho;
      double hi = rho;
      double flo = prev_val;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = g(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_rho = rho;
    prev_val = val;
  }
  return roots;
}

}  // namespace

NormalFormField normal_form_contours(const NormalFormSpec& spec, int grid,
                                     double extent) {
  if (spec.k < 2) {
    throw std::invalid_argument("normal form needs k >= 2");
  }
  if (grid < 1 || extent <= 0.0) {
    throw std::invalid_argument("normal form grid must be positive");
  }
  if (spec.k == 2) {
    if (spec.alpha == 0.0) {
      throw std::invalid_argument("degenerate normal form: alpha = 0");
    }
  } else if (spec.beta == 0.0) {
    throw std::invalid_argument("degenerate normal form: beta = 0");
  }
  if (spec.k == 4 && std::abs(spec.alpha) == std::abs(spec.beta)) {
    throw std::invalid_argument(
        "degenerate normal form: |alpha| = |beta| at k = 4");
  }

  NormalFormField field;
  field.spec = spec;
  field.grid = grid;
  field.extent = extent;
  field.structure = (spec.k == 3 ||
                     (spec.k == 4 && std::abs(spec.alpha) < std::abs(spec.beta)))
                        ? BranchStructure::Transcritical
                        : BranchStructure::DihedralPitchfork;

  field.values.reserve(static_cast<std::size_t>(grid) * grid);
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const double x =
          grid == 1 ? 0.0 : -extent + 2.0 * extent * ix / (grid - 1);
      const double y =
          grid == 1 ? 0.0 : -extent + 2.0 * extent * iy / (grid - 1);
      field.values.push_back(normal_form_value(spec, x, y));
    }
  }

  const auto push_point = [&](double x, double y) {
    CriticalPoint p;
    p.x = x;
    p.y = y;
    p.type = classify_hessian(normal_form_hessian(spec, x, y));
    field.critical_points.push_back(p);
  };

  push_point(0.0, 0.0);
  if (spec.k == 2) {
    const double r2 = spec.u / (2.0 * spec.alpha);
    if (r2 > 0.0 && std::sqrt(r2) <= extent) {
      push_point(std::sqrt(r2), 0.0);
      push_point(-std::sqrt(r2), 0.0);
    }
  } else {
    for (int sign : {1, -1}) {
      for (double rho : radial_roots(spec, sign, extent)) {
        for (int j = 0; j < spec.k; ++j) {
          const double psi = (sign == 1)
                                 ? 2.0 * M_PI * j / spec.k
                                 : (2.0 * j + 1.0) * M_PI / spec.k;
          push_point(rho * std::cos(psi), rho * std::sin(psi));
        }
      }
    }
  }
  return field;
}

double gallery_phase(int n, int ell, GalleryBranch branch) {
  if (ell < 2 || 2 * ell > n) {
    throw std::out_of_range("gallery mode needs 2 <= l <= n/2");
  }
  if (branch == GalleryBranch::M) {
    return 0.0;
  }
  const int k = n / std::gcd(n, ell);
  if (k % 2 != 0) {
    throw std::invalid_argument(
        "branch m' is conjugate to m when n/gcd(n, l) is odd");
  }
  if (2 * ell == n) {
    throw std::invalid_argument("branch m' degenerates for l = n/2");
  }
  // The reflection (k, true) fixes the configuration with phase pi l k / n
  // (mod pi): the mode coefficient carries phase -phi through the projection
  // kernel, so the coefficient fixed-phase -pi l / n maps to +pi l / n here.
  return M_PI * ell / n;
}

VortexConfig perturbation_gallery(int n, int ell, double eps,
                                  GalleryBranch branch, double r0,
                                  double lambda) {
  const double phi = gallery_phase(n, ell, branch);
  if (r0 <= 0.0) {
    throw std::invalid_argument("gallery needs r0 > 0");
  }
  VortexConfig c;
  c.lambda = lambda;
  c.greens = GreensChoice::Background;
  c.positions.resize(n);
  c.vorticities.assign(n, 1.0);
  for (int j = 0; j < n; ++j) {
    const double r = r0 + eps * std::cos(2.0 * M_PI * ell * j / n + phi);
    c.positions[j] = std::polar(r, 2.0 * M_PI * j / n);
  }
  return c;
}

std::pair<double, double> restricted_quartic(
    int n, int ell, std::vector<std::string>* warnings) {
  if (ell < 2 || 2 * ell > n) {
    throw std::out_of_range("restricted quartic needs 2 <= l <= n/2");
  }
  if (n / std::gcd(n, ell) != 4) {
    throw std::invalid_argument(
        "restricted quartic is defined only when n/gcd(n, l) = 4");
  }
  RingSpec s;
  s.n = n;
  s.lambda = bifurcation_x(n, ell);  // kappa = r0 = 1
  const Eigen::VectorXd va =
      mode_components(s, {ell, ModeKind::Radial, ModePart::Alpha});
  const Eigen::VectorXd vb =
      mode_components(s, {ell, ModeKind::Radial, ModePart::Beta});

  const int samples = 16;
  double mean = 0.0;
  double c4 = 0.0;
  double s4 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * M_PI * i / samples;
    const Eigen::VectorXd a = std::cos(theta) * va + std::sin(theta) * vb;
    const double g =
        directional_derivative(4, s, {a, a, a, a}, warnings) / 24.0;
    mean += g / samples;
    c4 += 2.0 * g * std::cos(4.0 * theta) / samples;
    s4 += 2.0 * g * std::sin(4.0 * theta) / samples;
  }
  return {mean, std::hypot(c4, s4)};
}

}  // namespace curvotex
