#include "curvotex/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "curvotex/errors.hpp"

namespace curvotex {

namespace {

double ring_x(const RingSpec& s) { return s.lambda * s.r0 * s.r0; }

void check_mode_range(int n, int ell) {
  if (ell < 0 || 2 * ell > n) {
    throw std::out_of_range("mode index must satisfy 0 <= l <= n/2");
  }
}

double eps_r_background(const RingSpec& s, int ell) {
  const double x = ring_x(s);
  const double sig = 1.0 + x;
  const double k2 = s.kappa * s.kappa;
  return k2 / (4.0 * M_PI * s.r0 * s.r0) *
         (2.0 * (s.n - 1) * (1.0 + x * x) / (sig * sig) -
          static_cast<double>(ell) * (s.n - ell));
}

// Radial bracket is forced by the plain-log diagonal A: it equals
// A + (kappa^2/4 pi r0^2) trig_identity(n, l), cross-checked against the
// numerical Hessian.
double eps_r_pole(const RingSpec& s, int ell) {
  const double x = ring_x(s);
  const double sig = 1.0 + x;
  const double k2 = s.kappa * s.kappa;
  return k2 / (4.0 * M_PI * s.r0 * s.r0) *
         (2.0 * (s.n - 1) * (1.0 - x * x) / (sig * sig) -
          static_cast<double>(ell) * (s.n - ell));
}

double eps_theta_common(const RingSpec& s, int ell) {
  return s.kappa * s.kappa / (4.0 * M_PI) * static_cast<double>(ell) *
         (s.n - ell);
}

ModeSpectrum assemble_spectrum(const RingSpec& s, GreensChoice greens,
                               double (*radial)(const RingSpec&, int)) {
  ModeSpectrum spec;
  spec.ring = s;
  spec.greens = greens;
  const int top = s.n / 2;
  spec.eps_r.reserve(top + 1);
  spec.eps_theta.reserve(top + 1);
  for (int ell = 0; ell <= top; ++ell) {
    spec.eps_r.push_back(radial(s, ell));
    spec.eps_theta.push_back(eps_theta_common(s, ell));
  }
  const double x = ring_x(s);
  const double sig = 1.0 + x;
  const double sigt = 1.0 - x;
  const double half_n = 0.5 * s.n;
  spec.eps1prime_value = half_n * sig * sig * radial(s, 1) +
                         half_n / (s.r0 * s.r0) * sigt * sigt *
                             eps_theta_common(s, 1);
  return spec;
}

}  // namespace

double trig_identity(int n, int ell) {
  if (n < 2) {
    throw std::invalid_argument("trig identity needs n >= 2");
  }
  if (ell < 0 || ell > n) {
    throw std::out_of_range("trig identity needs 0 <= l <= n");
  }
  return (static_cast<double>(n) * n - 1.0) / 6.0 -
         static_cast<double>(ell) * (n - ell);
}

Eigen::VectorXd mode_components(const RingSpec& s, const FourierVector& v) {
  check_mode_range(s.n, v.ell);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * s.n);
  const int offset = (v.kind == ModeKind::Radial) ? 0 : s.n;
  const double scale = (v.kind == ModeKind::Radial) ? 1.0 : 1.0 / s.r0;
  for (int j = 0; j < s.n; ++j) {
    const double angle = 2.0 * M_PI * v.ell * j / s.n;
    const double value =
        (v.part == ModePart::Alpha) ? std::cos(angle) : -std::sin(angle);
    out(offset + j) = scale * value;
  }
  return out;
}

std::function<double(const Eigen::VectorXd&)> polar_hamiltonian(
    const RingSpec& s, GreensChoice greens) {
  const VortexConfig base = make_ring(s, greens);
  const double omega = omega0(s, greens);
  const int n = s.n;
  const double r0 = s.r0;
  return [base, omega, n, r0](const Eigen::VectorXd& d) {
    if (d.size() != 2 * n) {
      throw std::invalid_argument("displacement must have 2n components");
    }
    VortexConfig c = base;
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * M_PI * j / n + d(n + j);
      c.positions[j] = std::polar(r0 + d(j), angle);
    }
    return augmented_hamiltonian(c, omega);
  };
}

Eigen::MatrixXd hessian_closed_form(const RingSpec& s, GreensChoice greens) {
  const int n = s.n;
  const double x = ring_x(s);
  const double sig = 1.0 + x;
  const double sigt = 1.0 - x;
  const double k2 = s.kappa * s.kappa;
  const double r2 = s.r0 * s.r0;

  double diag_r = 0.0;
  switch (greens) {
    case GreensChoice::Background:
      diag_r = (s.n - 1) * k2 / (24.0 * M_PI * r2 * sig * sig) *
               ((5.0 - n) * sig * sig + 6.0 * sigt * sigt);
      break;
    case GreensChoice::PoleAtInfinity:
      diag_r = -(s.n - 1) * k2 / (24.0 * M_PI * r2 * sig) *
               ((n - 11.0) + (n + 13.0) * x);
      break;
    case GreensChoice::Antipodal:
      throw std::invalid_argument(
          "no closed-form Hessian for the antipodal choice");
  }
  const double diag_theta = k2 * (static_cast<double>(n) * n - 1.0) /
                            (24.0 * M_PI);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = diag_r;
    m(n + j, n + j) = diag_theta;
    for (int k = 0; k < n; ++k) {
      if (k == j) {
        continue;
      }
      const double gap = 1.0 - std::cos(2.0 * M_PI * (j - k) / n);
      m(j, k) = k2 / (4.0 * M_PI * r2 * gap);
      m(n + j, n + k) = -k2 / (4.0 * M_PI * gap);
    }
  }
  return m;
}

Eigen::MatrixXd hessian_numerical(const RingSpec& s, GreensChoice greens) {
  const auto f = polar_hamiltonian(s, greens);
  const int dim = 2 * s.n;

  Eigen::VectorXd steps(dim);
  for (int i = 0; i < dim; ++i) {
    steps(i) = (i < s.n) ? 5e-3 * s.r0 : 5e-3;
  }

  const auto eval = [&](int i, double hi, int j, double hj) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(dim);
    d(i) += hi;
    d(j) += hj;
    return f(d);
  };

  // Fourth-order stencils at steps {h, h/2}, Richardson-combined once.
  const auto pure = [&](int i, double h) {
    return (-eval(i, -2 * h, i, 0) + 16 * eval(i, -h, i, 0) -
            30 * f(Eigen::VectorXd::Zero(dim)) + 16 * eval(i, h, i, 0) -
            eval(i, 2 * h, i, 0)) /
           (12 * h * h);
  };
  const auto mixed = [&](int i, int j, double hi, double hj) {
    static const double w[4] = {1.0, -8.0, 8.0, -1.0};
    static const double o[4] = {-2.0, -1.0, 1.0, 2.0};
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        acc += w[a] * w[b] * eval(i, o[a] * hi, j, o[b] * hj);
      }
    }
    return acc / (144.0 * hi * hj);
  };

  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double c0 = pure(i, steps(i));
    const double c1 = pure(i, steps(i) / 2);
    m(i, i) = (16 * c1 - c0) / 15;
    for (int j = i + 1; j < dim; ++j) {
      const double m0 = mixed(i, j, steps(i), steps(j));
      const double m1 = mixed(i, j, steps(i) / 2, steps(j) / 2);
      m(i, j) = m(j, i) = (16 * m1 - m0) / 15;
    }
  }
  return 0.5 * (m + m.transpose());
}

ModeSpectrum mode_eigenvalues(const RingSpec& s) {
  return assemble_spectrum(s, GreensChoice::Background, eps_r_background);
}

ModeSpectrum mode_eigenvalues_alt(const RingSpec& s) {
  return assemble_spectrum(s, GreensChoice::PoleAtInfinity, eps_r_pole);
}

double eps1prime(const RingSpec& s) {
  const double sigt = 1.0 - ring_x(s);
  return s.n * (s.n - 1) * s.kappa * s.kappa * sigt * sigt /
         (4.0 * M_PI * s.r0 * s.r0);
}

std::vector<DJEntry> dJ_on_modes(const RingSpec& s) {
  const double x = ring_x(s);
  const double sig = 1.0 + x;
  const double sigt = 1.0 - x;
  std::vector<DJEntry> entries;
  for (int ell = 0; 2 * ell <= s.n; ++ell) {
    for (const ModeKind kind : {ModeKind::Radial, ModeKind::Angular}) {
      DJEntry e;
      e.ell = ell;
      e.kind = kind;
      e.dJ_c = {0.0, 0.0};
      e.dJ_u = 0.0;
      if (ell == 0 && kind == ModeKind::Radial) {
        e.dJ_u = s.kappa * s.n * s.r0 / (sig * sig);
      } else if (ell == 1 && kind == ModeKind::Radial) {
        e.dJ_c = {s.kappa * s.n * sigt / (sig * sig), 0.0};
      } else if (ell == 1 && kind == ModeKind::Angular) {
        e.dJ_c = {0.0, s.kappa * s.n / sig};
      }
      entries.push_back(e);
    }
  }
  return entries;
}

std::vector<Eigen::VectorXd> slice_basis(const RingSpec& s) {
  const double x = ring_x(s);
  if (std::abs(x - 1.0) < 1e-12) {
    throw equator_error("slice analysis undefined on the equator");
  }
  const double sig = 1.0 + x;
  const double sigt = 1.0 - x;

  const auto mode = [&](int ell, ModeKind kind, ModePart part) {
    return mode_components(s, {ell, kind, part});
  };

  std::vector<Eigen::VectorXd> basis;
  basis.push_back(sig * mode(1, ModeKind::Radial, ModePart::Alpha) -
                  sigt * mode(1, ModeKind::Angular, ModePart::Beta));
  basis.push_back(sig * mode(1, ModeKind::Radial, ModePart::Beta) +
                  sigt * mode(1, ModeKind::Angular, ModePart::Alpha));
  for (int ell = 2; 2 * ell <= s.n; ++ell) {
    basis.push_back(mode(ell, ModeKind::Radial, ModePart::Alpha));
    if (2 * ell != s.n) {
      basis.push_back(mode(ell, ModeKind::Radial, ModePart::Beta));
    }
    basis.push_back(mode(ell, ModeKind::Angular, ModePart::Alpha));
    if (2 * ell != s.n) {
      basis.push_back(mode(ell, ModeKind::Angular, ModePart::Beta));
    }
  }
  return basis;
}

}  // namespace curvotex
