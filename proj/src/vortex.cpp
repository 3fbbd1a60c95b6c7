#include "curvotex/vortex.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvotex/errors.hpp"

namespace curvotex {

namespace {

constexpr double kCollisionDistance = 1e-6;

void validate(const VortexConfig& c) {
  if (c.positions.size() != c.vorticities.size()) {
    throw std::invalid_argument("positions and vorticities differ in length");
  }
  if (c.positions.empty()) {
    throw std::invalid_argument("empty vortex configuration");
  }
}

double min_pair_distance(const std::vector<Complex>& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      best = std::min(best, std::abs(z[i] - z[j]));
    }
  }
  return best;
}

std::vector<Complex> velocities_at(const VortexConfig& c,
                                   const std::vector<Complex>& z) {
  const SurfaceParam p = c.surface();
  std::vector<Complex> out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    Complex grad{0.0, 0.0};
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (k == j) {
        continue;
      }
      grad += c.vorticities[k] * greens_dzbar(c.greens, z[j], z[k], p);
    }
    const double s = sigma(z[j], p);
    out[j] = Complex{0.0, -s * s / (4.0 * M_PI)} * grad;
  }
  return out;
}

}  // namespace

double hamiltonian(const VortexConfig& c) {
  validate(c);
  const SurfaceParam p = c.surface();
  double h = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      h += c.vorticities[i] * c.vorticities[j] *
           greens(c.greens, c.positions[i], c.positions[j], p);
    }
  }
  return -h / (4.0 * M_PI);
}

std::pair<Complex, double> momentum(const VortexConfig& c) {
  validate(c);
  const SurfaceParam p = c.surface();
  Complex jc{0.0, 0.0};
  double ju = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto [mc, mu] = momentum_map(c.positions[j], p);
    jc += c.vorticities[j] * mc;
    ju += c.vorticities[j] * mu;
  }
  return {jc, ju};
}

double augmented_hamiltonian(const VortexConfig& c, double omega) {
  return hamiltonian(c) - omega * momentum(c).second;
}

std::vector<Complex> velocities(const VortexConfig& c) {
  validate(c);
  for (const double kappa : c.vorticities) {
    if (kappa == 0.0) {
      throw std::invalid_argument("zero vorticity has no induced motion");
    }
  }
  return velocities_at(c, c.positions);
}

Trajectory integrate(const VortexConfig& c, double t_end, double dt) {
  validate(c);
  if (dt <= 0.0 || t_end <= 0.0) {
    throw std::invalid_argument("integration requires positive t_end and dt");
  }
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);

  std::vector<Complex> z = c.positions;
  const auto log_state = [&](double t) {
    VortexConfig snap = c;
    snap.positions = z;
    traj.times.push_back(t);
    traj.states.push_back(z);
    traj.energy.push_back(hamiltonian(snap));
    const auto [jc, ju] = momentum(snap);
    traj.momentum_c.push_back(jc);
    traj.momentum_u.push_back(ju);
  };

  log_state(0.0);
  const std::size_t n = z.size();
  std::vector<Complex> k1, k2, k3, k4, work(n);
  for (std::size_t step = 0; step < steps; ++step) {
    if (min_pair_distance(z) < kCollisionDistance) {
      traj.aborted = true;
      traj.abort_reason = "collision approach: pairwise distance below 1e-6";
      return traj;
    }
    const double t = step * dt;
    const double h = std::min(dt, t_end - t);
    try {
      k1 = velocities_at(c, z);
      for (std::size_t i = 0; i < n; ++i) work[i] = z[i] + 0.5 * h * k1[i];
      k2 = velocities_at(c, work);
      for (std::size_t i = 0; i < n; ++i) work[i] = z[i] + 0.5 * h * k2[i];
      k3 = velocities_at(c, work);
      for (std::size_t i = 0; i < n; ++i) work[i] = z[i] + h * k3[i];
      k4 = velocities_at(c, work);
    } catch (const collision_error&) {
      traj.aborted = true;
      traj.abort_reason = "collision during an integration stage";
      return traj;
    }
    for (std::size_t i = 0; i < n; ++i) {
      z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    log_state(t + h);
  }
  return traj;
}

LinearizedSpectrum linearized_spectrum(const VortexConfig& c) {
  validate(c);
  LinearizedSpectrum result;

  const std::vector<Complex> v = velocities(c);
  double omega_acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    omega_acc += std::imag(v[j] / c.positions[j]);
  }
  result.omega = omega_acc / static_cast<double>(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    result.residual = std::max(
        result.residual,
        std::abs(v[j] - Complex{0.0, result.omega} * c.positions[j]));
  }
  result.equilibrium = result.residual <= 1e-6;

  // Vector field in the co-rotating frame, as a map on R^{2N}.
  const std::size_t n = c.size();
  const auto field = [&](const Eigen::VectorXd& state) {
    VortexConfig conf = c;
    for (std::size_t j = 0; j < n; ++j) {
      conf.positions[j] = Complex{state(2 * j), state(2 * j + 1)};
    }
    const std::vector<Complex> vel = velocities_at(conf, conf.positions);
    Eigen::VectorXd out(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      const Complex rel =
          vel[j] - Complex{0.0, result.omega} * conf.positions[j];
      out(2 * j) = rel.real();
      out(2 * j + 1) = rel.imag();
    }
    return out;
  };

  Eigen::VectorXd base(2 * n);
  double scale = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    base(2 * j) = c.positions[j].real();
    base(2 * j + 1) = c.positions[j].imag();
    scale = std::max(scale, std::abs(c.positions[j]));
  }

  const double h = 1e-3 * scale;
  Eigen::MatrixXd jac(2 * n, 2 * n);
  for (std::size_t col = 0; col < 2 * n; ++col) {
    Eigen::VectorXd probe = base;
    const auto sample = [&](double offset) {
      probe(col) = base(col) + offset;
      return field(probe);
    };
    jac.col(col) = (sample(-2 * h) - 8 * sample(-h) + 8 * sample(h) -
                    sample(2 * h)) /
                   (12 * h);
  }

  const Eigen::EigenSolver<Eigen::MatrixXd> solver(jac);
  result.eigenvalues.resize(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    result.eigenvalues[i] =
        Complex{solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag()};
  }
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            [](Complex a, Complex b) {
              return a.real() != b.real() ? a.real() < b.real()
                                          : a.imag() < b.imag();
            });
  return result;
}

}  // namespace curvotex
