#include "curvotex/numerics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cstdlib>
#include <future>
#include <vector>

namespace curvotex::num {

double d1(const Fn1& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double d2(const Fn1& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) -
          f(x + 2 * h)) /
         (12 * h * h);
}

double d2_richardson(const Fn1& f, double x, double h) {
  const auto plain = [&](double step) {
    return (f(x + step) - 2 * f(x) + f(x - step)) / (step * step);
  };
  const double a0 = plain(h);
  const double a1 = plain(h / 2);
  const double a2 = plain(h / 4);
  const double b0 = (4 * a1 - a0) / 3;
  const double b1 = (4 * a2 - a1) / 3;
  return (16 * b1 - b0) / 15;
}

std::array<double, 5> fit_even_series(const Fn1& f, double h) {
  // Averaging f(t) and f(-t) projects out all odd terms; the remaining
  // least-squares problem for the even basis is the 5x5 Vandermonde system in
  // s = (t / 4h)^2, solved at the five distinct sample radii.
  Eigen::Matrix<double, 5, 5> vander;
  Eigen::Matrix<double, 5, 1> rhs;
  for (int k = 0; k <= 4; ++k) {
    const double t = k * h;
    rhs(k) = (k == 0) ? f(0.0) : 0.5 * (f(t) + f(-t));
    const double s = (t / (4 * h)) * (t / (4 * h));
    double pw = 1.0;
    for (int m = 0; m <= 4; ++m) {
      vander(k, m) = pw;
      pw *= s;
    }
  }
  const Eigen::Matrix<double, 5, 1> scaled =
      vander.colPivHouseholderQr().solve(rhs);
  std::array<double, 5> coeffs{};
  double scale = 1.0;
  for (int m = 0; m <= 4; ++m) {
    coeffs[m] = scaled(m) * scale;
    scale /= (4 * h) * (4 * h);
  }
  return coeffs;
}

std::size_t thread_cap() {
  const char* env = std::getenv("CURVOTEX_THREADS");
  if (env == nullptr) {
    return 1;
  }
  const long parsed = std::strtol(env, nullptr, 10);
  return parsed > 0 ? static_cast<std::size_t>(parsed) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        body(i);
      }
    }));
  }
  for (auto& fut : futures) {
    fut.get();
  }
}

}  // namespace curvotex::num
