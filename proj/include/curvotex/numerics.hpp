#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace curvotex::num {

using Fn1 = std::function<double(double)>;

/// Fourth-order central first derivative, 5-point stencil.
double d1(const Fn1& f, double x, double h);

/// Fourth-order central second derivative, 5-point stencil.
double d2(const Fn1& f, double x, double h);

/// Second derivative from 2nd-order central stencils at steps {h, h/2, h/4},
/// Richardson-extrapolated twice.
double d2_richardson(const Fn1& f, double x, double h);

/// Coefficients {c0, c2, c4, c6, c8} of the even part of f around 0, fitted
/// by least squares over the nine symmetric samples t = 0, +-h, ..., +-4h.
std::array<double, 5> fit_even_series(const Fn1& f, double h);

/// Thread cap from CURVOTEX_THREADS (default 1).
std::size_t thread_cap();

/// Runs body(0..n-1), split across at most thread_cap() threads. Results must
/// be written to disjoint slots so the outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace curvotex::num
