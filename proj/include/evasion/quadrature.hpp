#pragma once

#include <functional>

namespace evasion::quadrature {

// Tolerances for adaptive integration. `target_rel` is the tolerance the
// scheme aims for; QuadratureFailure is thrown when the error estimate still
// exceeds max(fail_rel * |value|, abs_floor) after the deepest refinement.
struct Tolerance {
  double target_rel = 1e-9;
  double fail_rel = 1e-4;
  double abs_floor = 1e-12;
  int max_depth = 15;
};

// Adaptive Gauss-Kronrod integral of f over [a, b].
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    Tolerance tol = {});

// Integral of f(r, theta) * r over [r0, r1] x [t0, t1]: the polar area
// element is applied here, f is the plain integrand.
double integrate_polar(const std::function<double(double, double)>& f, double r0, double r1,
                       double t0, double t1, Tolerance tol = {});

}  // namespace evasion::quadrature
