#pragma once

#include <cstddef>
#include <vector>

#include "evasion/geometry.hpp"
#include "evasion/potential.hpp"
#include "evasion/rng.hpp"

namespace evasion {

// Analytic optimal evasion density on a wedge:
//
//   xi(r, theta) = norm_const * exp(-rate_a * r^2 / 2) * r^(2*omega)
//                  * cos^2(omega * theta),      omega = pi / (2 * theta_max)
//
// with rate_a = sqrt(rho / T) and
// norm_const = (rho/T)^((omega+1)/2) / (theta_max * Gamma(omega+1) * 2^omega).
// The radial law has a clean reduction: s = r^2 is Gamma(omega + 1, 2/rate_a)
// distributed once the polar Jacobian is absorbed, which drives the exact
// sampler, the moments, and the tail-based truncation policy.
struct ClosedFormDensity {
  WedgeDomain wedge;
  double rho = 1.0;
  double horizon_T = 1.0;
  double omega = 0.0;
  double rate_a = 0.0;
  double norm_const = 0.0;

  double gamma_shape() const { return omega + 1.0; }
  double gamma_scale() const { return 2.0 / rate_a; }
};

// Smallest radius whose Gamma-law tail mass falls below 1e-10. Used as the
// default wedge truncation so that meshing and quadrature see the whole
// density up to a negligible remainder.
double auto_r_max(double theta_max, double rho, double T);

// Builds the density and its constants; the wedge r_max is adjusted upward
// if needed so the truncated tail mass stays below 1e-10.
ClosedFormDensity make_closed_form(WedgeDomain wedge, double rho, double T);

// Density value; exactly 0 outside the wedge and on the angular boundary.
double pdf(const ClosedFormDensity& d, Point2 y1);

// u = sqrt(xi) and its polar gradient, in wedge-local coordinates. Exposed
// for the solver comparisons and the Fisher quadrature.
double sqrt_pdf_local(const ClosedFormDensity& d, double r, double theta);
double sqrt_pdf_dr(const ClosedFormDensity& d, double r, double theta);
// (1/r) * d/dtheta of sqrt(xi); finite down to r = 0 for theta_max <= pi.
double sqrt_pdf_dtheta_over_r(const ClosedFormDensity& d, double r, double theta);

// Quadrature of the density over the truncated wedge (normalization check).
double integral(const ClosedFormDensity& d);

// Exact sampling: r^2 from the Gamma radial law, theta by numeric inversion
// of the closed-form angular CDF (bracketed Newton, 1e-12 tolerance). Draw
// order per point is radial first, then angular.
PolarOffset sample_local(const ClosedFormDensity& d, SeededGenerator& rng);
std::vector<Point2> sample(const ClosedFormDensity& d, SeededGenerator& rng, std::size_t n);

// Angular CDF F(theta) on [-theta_max, theta_max] and its numeric inverse.
double angular_cdf(const ClosedFormDensity& d, double theta);
double inverse_angular_cdf(const ClosedFormDensity& d, double u);

double mean_radius(const ClosedFormDensity& d);     // E[r], Gamma moment
double mean_cos_angle(const ClosedFormDensity& d);  // E[cos theta], quadrature
// apex + E[r] E[cos theta] heading; the cross-heading component is exactly 0.
Point2 mean(const ClosedFormDensity& d);

// trace of the Fisher information, evaluated as 4 * integral of |grad u|^2
// (the u-form is smooth where |grad xi|^2 / xi is 0/0 on the boundary).
double fisher_trace(const ClosedFormDensity& d);

// Expected maneuver energy psi = E[U(y1)] by polar quadrature.
double expected_energy(const ClosedFormDensity& d, const EnergyPotential& pot);

}  // namespace evasion
