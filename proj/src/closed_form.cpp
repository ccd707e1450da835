#include "evasion/closed_form.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "evasion/quadrature.hpp"

namespace evasion {

namespace {
constexpr double kTailMass = 1e-10;
constexpr double kThetaTol = 1e-12;

void validate_params(const WedgeDomain& wedge, double rho, double T) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidParameter("closed form: rho must be > 0");
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidParameter("closed form: T must be > 0");
  const double omega = std::numbers::pi / (2.0 * wedge.half_angle);
  if (omega + 1.0 > 170.0) {
    throw InvalidParameter("closed form: half_angle too small, Gamma prefactor overflows");
  }
}
}  // namespace

double auto_r_max(double theta_max, double rho, double T) {
  const double omega = std::numbers::pi / (2.0 * theta_max);
  const double shape = omega + 1.0;
  const double scale = 2.0 / std::sqrt(rho / T);
  return std::sqrt(scale * boost::math::gamma_q_inv(shape, kTailMass));
}

ClosedFormDensity make_closed_form(WedgeDomain wedge, double rho, double T) {
  make_wedge(wedge.apex, wedge.heading, wedge.half_angle, wedge.r_max);
  validate_params(wedge, rho, T);
  ClosedFormDensity d;
  d.rho = rho;
  d.horizon_T = T;
  d.omega = std::numbers::pi / (2.0 * wedge.half_angle);
  d.rate_a = std::sqrt(rho / T);
  d.norm_const = std::pow(rho / T, 0.5 * (d.omega + 1.0)) /
                 (wedge.half_angle * std::tgamma(d.omega + 1.0) * std::pow(2.0, d.omega));
  wedge.r_max = std::max(wedge.r_max, auto_r_max(wedge.half_angle, rho, T));
  d.wedge = wedge;
  return d;
}

double pdf(const ClosedFormDensity& d, Point2 y1) {
  const PolarOffset o = to_polar(d.wedge, y1);
  if (std::abs(o.theta) >= d.wedge.half_angle || o.r > d.wedge.r_max) return 0.0;
  const double c = std::cos(d.omega * o.theta);
  return d.norm_const * std::exp(-0.5 * d.rate_a * o.r * o.r) * std::pow(o.r, 2.0 * d.omega) * c * c;
}

double sqrt_pdf_local(const ClosedFormDensity& d, double r, double theta) {
  if (std::abs(theta) >= d.wedge.half_angle || r > d.wedge.r_max || r < 0.0) return 0.0;
  return std::sqrt(d.norm_const) * std::exp(-0.25 * d.rate_a * r * r) * std::pow(r, d.omega) *
         std::cos(d.omega * theta);
}

double sqrt_pdf_dr(const ClosedFormDensity& d, double r, double theta) {
  // d/dr [ r^w e^(-a r^2/4) ] = r^(w-1) (w - a r^2 / 2) e^(-a r^2/4)
  return std::sqrt(d.norm_const) * std::exp(-0.25 * d.rate_a * r * r) *
         std::pow(r, d.omega - 1.0) * (d.omega - 0.5 * d.rate_a * r * r) *
         std::cos(d.omega * theta);
}

double sqrt_pdf_dtheta_over_r(const ClosedFormDensity& d, double r, double theta) {
  return -std::sqrt(d.norm_const) * std::exp(-0.25 * d.rate_a * r * r) *
         std::pow(r, d.omega - 1.0) * d.omega * std::sin(d.omega * theta);
}

double integral(const ClosedFormDensity& d) {
  const double t = d.wedge.half_angle;
  const auto f = [&](double r, double theta) {
    const double c = std::cos(d.omega * theta);
    return d.norm_const * std::exp(-0.5 * d.rate_a * r * r) * std::pow(r, 2.0 * d.omega) * c * c;
  };
  return quadrature::integrate_polar(f, 0.0, d.wedge.r_max, -t, t);
}

double angular_cdf(const ClosedFormDensity& d, double theta) {
  const double t = d.wedge.half_angle;
  if (theta <= -t) return 0.0;
  if (theta >= t) return 1.0;
  // Antiderivative of cos^2(w x) is x/2 + sin(2 w x) / (4 w); the total mass
  // over [-t, t] is exactly t because sin(2 w t) = sin(pi) = 0.
  const double w = d.omega;
  return (0.5 * theta + std::sin(2.0 * w * theta) / (4.0 * w) + 0.5 * t) / t;
}

double inverse_angular_cdf(const ClosedFormDensity& d, double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw InvalidParameter("inverse_angular_cdf: u outside [0, 1]");
  const double t = d.wedge.half_angle;
  if (u <= 0.0) return -t;
  if (u >= 1.0) return t;
  // Bracketed Newton with bisection fallback. The CDF is strictly increasing
  // but its derivative vanishes at both endpoints, so pure Newton stalls for
  // u near 0 or 1; the bracket keeps every iterate admissible.
  double lo = -t, hi = t;
  double x = -t + 2.0 * t * u;  // linear initial guess
  for (int it = 0; it < 200; ++it) {
    const double g = angular_cdf(d, x) - u;
    if (g > 0.0) {
      hi = x;
    } else if (g < 0.0) {
      lo = x;
    } else {
      return x;
    }
    const double c = std::cos(d.omega * x);
    const double deriv = c * c / t;
    double next = x - g / deriv;
    if (!(deriv > 0.0) || !(next > lo) || !(next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) < kThetaTol) return next;
    x = next;
    if (hi - lo < kThetaTol) return 0.5 * (lo + hi);
  }
  return x;
}

PolarOffset sample_local(const ClosedFormDensity& d, SeededGenerator& rng) {
  const double s = rng.gamma(d.gamma_shape(), d.gamma_scale());
  const double r = std::sqrt(s);
  const double theta = inverse_angular_cdf(d, rng.uniform01());
  return PolarOffset{r, theta};
}

std::vector<Point2> sample(const ClosedFormDensity& d, SeededGenerator& rng, std::size_t n) {
  if (n < 1) throw InvalidParameter("sample: n must be >= 1");
  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(from_polar(d.wedge, sample_local(d, rng)));
  }
  return out;
}

double mean_radius(const ClosedFormDensity& d) {
  // E[sqrt(s)] for s ~ Gamma(shape, scale).
  const double shape = d.gamma_shape();
  return std::exp(std::lgamma(shape + 0.5) - std::lgamma(shape)) * std::sqrt(d.gamma_scale());
}

double mean_cos_angle(const ClosedFormDensity& d) {
  const double t = d.wedge.half_angle;
  const auto f = [&](double theta) {
    const double c = std::cos(d.omega * theta);
    return std::cos(theta) * c * c;
  };
  return quadrature::integrate_1d(f, -t, t) / t;
}

Point2 mean(const ClosedFormDensity& d) {
  // The angular density is even, so E[sin theta] = 0 and the mean sits on the
  // heading axis exactly.
  return d.wedge.apex + (mean_radius(d) * mean_cos_angle(d)) * d.wedge.heading;
}

double fisher_trace(const ClosedFormDensity& d) {
  const double t = d.wedge.half_angle;
  quadrature::Tolerance tol;
  tol.target_rel = 1e-9;
  tol.fail_rel = 1e-4;  // contract: relative error <= 1e-4
  const auto f = [&](double r, double theta) {
    const double dur = sqrt_pdf_dr(d, r, theta);
    const double dut = sqrt_pdf_dtheta_over_r(d, r, theta);
    return 4.0 * (dur * dur + dut * dut);
  };
  return quadrature::integrate_polar(f, 0.0, d.wedge.r_max, -t, t, tol);
}

double expected_energy(const ClosedFormDensity& d, const EnergyPotential& pot) {
  const double t = d.wedge.half_angle;
  quadrature::Tolerance tol;
  tol.target_rel = 1e-9;
  tol.fail_rel = 1e-4;
  const auto f = [&](double r, double theta) {
    const double u = sqrt_pdf_local(d, r, theta);
    if (u == 0.0) return 0.0;
    return evaluate(pot, from_polar(d.wedge, {r, theta})) * u * u;
  };
  return quadrature::integrate_polar(f, 0.0, d.wedge.r_max, -t, t, tol);
}

}  // namespace evasion
