#include "evasion/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "evasion/errors.hpp"

namespace evasion::quadrature {

namespace {
using GaussKronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

void check(double value, double err, const Tolerance& tol, const char* where) {
  const double limit = std::max(tol.fail_rel * std::abs(value), tol.abs_floor);
  if (!(err <= limit) || !std::isfinite(value)) {
    throw QuadratureFailure(std::string("adaptive quadrature did not converge in ") + where);
  }
}
}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b, Tolerance tol) {
  double err = 0.0;
  const double value = GaussKronrod::integrate(f, a, b, tol.max_depth, tol.target_rel, &err);
  check(value, err, tol, "integrate_1d");
  return value;
}

double integrate_polar(const std::function<double(double, double)>& f, double r0, double r1,
                       double t0, double t1, Tolerance tol) {
  // Nested 1-D panels: outer integral over theta of the inner radial
  // integral. The inner pass runs at a tighter target so its error does not
  // pollute the outer estimate.
  Tolerance inner = tol;
  inner.target_rel = tol.target_rel * 0.1;
  double outer_err = 0.0;
  const auto slice = [&](double theta) {
    double inner_err = 0.0;
    const auto radial = [&](double r) { return f(r, theta) * r; };
    const double v = GaussKronrod::integrate(radial, r0, r1, inner.max_depth, inner.target_rel,
                                             &inner_err);
    return v;
  };
  const double value = GaussKronrod::integrate(slice, t0, t1, tol.max_depth, tol.target_rel,
                                               &outer_err);
  check(value, outer_err, tol, "integrate_polar");
  return value;
}

}  // namespace evasion::quadrature
