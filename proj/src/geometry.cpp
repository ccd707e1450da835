#include "evasion/geometry.hpp"

#include <numbers>

namespace evasion {

namespace {
constexpr double kCoincidenceTol = 1e-12;
constexpr double kUnitTol = 1e-12;
}  // namespace

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

WedgeDomain make_wedge(Point2 apex, Point2 heading, double half_angle, double r_max) {
  if (!finite(apex) || !finite(heading)) {
    throw InvalidParameter("wedge: non-finite apex or heading");
  }
  if (std::abs(norm(heading) - 1.0) > kUnitTol) {
    throw InvalidParameter("wedge: heading must be a unit vector");
  }
  if (!(half_angle > 0.0) || !(half_angle <= std::numbers::pi)) {
    throw InvalidParameter("wedge: half_angle must lie in (0, pi]");
  }
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw InvalidParameter("wedge: r_max must be positive");
  }
  return WedgeDomain{apex, heading, half_angle, r_max};
}

WedgeDomain wedge_from_positions(Point2 prey, Point2 predator, double half_angle, double r_max) {
  const Point2 away = prey - predator;
  const double d = norm(away);
  if (d < kCoincidenceTol) {
    throw CoincidentPositions("wedge direction undefined: prey and predator coincide");
  }
  return make_wedge(prey, (1.0 / d) * away, half_angle, r_max);
}

PolarOffset to_polar(const WedgeDomain& w, Point2 p) {
  const Point2 d = p - w.apex;
  // Components of the offset in the wedge frame (heading, left normal).
  const double along = dot(d, w.heading);
  const double across = dot(d, perp(w.heading));
  // atan2 rather than acos of a normalized dot product: acos loses precision
  // near 0 and pi.
  double theta = std::atan2(across, along);
  if (theta <= -std::numbers::pi) theta = std::numbers::pi;  // keep theta in (-pi, pi]
  return PolarOffset{std::hypot(along, across), theta};
}

Point2 from_polar(const WedgeDomain& w, PolarOffset o) {
  if (o.r < 0.0) throw InvalidParameter("from_polar: negative radius");
  const Point2 dir = std::cos(o.theta) * w.heading + std::sin(o.theta) * perp(w.heading);
  return w.apex + o.r * dir;
}

bool contains(const WedgeDomain& w, Point2 p) {
  const PolarOffset o = to_polar(w, p);
  if (o.r == 0.0) return true;  // the apex
  return std::abs(o.theta) <= w.half_angle && o.r <= w.r_max;
}

}  // namespace evasion
