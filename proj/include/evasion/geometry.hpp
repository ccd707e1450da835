#pragma once

#include <cmath>

#include "evasion/errors.hpp"

namespace evasion {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double squared_norm(Point2 p) { return p.x * p.x + p.y * p.y; }
// 90 degree counter-clockwise rotation.
inline Point2 perp(Point2 p) { return {-p.y, p.x}; }

// Offset from a wedge apex in the wedge's own frame: theta is measured from
// the heading, positive counter-clockwise, in (-pi, pi].
struct PolarOffset {
  double r = 0.0;
  double theta = 0.0;
};

// Admissible escape set: points whose bearing from the apex deviates from
// `heading` by at most `half_angle`, truncated at radius `r_max`.
struct WedgeDomain {
  Point2 apex;
  Point2 heading;     // unit vector, prey-away-from-predator direction
  double half_angle;  // in (0, pi]
  double r_max;       // > 0, numerical truncation radius
};

// Validates the WedgeDomain invariants; throws InvalidParameter.
WedgeDomain make_wedge(Point2 apex, Point2 heading, double half_angle, double r_max);

// Wedge with apex at the prey and heading away from the predator.
// Throws CoincidentPositions when the two are closer than 1e-12.
WedgeDomain wedge_from_positions(Point2 prey, Point2 predator, double half_angle, double r_max);

// Membership test; boundary points count as inside, as does the apex.
bool contains(const WedgeDomain& w, Point2 p);

PolarOffset to_polar(const WedgeDomain& w, Point2 p);
Point2 from_polar(const WedgeDomain& w, PolarOffset o);

bool finite(Point2 p);

}  // namespace evasion
