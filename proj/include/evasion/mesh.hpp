#pragma once

#include <cstddef>

#include "evasion/geometry.hpp"

namespace evasion {

// Cell-centered tensor mesh over the wedge in (r, theta) coordinates.
// Radial nodes r_i = (i + 1/2) dr avoid the polar coordinate singularity at
// r = 0; angular nodes cover [-theta_max, theta_max]. Every node is strictly
// interior to the wedge; the boundary lies half a cell beyond the edge nodes.
struct WedgeMesh {
  WedgeDomain wedge;
  int n_r = 0;
  int n_theta = 0;

  double theta_max() const { return wedge.half_angle; }
  double r_max() const { return wedge.r_max; }
  double dr() const { return wedge.r_max / n_r; }
  double dtheta() const { return 2.0 * wedge.half_angle / n_theta; }
  double r(int i) const { return (i + 0.5) * dr(); }
  double theta(int j) const { return -wedge.half_angle + (j + 0.5) * dtheta(); }
  double cell_area(int i) const { return r(i) * dr() * dtheta(); }
  int index(int i, int j) const { return i * n_theta + j; }
  int size() const { return n_r * n_theta; }
  Point2 position(int i, int j) const { return from_polar(wedge, {r(i), theta(j)}); }
};

// Validates n_r, n_theta >= 8 and the wedge invariants.
WedgeMesh make_mesh(const WedgeDomain& wedge, int n_r, int n_theta);

}  // namespace evasion
