#pragma once

#include <string>
#include <variant>
#include <vector>

#include "evasion/geometry.hpp"
#include "evasion/mesh.hpp"

namespace evasion {

// Minimum control energy to reach y1 from the origin within the horizon:
// U(y1) = |y1 - origin|^2 / T for a single integrator.
struct SingleIntegrator {
  double horizon_T = 1.0;
  Point2 origin;
};

// User-supplied potential tabulated on a wedge mesh, bilinear in (r, theta)
// between nodes. `radial` declares theta-independence and unlocks
// radial_profile queries.
struct TabulatedPotential {
  WedgeMesh mesh;
  std::vector<double> values;  // node-major, mesh.index(i, j)
  bool radial = false;
};

using EnergyPotential = std::variant<SingleIntegrator, TabulatedPotential>;

EnergyPotential make_single_integrator(double horizon_T, Point2 origin);
EnergyPotential make_tabulated(WedgeMesh mesh, std::vector<double> values, bool radial);

// Loads CSV rows (r, theta, value) and checks that they cover exactly the
// nodes of the declared mesh. Throws IoError on unreadable files and
// InvalidParameter on grid mismatch or negative values.
EnergyPotential load_tabulated_csv(const std::string& path, const WedgeMesh& declared_mesh,
                                   bool radial);

// U(y1). Throws OutOfDomain for tabulated queries outside the node hull.
double evaluate(const EnergyPotential& pot, Point2 y1);

// U as a function of |y1 - origin| alone; throws NotRadial for tabulated
// potentials that were not declared radially symmetric.
double radial_profile(const EnergyPotential& pot, double r);

}  // namespace evasion
