#include "evasion/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace evasion {

WedgeMesh make_mesh(const WedgeDomain& wedge, int n_r, int n_theta) {
  make_wedge(wedge.apex, wedge.heading, wedge.half_angle, wedge.r_max);  // re-validate
  if (n_r < 8 || n_theta < 8) {
    throw InvalidParameter("mesh: n_r and n_theta must be at least 8");
  }
  return WedgeMesh{wedge, n_r, n_theta};
}

EnergyPotential make_single_integrator(double horizon_T, Point2 origin) {
  if (!(horizon_T > 0.0) || !std::isfinite(horizon_T)) {
    throw InvalidParameter("single-integrator potential requires horizon T > 0");
  }
  if (!finite(origin)) {
    throw InvalidParameter("single-integrator potential requires a finite origin");
  }
  return SingleIntegrator{horizon_T, origin};
}

EnergyPotential make_tabulated(WedgeMesh mesh, std::vector<double> values, bool radial) {
  if (static_cast<int>(values.size()) != mesh.size()) {
    throw InvalidParameter("tabulated potential: value count does not match the mesh");
  }
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidParameter("tabulated potential: values must be finite and >= 0");
    }
  }
  return TabulatedPotential{std::move(mesh), std::move(values), radial};
}

namespace {

// Bilinear interpolation over the (r, theta) node lattice. Queries must fall
// inside the node hull [r_0, r_{n-1}] x [theta_0, theta_{n-1}].
double interpolate(const TabulatedPotential& tab, double r, double theta) {
  const WedgeMesh& m = tab.mesh;
  const double r_lo = m.r(0), r_hi = m.r(m.n_r - 1);
  const double t_lo = m.theta(0), t_hi = m.theta(m.n_theta - 1);
  const double pad_r = 1e-9 * m.dr();
  const double pad_t = 1e-9 * m.dtheta();
  if (r < r_lo - pad_r || r > r_hi + pad_r || theta < t_lo - pad_t || theta > t_hi + pad_t) {
    throw OutOfDomain("tabulated potential queried outside the mesh hull");
  }
  const double fr = std::clamp((r - r_lo) / m.dr(), 0.0, static_cast<double>(m.n_r - 1));
  const double ft = std::clamp((theta - t_lo) / m.dtheta(), 0.0, static_cast<double>(m.n_theta - 1));
  const int i0 = std::min(static_cast<int>(fr), m.n_r - 2);
  const int j0 = std::min(static_cast<int>(ft), m.n_theta - 2);
  const double a = fr - i0;
  const double b = ft - j0;
  const auto v = [&](int i, int j) { return tab.values[m.index(i, j)]; };
  return (1 - a) * (1 - b) * v(i0, j0) + a * (1 - b) * v(i0 + 1, j0) +
         (1 - a) * b * v(i0, j0 + 1) + a * b * v(i0 + 1, j0 + 1);
}

}  // namespace

double evaluate(const EnergyPotential& pot, Point2 y1) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleIntegrator>) {
          return squared_norm(y1 - p.origin) / p.horizon_T;
        } else {
          const PolarOffset o = to_polar(p.mesh.wedge, y1);
          return interpolate(p, o.r, o.theta);
        }
      },
      pot);
}

double radial_profile(const EnergyPotential& pot, double r) {
  if (r < 0.0) throw InvalidParameter("radial_profile: r must be >= 0");
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SingleIntegrator>) {
          return r * r / p.horizon_T;
        } else {
          if (!p.radial) {
            throw NotRadial("tabulated potential was not declared radially symmetric");
          }
          // Interpolate along the first theta column.
          const WedgeMesh& m = p.mesh;
          if (r < m.r(0) || r > m.r(m.n_r - 1)) {
            throw OutOfDomain("radial_profile query outside the mesh hull");
          }
          const double fr = (r - m.r(0)) / m.dr();
          const int i0 = std::min(static_cast<int>(fr), m.n_r - 2);
          const double a = fr - i0;
          return (1 - a) * p.values[m.index(i0, 0)] + a * p.values[m.index(i0 + 1, 0)];
        }
      },
      pot);
}

EnergyPotential load_tabulated_csv(const std::string& path, const WedgeMesh& declared_mesh,
                                   bool radial) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open potential file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty potential file: " + path);
  // Header row is required: r,theta,value.
  std::vector<double> values(declared_mesh.size(), std::nan(""));
  const double rtol = 1e-9 * declared_mesh.dr();
  const double ttol = 1e-9 * declared_mesh.dtheta();
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    double r, theta, value;
    char c1, c2;
    if (!(ss >> r >> c1 >> theta >> c2 >> value) || c1 != ',' || c2 != ',') {
      throw InvalidParameter("potential CSV: malformed row '" + line + "'");
    }
    const double fi = r / declared_mesh.dr() - 0.5;
    const double fj = (theta + declared_mesh.theta_max()) / declared_mesh.dtheta() - 0.5;
    const int i = static_cast<int>(std::lround(fi));
    const int j = static_cast<int>(std::lround(fj));
    if (i < 0 || i >= declared_mesh.n_r || j < 0 || j >= declared_mesh.n_theta ||
        std::abs(declared_mesh.r(i) - r) > rtol || std::abs(declared_mesh.theta(j) - theta) > ttol) {
      throw InvalidParameter("potential CSV: node does not match the declared mesh");
    }
    values[declared_mesh.index(i, j)] = value;
    ++rows;
  }
  if (rows != static_cast<std::size_t>(declared_mesh.size())) {
    throw InvalidParameter("potential CSV: row count does not cover the declared mesh");
  }
  return make_tabulated(declared_mesh, std::move(values), radial);
}

}  // namespace evasion
