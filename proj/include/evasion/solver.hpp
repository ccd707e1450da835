#pragma once

#include <Eigen/Sparse>
#include <vector>

#include "evasion/mesh.hpp"
#include "evasion/potential.hpp"

namespace evasion {

// Discrete operator for the eigenproblem (-laplacian + (rho/4) U) u = (mu/4) u
// on the wedge, in the weight-symmetrized form
//   A = W^(-1/2) B W^(-1/2),   W = diag(cell areas),
// where B is the conservative 5-point polar stencil
// (1/r) d/dr (r d/dr) + (1/r^2) d^2/dtheta^2 scaled by the cell area, with
// Dirichlet rows eliminated through ghost-node reflection at theta = +-
// theta_max and r = r_max. The r = 0 face carries zero radius, so the apex
// needs no boundary condition. A acts on v = W^(1/2) u and is symmetric.
struct SparseOperator {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd weights;  // cell areas, node-major
  int n_r = 0;
  int n_theta = 0;

  std::size_t nnz() const { return static_cast<std::size_t>(matrix.nonZeros()); }
  int bandwidth() const;
};

struct GroundState {
  WedgeMesh mesh;
  std::vector<double> u;  // physical sqrt-density at nodes, positive interior
  double mu = 0.0;        // 4 x smallest eigenvalue
  double residual_norm = 0.0;
  int iterations = 0;
};

// Iteration budget exhausted (or positivity failed); carries the last iterate.
struct NoConvergence : Error {
  GroundState last_iterate;
  NoConvergence(const std::string& what, GroundState last)
      : Error(what), last_iterate(std::move(last)) {}
};

SparseOperator assemble(const WedgeMesh& mesh, const EnergyPotential& pot, double rho);

// Smallest eigenpair of a symmetric sparse matrix by shifted inverse power
// iteration: one sparse direct factorization at a shift just below the
// Gershgorin lower bound, then repeated solves until successive Rayleigh
// quotients differ by less than tol.
struct EigenPair {
  Eigen::VectorXd vector;  // unit 2-norm, sign fixed so the sum is positive
  double value = 0.0;
  double residual = 0.0;  // ||A v - value v||_2
  int iterations = 0;
  bool converged = false;
};
EigenPair smallest_eigenpair(const Eigen::SparseMatrix<double>& matrix, double tol, int max_iter,
                             const Eigen::VectorXd* initial = nullptr);

// Ground state of the assembled operator: smallest eigenpair, quadrature
// normalization sum(u^2 area) = 1, positive nodeless u. Throws NoConvergence
// with the last iterate attached when the tolerance is not reached within
// max_iter or the iterate is not positive.
GroundState ground_state(const SparseOperator& op, const WedgeMesh& mesh, double tol = 1e-8,
                         int max_iter = 500);

// Discrete L2 norm of the pointwise residual of (-lap + (rho/4)U) u = (mu/4) u
// for an externally supplied u on the mesh nodes (normalized internally).
// Used to check candidate solutions such as the interpolated analytic one.
double residual_norm(const SparseOperator& op, const std::vector<double>& u_nodes, double mu);

}  // namespace evasion
