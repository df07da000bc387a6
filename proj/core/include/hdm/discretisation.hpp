// Hessian discretisations: a discrete space with function, gradient and
// Hessian reconstruction operators, realized as per-cell evaluation tables at
// assembly quadrature points plus a global map of free (non-eliminated) DOFs.
//
// Three constructions are provided:
//  * Morley  - P2 triangles, vertex values + edge-midpoint normal derivatives,
//              broken gradient and (piecewise constant) broken Hessian;
//  * Adini   - P3 + {x y^3, x^3 y} rectangles, (value, dx, dy) per vertex,
//              broken Hessian;
//  * GR      - continuous P1 with a vertex-averaged recovered gradient Q_h and
//              the stabilized Hessian grad(Q_h grad u) + S (x) (Q_h grad - grad)u.
//
// Clamped boundary conditions are imposed by eliminating boundary DOFs from
// the global numbering.

#ifndef HDM_DISCRETISATION_HPP
#define HDM_DISCRETISATION_HPP

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hdm/fields.hpp"
#include "hdm/mesh.hpp"
#include "hdm/quadrature.hpp"

namespace hdm {

enum class Method { Morley, Adini, GradientRecovery };

std::string to_string(Method m);

enum class DofKind { VertexValue, VertexDx, VertexDy, EdgeNormalDeriv };

struct DofMap {
  int n_dofs = 0;  ///< free DOFs after clamped-boundary elimination
  /// Per cell: global free index of each local DOF, or -1 if eliminated.
  /// Morley/Adini cells have a fixed local layout (6 resp. 12 entries); GR
  /// cells list the recovery stencil (free DOFs only).
  std::vector<std::vector<int>> cell_dofs;
  std::vector<DofKind> dof_kind;  ///< per free DOF

  // entity -> free DOF lookup (-1 where eliminated / not present)
  std::vector<int> vertex_value_dof;
  std::vector<int> vertex_dx_dof;
  std::vector<int> vertex_dy_dof;
  std::vector<int> edge_dof;
};

/// Evaluation tables of the three reconstructions for every local DOF at the
/// cell's quadrature points, stored row-major [i * n_q + q].
struct CellEvalTable {
  int n_local = 0;
  int n_q = 0;
  std::vector<double> pi;
  std::vector<Vec2> grad;
  std::vector<Mat2> hess;

  double pi_at(int i, int q) const { return pi[static_cast<std::size_t>(i) * n_q + q]; }
  const Vec2& grad_at(int i, int q) const { return grad[static_cast<std::size_t>(i) * n_q + q]; }
  const Mat2& hess_at(int i, int q) const { return hess[static_cast<std::size_t>(i) * n_q + q]; }
};

/// Local polynomial basis of a Morley/Adini cell in centered, scaled monomial
/// coordinates; kept around for interpolation tests and table verification.
struct LocalBasis {
  Vec2 center = Vec2::Zero();
  double scale = 1.0;
  Eigen::MatrixXd coeff;  ///< column j: monomial coefficients of basis j

  int size() const { return static_cast<int>(coeff.cols()); }
  void eval(Method method, const Vec2& x, Eigen::VectorXd& values) const;
  void eval_all(Method method, const Vec2& x, Eigen::VectorXd& values,
                std::vector<Vec2>& grads, std::vector<Mat2>& hessians) const;
};

struct HessianDiscretisation {
  Method method = Method::Morley;
  Mesh mesh;
  DofMap dof_map;
  QuadratureRule ref_rule;
  std::vector<MappedQuadrature> quad;  ///< per cell
  std::vector<CellEvalTable> tables;   ///< per cell
  std::vector<LocalBasis> local_basis; ///< Morley/Adini only
  /// GR only: sparse map from free DOFs to nodal recovered-gradient values;
  /// rows 2a and 2a+1 hold the x/y components at mesh vertex a.
  Eigen::SparseMatrix<double> gr_recovery;

  int n_dofs() const { return dof_map.n_dofs; }
  int n_cells() const { return mesh.n_cells(); }
};

HessianDiscretisation build_morley(const Mesh& mesh);
HessianDiscretisation build_adini(const Mesh& mesh);
HessianDiscretisation build_gr(const Mesh& mesh);
HessianDiscretisation build_discretisation(Method method, const Mesh& mesh);

/// Mesh cell kind the method is defined on.
CellKind cell_kind_of(Method m);

/// Canonical interpolation onto the free DOFs: vertex values and (Morley)
/// edge-midpoint normal derivatives resp. (Adini) vertex gradients.
/// Eliminated DOFs are skipped.
Eigen::VectorXd interpolate_dofs(const HessianDiscretisation& hd, const ScalarField& f);

/// Local (un-eliminated) interpolation on one cell, for reproduction tests of
/// functions that do not satisfy the clamped boundary conditions.
Eigen::VectorXd interpolate_local(const HessianDiscretisation& hd, int cell, const ScalarField& f);

struct EvalResult {
  double value = 0.0;
  Vec2 gradient = Vec2::Zero();
  Mat2 hessian = Mat2::Zero();
};

/// Reconstructions of a free-DOF vector at quadrature point q of a cell.
EvalResult evaluate(const HessianDiscretisation& hd, const Eigen::VectorXd& coeffs, int cell, int q);

/// Same with explicit local coefficients (one per local DOF, no elimination).
EvalResult evaluate_local(const HessianDiscretisation& hd, const Eigen::VectorXd& local_coeffs,
                          int cell, int q);

/// Cross-check that grad/hess tables are derivatives of the pi tables via
/// central finite differences of the local basis (Morley/Adini).  Returns the
/// largest relative defect observed.
double verify_tables(const HessianDiscretisation& hd, double fd_step = 1e-6);

}  // namespace hdm

#endif
