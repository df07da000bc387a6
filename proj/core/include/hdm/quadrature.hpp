// Fixed Gauss-type quadrature on the reference triangle (0,0)-(1,0)-(0,1) and
// the reference square [0,1]^2, exact for a requested total polynomial degree.

#ifndef HDM_QUADRATURE_HPP
#define HDM_QUADRATURE_HPP

#include <vector>

#include "hdm/mesh.hpp"

namespace hdm {

struct QuadratureRule {
  CellKind kind = CellKind::Triangle;
  int degree = 0;  ///< all bivariate monomials of total degree <= degree are exact
  std::vector<Vec2> points;     ///< reference coordinates
  std::vector<double> weights;  ///< sum to the reference measure (1/2 or 1)

  int size() const { return static_cast<int>(points.size()); }
};

/// Rule exact to the given total degree (0 <= degree <= 12).  Triangles use a
/// Gauss tensor rule collapsed through the Duffy map, rectangles a plain
/// tensor Gauss rule; all weights are positive.
QuadratureRule rule_for(CellKind kind, int degree);

struct MappedQuadrature {
  std::vector<Vec2> points;
  std::vector<double> weights;  ///< sum to |K|
  int size() const { return static_cast<int>(points.size()); }
};

/// Push a reference rule to a physical cell (affine for triangles, axis
/// scaling for the axis-aligned rectangles this library meshes with).
MappedQuadrature map_to_cell(const QuadratureRule& rule, const Mesh& mesh, const Cell& cell);

/// Gauss-Legendre nodes/weights on [0,1] (exact to degree 2n-1).
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hdm

#endif
