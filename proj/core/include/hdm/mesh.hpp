// Structured triangulations and quadrangulations of the unit square and the
// L-shaped domain, with red refinement and boundary classification.

#ifndef HDM_MESH_HPP
#define HDM_MESH_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hdm {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class Domain { Square, LShape };
enum class CellKind { Triangle, Rectangle };

std::string to_string(Domain d);
std::string to_string(CellKind k);

struct Vertex {
  int id = -1;
  double x = 0.0;
  double y = 0.0;
  bool is_boundary = false;

  Vec2 coords() const { return Vec2(x, y); }
};

struct Cell {
  int id = -1;
  CellKind kind = CellKind::Triangle;
  std::vector<int> vertex_ids;  ///< counter-clockwise, 3 or 4 entries
  std::vector<int> edge_ids;    ///< edge_ids[k] joins vertex k and k+1
  double diameter = 0.0;        ///< max pairwise vertex distance
  double area = 0.0;
};

struct Edge {
  int id = -1;
  std::array<int, 2> vertex_ids = {-1, -1};  ///< sorted
  std::array<int, 2> cell_ids = {-1, -1};    ///< second is -1 on the boundary
  Vec2 midpoint = Vec2::Zero();
  /// Unit normal; for interior edges it points from the lower-id adjacent
  /// cell into the higher-id one, for boundary edges it points outward.
  Vec2 unit_normal = Vec2::Zero();
  bool is_boundary = false;
};

struct Mesh {
  Domain domain = Domain::Square;
  CellKind kind = CellKind::Triangle;
  int level = 0;   ///< number of red refinements applied to the initial mesh
  double h = 0.0;  ///< max cell diameter
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Cell> cells;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
  int n_cells() const { return static_cast<int>(cells.size()); }

  Vec2 vertex(int v) const { return vertices[v].coords(); }
};

/// Coarsest mesh of the requested domain: the unit square as one rectangle or
/// two triangles split along the (0,0)-(1,1) diagonal; the L-shape
/// (-1,1)^2 \ [0,1)x(-1,0] as three unit squares, each split (for triangle
/// meshes) along the diagonal ending at the re-entrant corner.
Mesh build_initial_mesh(Domain domain, CellKind kind);

/// Uniform red refinement: each triangle splits into 4 congruent children via
/// edge midpoints, each rectangle into 4 via edge midpoints and the center.
Mesh refine_red(const Mesh& m);

/// Fill vertex/edge boundary flags: a vertex is boundary iff it lies on the
/// domain boundary within 1e-12, an edge iff both endpoints are boundary and
/// it has a single adjacent cell.  Meshes returned by build_initial_mesh and
/// refine_red are already classified; this re-derives the flags.
Mesh classify_boundary(Mesh m);

/// Signed distance-to-boundary test used by classify_boundary.
bool on_domain_boundary(Domain domain, const Vec2& p, double tol = 1e-12);

/// Plain-text dump: header "nV nE nC", vertex lines "id x y", cell lines
/// "id kind v0 v1 v2 [v3]".
void write_mesh(std::ostream& out, const Mesh& m);

}  // namespace hdm

#endif
