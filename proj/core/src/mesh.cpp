#include "hdm/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

namespace hdm {

namespace {

constexpr double kGeomTol = 1e-12;

double diameter_of(const std::vector<Vertex>& verts, const std::vector<int>& ids) {
  double d = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      d = std::max(d, (verts[ids[i]].coords() - verts[ids[j]].coords()).norm());
  return d;
}

double signed_area(const std::vector<Vertex>& verts, const std::vector<int>& ids) {
  double a = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Vec2 p = verts[ids[i]].coords();
    const Vec2 q = verts[ids[(i + 1) % ids.size()]].coords();
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

// Rebuild edges, cell metadata and boundary flags from vertices + cell
// connectivity; shared by construction and refinement.
void finalize(Mesh& m) {
  std::map<std::array<int, 2>, int> edge_of;
  m.edges.clear();
  m.h = 0.0;
  for (auto& cell : m.cells) {
    const int nv = static_cast<int>(cell.vertex_ids.size());
    cell.edge_ids.assign(nv, -1);
    cell.diameter = diameter_of(m.vertices, cell.vertex_ids);
    cell.area = signed_area(m.vertices, cell.vertex_ids);
    if (cell.area <= 0.0) throw std::runtime_error("mesh cell with nonpositive signed area");
    m.h = std::max(m.h, cell.diameter);
    for (int k = 0; k < nv; ++k) {
      int a = cell.vertex_ids[k];
      int b = cell.vertex_ids[(k + 1) % nv];
      std::array<int, 2> key = {std::min(a, b), std::max(a, b)};
      auto it = edge_of.find(key);
      if (it == edge_of.end()) {
        Edge e;
        e.id = static_cast<int>(m.edges.size());
        e.vertex_ids = key;
        e.cell_ids = {cell.id, -1};
        e.midpoint = 0.5 * (m.vertices[a].coords() + m.vertices[b].coords());
        m.edges.push_back(e);
        edge_of.emplace(key, e.id);
        cell.edge_ids[k] = e.id;
      } else {
        Edge& e = m.edges[it->second];
        if (e.cell_ids[1] != -1) throw std::runtime_error("edge shared by more than two cells");
        e.cell_ids[1] = cell.id;
        cell.edge_ids[k] = e.id;
      }
    }
  }
  for (auto& v : m.vertices) v.is_boundary = on_domain_boundary(m.domain, v.coords());
  for (auto& e : m.edges) {
    e.is_boundary = (e.cell_ids[1] == -1) && m.vertices[e.vertex_ids[0]].is_boundary &&
                    m.vertices[e.vertex_ids[1]].is_boundary;
    // normal from the lower-id cell (the first one) towards the other side
    const Vec2 t = (m.vertices[e.vertex_ids[1]].coords() - m.vertices[e.vertex_ids[0]].coords()).normalized();
    Vec2 n(t.y(), -t.x());
    int c_low = e.cell_ids[0];
    if (e.cell_ids[1] != -1 && e.cell_ids[1] < c_low) c_low = e.cell_ids[1];
    Vec2 centroid = Vec2::Zero();
    for (int v : m.cells[c_low].vertex_ids) centroid += m.vertices[v].coords();
    centroid /= static_cast<double>(m.cells[c_low].vertex_ids.size());
    if ((e.midpoint - centroid).dot(n) < 0.0) n = -n;
    e.unit_normal = n;
  }
}

void add_square(Mesh& m, const std::array<int, 4>& corners, CellKind kind, bool diag_02) {
  // corners listed CCW; diag_02 selects the diagonal corners[0]-corners[2]
  if (kind == CellKind::Rectangle) {
    Cell c;
    c.id = static_cast<int>(m.cells.size());
    c.kind = CellKind::Rectangle;
    c.vertex_ids = {corners[0], corners[1], corners[2], corners[3]};
    m.cells.push_back(c);
    return;
  }
  auto add_tri = [&](int a, int b, int c) {
    Cell cell;
    cell.id = static_cast<int>(m.cells.size());
    cell.kind = CellKind::Triangle;
    cell.vertex_ids = {a, b, c};
    m.cells.push_back(cell);
  };
  if (diag_02) {
    add_tri(corners[0], corners[1], corners[2]);
    add_tri(corners[0], corners[2], corners[3]);
  } else {
    add_tri(corners[0], corners[1], corners[3]);
    add_tri(corners[1], corners[2], corners[3]);
  }
}

}  // namespace

std::string to_string(Domain d) { return d == Domain::Square ? "square" : "lshape"; }
std::string to_string(CellKind k) { return k == CellKind::Triangle ? "triangle" : "rectangle"; }

bool on_domain_boundary(Domain domain, const Vec2& p, double tol) {
  const double x = p.x(), y = p.y();
  if (domain == Domain::Square) {
    return std::abs(x) < tol || std::abs(x - 1) < tol || std::abs(y) < tol || std::abs(y - 1) < tol;
  }
  // L-shape (-1,1)^2 minus the closed fourth-quadrant square [0,1)x(-1,0]
  const bool outer = std::abs(x + 1) < tol || std::abs(y + 1) < tol || std::abs(y - 1) < tol ||
                     (std::abs(x - 1) < tol && y >= -tol);
  const bool reentrant = (std::abs(y) < tol && x >= -tol && x <= 1 + tol) ||
                         (std::abs(x) < tol && y <= tol && y >= -1 - tol);
  return outer || reentrant;
}

Mesh build_initial_mesh(Domain domain, CellKind kind) {
  Mesh m;
  m.domain = domain;
  m.kind = kind;
  m.level = 0;
  auto add_vertex = [&](double x, double y) {
    Vertex v;
    v.id = static_cast<int>(m.vertices.size());
    v.x = x;
    v.y = y;
    m.vertices.push_back(v);
    return v.id;
  };
  if (domain == Domain::Square) {
    const int v00 = add_vertex(0, 0), v10 = add_vertex(1, 0), v11 = add_vertex(1, 1), v01 = add_vertex(0, 1);
    add_square(m, {v00, v10, v11, v01}, kind, /*diag_02=*/true);  // diagonal (0,0)-(1,1)
  } else {
    // three unit squares of the L; triangle diagonals end at the corner (0,0)
    const int a = add_vertex(-1, -1), b = add_vertex(0, -1);
    const int c = add_vertex(-1, 0), o = add_vertex(0, 0), d = add_vertex(1, 0);
    const int e = add_vertex(-1, 1), f = add_vertex(0, 1), g = add_vertex(1, 1);
    add_square(m, {a, b, o, c}, kind, /*diag_02=*/true);   // diagonal a-o hits (0,0)
    add_square(m, {c, o, f, e}, kind, /*diag_02=*/false);  // diagonal o-e: use c-f? no, corners (c,o,f,e): diag_13 is o-e
    add_square(m, {o, d, g, f}, kind, /*diag_02=*/true);   // diagonal o-g hits (0,0)
  }
  finalize(m);
  return m;
}

Mesh refine_red(const Mesh& parent) {
  Mesh m;
  m.domain = parent.domain;
  m.kind = parent.kind;
  m.level = parent.level + 1;
  m.vertices = parent.vertices;
  // one new vertex per parent edge, plus one per rectangle (the center)
  std::vector<int> mid_of_edge(parent.edges.size());
  for (const auto& e : parent.edges) {
    Vertex v;
    v.id = static_cast<int>(m.vertices.size());
    v.x = e.midpoint.x();
    v.y = e.midpoint.y();
    mid_of_edge[e.id] = v.id;
    m.vertices.push_back(v);
  }
  for (const auto& cell : parent.cells) {
    if (cell.kind == CellKind::Triangle) {
      const int v0 = cell.vertex_ids[0], v1 = cell.vertex_ids[1], v2 = cell.vertex_ids[2];
      const int m01 = mid_of_edge[cell.edge_ids[0]];
      const int m12 = mid_of_edge[cell.edge_ids[1]];
      const int m20 = mid_of_edge[cell.edge_ids[2]];
      for (auto tri : {std::array<int, 3>{v0, m01, m20}, {m01, v1, m12}, {m20, m12, v2}, {m01, m12, m20}}) {
        Cell c;
        c.id = static_cast<int>(m.cells.size());
        c.kind = CellKind::Triangle;
        c.vertex_ids = {tri[0], tri[1], tri[2]};
        m.cells.push_back(c);
      }
    } else {
      Vertex center;
      center.id = static_cast<int>(m.vertices.size());
      Vec2 cc = Vec2::Zero();
      for (int v : cell.vertex_ids) cc += parent.vertices[v].coords();
      cc *= 0.25;
      center.x = cc.x();
      center.y = cc.y();
      m.vertices.push_back(center);
      const int v0 = cell.vertex_ids[0], v1 = cell.vertex_ids[1], v2 = cell.vertex_ids[2], v3 = cell.vertex_ids[3];
      const int m01 = mid_of_edge[cell.edge_ids[0]], m12 = mid_of_edge[cell.edge_ids[1]];
      const int m23 = mid_of_edge[cell.edge_ids[2]], m30 = mid_of_edge[cell.edge_ids[3]];
      const int cm = center.id;
      for (auto quad : {std::array<int, 4>{v0, m01, cm, m30}, {m01, v1, m12, cm}, {cm, m12, v2, m23}, {m30, cm, m23, v3}}) {
        Cell c;
        c.id = static_cast<int>(m.cells.size());
        c.kind = CellKind::Rectangle;
        c.vertex_ids = {quad[0], quad[1], quad[2], quad[3]};
        m.cells.push_back(c);
      }
    }
  }
  finalize(m);
  return m;
}

Mesh classify_boundary(Mesh m) {
  for (auto& v : m.vertices) v.is_boundary = on_domain_boundary(m.domain, v.coords(), kGeomTol);
  for (auto& e : m.edges) {
    e.is_boundary = (e.cell_ids[1] == -1) && m.vertices[e.vertex_ids[0]].is_boundary &&
                    m.vertices[e.vertex_ids[1]].is_boundary;
  }
  return m;
}

void write_mesh(std::ostream& out, const Mesh& m) {
  out << m.n_vertices() << ' ' << m.n_edges() << ' ' << m.n_cells() << '\n';
  out.precision(17);
  for (const auto& v : m.vertices) out << v.id << ' ' << v.x << ' ' << v.y << '\n';
  for (const auto& c : m.cells) {
    out << c.id << ' ' << to_string(c.kind);
    for (int v : c.vertex_ids) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace hdm
