#include "hdm/discretisation.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hdm {

namespace {

constexpr int kTriangleDegree = 6;
constexpr int kRectangleDegree = 10;  // tensor Gauss 6x6

using Exponents = std::vector<std::array<int, 2>>;

const Exponents& exponents(Method m) {
  static const Exponents morley = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  static const Exponents adini = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                                  {3, 0}, {2, 1}, {1, 2}, {0, 3}, {3, 1}, {1, 3}};
  return m == Method::Adini ? adini : morley;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// value / physical gradient / physical hessian of all monomials at x
void monomials(const Exponents& ex, const Vec2& center, double scale, const Vec2& x,
               Eigen::VectorXd* val, std::vector<Vec2>* grad, std::vector<Mat2>* hess) {
  const double xi = (x.x() - center.x()) / scale;
  const double eta = (x.y() - center.y()) / scale;
  const int n = static_cast<int>(ex.size());
  if (val) val->resize(n);
  if (grad) grad->resize(n);
  if (hess) hess->resize(n);
  for (int k = 0; k < n; ++k) {
    const int a = ex[k][0], b = ex[k][1];
    if (val) (*val)(k) = ipow(xi, a) * ipow(eta, b);
    if (grad) {
      const double gx = a > 0 ? a * ipow(xi, a - 1) * ipow(eta, b) : 0.0;
      const double gy = b > 0 ? b * ipow(xi, a) * ipow(eta, b - 1) : 0.0;
      (*grad)[k] = Vec2(gx, gy) / scale;
    }
    if (hess) {
      const double hxx = a > 1 ? a * (a - 1) * ipow(xi, a - 2) * ipow(eta, b) : 0.0;
      const double hyy = b > 1 ? b * (b - 1) * ipow(xi, a) * ipow(eta, b - 2) : 0.0;
      const double hxy = (a > 0 && b > 0) ? a * b * ipow(xi, a - 1) * ipow(eta, b - 1) : 0.0;
      Mat2 h;
      h << hxx, hxy, hxy, hyy;
      (*hess)[k] = h / (scale * scale);
    }
  }
}

Vec2 cell_center(const Mesh& mesh, const Cell& cell) {
  Vec2 c = Vec2::Zero();
  for (int v : cell.vertex_ids) c += mesh.vertex(v);
  return c / static_cast<double>(cell.vertex_ids.size());
}

void build_polynomial_tables(HessianDiscretisation& hd) {
  const Mesh& mesh = hd.mesh;
  const Exponents& ex = exponents(hd.method);
  const int n_local = static_cast<int>(ex.size());
  hd.local_basis.resize(mesh.n_cells());
  hd.tables.resize(mesh.n_cells());
  for (const Cell& cell : mesh.cells) {
    LocalBasis& basis = hd.local_basis[cell.id];
    basis.center = cell_center(mesh, cell);
    basis.scale = cell.diameter;
    Eigen::MatrixXd M(n_local, n_local);
    Eigen::VectorXd val;
    std::vector<Vec2> grad;
    if (hd.method == Method::Morley) {
      for (int i = 0; i < 3; ++i) {
        monomials(ex, basis.center, basis.scale, mesh.vertex(cell.vertex_ids[i]), &val, nullptr, nullptr);
        M.row(i) = val;
      }
      for (int e = 0; e < 3; ++e) {
        const Edge& edge = mesh.edges[cell.edge_ids[e]];
        monomials(ex, basis.center, basis.scale, edge.midpoint, nullptr, &grad, nullptr);
        for (int k = 0; k < n_local; ++k) M(3 + e, k) = edge.unit_normal.dot(grad[k]);
      }
    } else {
      for (int i = 0; i < 4; ++i) {
        const Vec2 p = mesh.vertex(cell.vertex_ids[i]);
        monomials(ex, basis.center, basis.scale, p, &val, &grad, nullptr);
        M.row(3 * i) = val;
        for (int k = 0; k < n_local; ++k) {
          M(3 * i + 1, k) = grad[k].x();
          M(3 * i + 2, k) = grad[k].y();
        }
      }
    }
    basis.coeff = M.inverse();

    const MappedQuadrature& mq = hd.quad[cell.id];
    CellEvalTable& table = hd.tables[cell.id];
    table.n_local = n_local;
    table.n_q = mq.size();
    table.pi.resize(static_cast<std::size_t>(n_local) * table.n_q);
    table.grad.resize(table.pi.size());
    table.hess.resize(table.pi.size());
    Eigen::VectorXd values;
    std::vector<Vec2> grads;
    std::vector<Mat2> hessians;
    for (int q = 0; q < table.n_q; ++q) {
      basis.eval_all(hd.method, mq.points[q], values, grads, hessians);
      for (int i = 0; i < n_local; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i) * table.n_q + q;
        table.pi[idx] = values(i);
        table.grad[idx] = grads[i];
        table.hess[idx] = hessians[i];
      }
    }
  }
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Morley: return "morley";
    case Method::Adini: return "adini";
    default: return "gr";
  }
}

CellKind cell_kind_of(Method m) {
  return m == Method::Adini ? CellKind::Rectangle : CellKind::Triangle;
}

void LocalBasis::eval(Method method, const Vec2& x, Eigen::VectorXd& values) const {
  Eigen::VectorXd mono;
  monomials(exponents(method), center, scale, x, &mono, nullptr, nullptr);
  values = coeff.transpose() * mono;
}

void LocalBasis::eval_all(Method method, const Vec2& x, Eigen::VectorXd& values,
                          std::vector<Vec2>& grads, std::vector<Mat2>& hessians) const {
  Eigen::VectorXd mono;
  std::vector<Vec2> mono_grad;
  std::vector<Mat2> mono_hess;
  monomials(exponents(method), center, scale, x, &mono, &mono_grad, &mono_hess);
  const int n = size();
  values = coeff.transpose() * mono;
  grads.assign(n, Vec2::Zero());
  hessians.assign(n, Mat2::Zero());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const double c = coeff(k, j);
      if (c == 0.0) continue;
      grads[j] += c * mono_grad[k];
      hessians[j] += c * mono_hess[k];
    }
}

HessianDiscretisation build_morley(const Mesh& mesh) {
  if (mesh.kind != CellKind::Triangle)
    throw std::invalid_argument("build_morley: requires a triangle mesh");
  HessianDiscretisation hd;
  hd.method = Method::Morley;
  hd.mesh = mesh;
  hd.ref_rule = rule_for(CellKind::Triangle, kTriangleDegree);
  hd.quad.reserve(mesh.n_cells());
  for (const Cell& c : mesh.cells) hd.quad.push_back(map_to_cell(hd.ref_rule, mesh, c));

  DofMap& dm = hd.dof_map;
  dm.vertex_value_dof.assign(mesh.n_vertices(), -1);
  dm.edge_dof.assign(mesh.n_edges(), -1);
  for (const Vertex& v : mesh.vertices)
    if (!v.is_boundary) {
      dm.vertex_value_dof[v.id] = dm.n_dofs++;
      dm.dof_kind.push_back(DofKind::VertexValue);
    }
  for (const Edge& e : mesh.edges)
    if (!e.is_boundary) {
      dm.edge_dof[e.id] = dm.n_dofs++;
      dm.dof_kind.push_back(DofKind::EdgeNormalDeriv);
    }
  dm.cell_dofs.resize(mesh.n_cells());
  for (const Cell& c : mesh.cells) {
    auto& dofs = dm.cell_dofs[c.id];
    dofs = {dm.vertex_value_dof[c.vertex_ids[0]], dm.vertex_value_dof[c.vertex_ids[1]],
            dm.vertex_value_dof[c.vertex_ids[2]], dm.edge_dof[c.edge_ids[0]],
            dm.edge_dof[c.edge_ids[1]], dm.edge_dof[c.edge_ids[2]]};
  }
  build_polynomial_tables(hd);
  return hd;
}

HessianDiscretisation build_adini(const Mesh& mesh) {
  if (mesh.kind != CellKind::Rectangle)
    throw std::invalid_argument("build_adini: requires a rectangle mesh");
  HessianDiscretisation hd;
  hd.method = Method::Adini;
  hd.mesh = mesh;
  hd.ref_rule = rule_for(CellKind::Rectangle, kRectangleDegree);
  hd.quad.reserve(mesh.n_cells());
  for (const Cell& c : mesh.cells) hd.quad.push_back(map_to_cell(hd.ref_rule, mesh, c));

  DofMap& dm = hd.dof_map;
  dm.vertex_value_dof.assign(mesh.n_vertices(), -1);
  dm.vertex_dx_dof.assign(mesh.n_vertices(), -1);
  dm.vertex_dy_dof.assign(mesh.n_vertices(), -1);
  for (const Vertex& v : mesh.vertices)
    if (!v.is_boundary) {
      dm.vertex_value_dof[v.id] = dm.n_dofs++;
      dm.vertex_dx_dof[v.id] = dm.n_dofs++;
      dm.vertex_dy_dof[v.id] = dm.n_dofs++;
      dm.dof_kind.push_back(DofKind::VertexValue);
      dm.dof_kind.push_back(DofKind::VertexDx);
      dm.dof_kind.push_back(DofKind::VertexDy);
    }
  dm.cell_dofs.resize(mesh.n_cells());
  for (const Cell& c : mesh.cells) {
    auto& dofs = dm.cell_dofs[c.id];
    dofs.reserve(12);
    for (int v : c.vertex_ids) {
      dofs.push_back(dm.vertex_value_dof[v]);
      dofs.push_back(dm.vertex_dx_dof[v]);
      dofs.push_back(dm.vertex_dy_dof[v]);
    }
  }
  build_polynomial_tables(hd);
  return hd;
}

HessianDiscretisation build_gr(const Mesh& mesh) {
  if (mesh.kind != CellKind::Triangle)
    throw std::invalid_argument("build_gr: requires a triangle mesh");
  HessianDiscretisation hd;
  hd.method = Method::GradientRecovery;
  hd.mesh = mesh;
  hd.ref_rule = rule_for(CellKind::Triangle, kTriangleDegree);
  hd.quad.reserve(mesh.n_cells());
  for (const Cell& c : mesh.cells) hd.quad.push_back(map_to_cell(hd.ref_rule, mesh, c));

  DofMap& dm = hd.dof_map;
  dm.vertex_value_dof.assign(mesh.n_vertices(), -1);
  for (const Vertex& v : mesh.vertices)
    if (!v.is_boundary) {
      dm.vertex_value_dof[v.id] = dm.n_dofs++;
      dm.dof_kind.push_back(DofKind::VertexValue);
    }

  // P1 hat gradients per cell, local vertex order
  std::vector<std::array<Vec2, 3>> hat_grad(mesh.n_cells());
  for (const Cell& c : mesh.cells) {
    const Vec2 a = mesh.vertex(c.vertex_ids[0]);
    const Vec2 b = mesh.vertex(c.vertex_ids[1]);
    const Vec2 d = mesh.vertex(c.vertex_ids[2]);
    Mat2 J;
    J.col(0) = b - a;
    J.col(1) = d - a;
    const Mat2 JinvT = J.inverse().transpose();
    hat_grad[c.id][0] = JinvT * Vec2(-1, -1);
    hat_grad[c.id][1] = JinvT * Vec2(1, 0);
    hat_grad[c.id][2] = JinvT * Vec2(0, 1);
  }

  // vertex-averaged recovery with |K| weights; forced to zero at boundary
  // vertices (clamped condition on the recovered gradient space)
  std::vector<double> patch_area(mesh.n_vertices(), 0.0);
  for (const Cell& c : mesh.cells)
    for (int v : c.vertex_ids) patch_area[v] += c.area;
  std::vector<Eigen::Triplet<double>> trips;
  for (const Cell& c : mesh.cells) {
    for (int lv = 0; lv < 3; ++lv) {
      const int a = c.vertex_ids[lv];
      if (mesh.vertices[a].is_boundary) continue;
      for (int lb = 0; lb < 3; ++lb) {
        const int dof = dm.vertex_value_dof[c.vertex_ids[lb]];
        if (dof < 0) continue;
        const Vec2 w = (c.area / patch_area[a]) * hat_grad[c.id][lb];
        trips.emplace_back(2 * a, dof, w.x());
        trips.emplace_back(2 * a + 1, dof, w.y());
      }
    }
  }
  hd.gr_recovery.resize(2 * mesh.n_vertices(), std::max(dm.n_dofs, 1));
  hd.gr_recovery.setFromTriplets(trips.begin(), trips.end());

  const Vec2 stab(1.0, 1.0);  // S_h, constant across cells
  dm.cell_dofs.resize(mesh.n_cells());
  hd.tables.resize(mesh.n_cells());

  // adjacency: cells around each vertex
  std::vector<std::vector<int>> cells_at(mesh.n_vertices());
  for (const Cell& c : mesh.cells)
    for (int v : c.vertex_ids) cells_at[v].push_back(c.id);

  // nodal recovered gradient of each free DOF b at vertex a, sparse as map
  // a -> (dof -> Vec2); rebuilt here cell-locally for the tables
  auto nodal_recovery = [&](int a, int dof) {
    Vec2 g = Vec2::Zero();
    if (mesh.vertices[a].is_boundary) return g;
    for (int ci : cells_at[a]) {
      const Cell& k = mesh.cells[ci];
      for (int lb = 0; lb < 3; ++lb)
        if (dm.vertex_value_dof[k.vertex_ids[lb]] == dof)
          g += (k.area / patch_area[a]) * hat_grad[ci][lb];
    }
    return g;
  };

  for (const Cell& c : mesh.cells) {
    std::vector<int> stencil;
    auto push = [&stencil](int dof) {
      if (dof < 0) return;
      for (int s : stencil)
        if (s == dof) return;
      stencil.push_back(dof);
    };
    for (int v : c.vertex_ids) push(dm.vertex_value_dof[v]);
    for (int v : c.vertex_ids) {
      if (mesh.vertices[v].is_boundary) continue;
      for (int ci : cells_at[v])
        for (int b : mesh.cells[ci].vertex_ids) push(dm.vertex_value_dof[b]);
    }
    std::sort(stencil.begin(), stencil.end());
    dm.cell_dofs[c.id] = stencil;

    const MappedQuadrature& mq = hd.quad[c.id];
    CellEvalTable& table = hd.tables[c.id];
    table.n_local = static_cast<int>(stencil.size());
    table.n_q = mq.size();
    table.pi.assign(static_cast<std::size_t>(table.n_local) * table.n_q, 0.0);
    table.grad.assign(table.pi.size(), Vec2::Zero());
    table.hess.assign(table.pi.size(), Mat2::Zero());

    // barycentric coordinates of the quadrature points
    const Vec2 a = mesh.vertex(c.vertex_ids[0]);
    const Vec2 b = mesh.vertex(c.vertex_ids[1]);
    const Vec2 d = mesh.vertex(c.vertex_ids[2]);
    Mat2 J;
    J.col(0) = b - a;
    J.col(1) = d - a;
    const Mat2 Jinv = J.inverse();
    for (int i = 0; i < table.n_local; ++i) {
      const int dof = stencil[i];
      std::array<Vec2, 3> G;  // nodal recovered gradient at the cell vertices
      for (int lv = 0; lv < 3; ++lv) G[lv] = nodal_recovery(c.vertex_ids[lv], dof);
      // constant part of the recovered-gradient derivative on this cell
      Mat2 DG = Mat2::Zero();
      for (int lv = 0; lv < 3; ++lv) DG += G[lv] * hat_grad[c.id][lv].transpose();
      // hat data if the DOF is a vertex of this cell
      int local_vertex = -1;
      for (int lv = 0; lv < 3; ++lv)
        if (dm.vertex_value_dof[c.vertex_ids[lv]] == dof) local_vertex = lv;
      const Vec2 hat_g = local_vertex >= 0 ? hat_grad[c.id][local_vertex] : Vec2::Zero();
      for (int q = 0; q < table.n_q; ++q) {
        const Vec2 uv = Jinv * (mq.points[q] - a);
        const std::array<double, 3> lambda = {1.0 - uv.x() - uv.y(), uv.x(), uv.y()};
        const std::size_t idx = static_cast<std::size_t>(i) * table.n_q + q;
        if (local_vertex >= 0) table.pi[idx] = lambda[local_vertex];
        Vec2 Gq = Vec2::Zero();
        for (int lv = 0; lv < 3; ++lv) Gq += lambda[lv] * G[lv];
        table.grad[idx] = Gq;
        table.hess[idx] = DG + stab * (Gq - hat_g).transpose();
      }
    }
  }
  return hd;
}

HessianDiscretisation build_discretisation(Method method, const Mesh& mesh) {
  switch (method) {
    case Method::Morley: return build_morley(mesh);
    case Method::Adini: return build_adini(mesh);
    default: return build_gr(mesh);
  }
}

Eigen::VectorXd interpolate_dofs(const HessianDiscretisation& hd, const ScalarField& f) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(hd.n_dofs());
  const DofMap& dm = hd.dof_map;
  for (const Vertex& v : hd.mesh.vertices) {
    const int dv = dm.vertex_value_dof.empty() ? -1 : dm.vertex_value_dof[v.id];
    if (dv >= 0) u(dv) = f.value(v.coords());
    if (hd.method == Method::Adini && dm.vertex_dx_dof[v.id] >= 0) {
      const Vec2 g = f.gradient(v.coords());
      u(dm.vertex_dx_dof[v.id]) = g.x();
      u(dm.vertex_dy_dof[v.id]) = g.y();
    }
  }
  if (hd.method == Method::Morley) {
    for (const Edge& e : hd.mesh.edges) {
      const int de = dm.edge_dof[e.id];
      if (de >= 0) u(de) = e.unit_normal.dot(f.gradient(e.midpoint));
    }
  }
  return u;
}

Eigen::VectorXd interpolate_local(const HessianDiscretisation& hd, int cell, const ScalarField& f) {
  const Cell& c = hd.mesh.cells[cell];
  if (hd.method == Method::Morley) {
    Eigen::VectorXd u(6);
    for (int i = 0; i < 3; ++i) u(i) = f.value(hd.mesh.vertex(c.vertex_ids[i]));
    for (int e = 0; e < 3; ++e) {
      const Edge& edge = hd.mesh.edges[c.edge_ids[e]];
      u(3 + e) = edge.unit_normal.dot(f.gradient(edge.midpoint));
    }
    return u;
  }
  if (hd.method == Method::Adini) {
    Eigen::VectorXd u(12);
    for (int i = 0; i < 4; ++i) {
      const Vec2 p = hd.mesh.vertex(c.vertex_ids[i]);
      const Vec2 g = f.gradient(p);
      u(3 * i) = f.value(p);
      u(3 * i + 1) = g.x();
      u(3 * i + 2) = g.y();
    }
    return u;
  }
  // GR: stencil vertex values
  std::vector<int> vertex_of_dof(hd.n_dofs(), -1);
  for (int v = 0; v < hd.mesh.n_vertices(); ++v)
    if (hd.dof_map.vertex_value_dof[v] >= 0) vertex_of_dof[hd.dof_map.vertex_value_dof[v]] = v;
  const auto& dofs = hd.dof_map.cell_dofs[cell];
  Eigen::VectorXd u(static_cast<int>(dofs.size()));
  for (std::size_t i = 0; i < dofs.size(); ++i)
    u(static_cast<int>(i)) = f.value(hd.mesh.vertex(vertex_of_dof[dofs[i]]));
  return u;
}

EvalResult evaluate(const HessianDiscretisation& hd, const Eigen::VectorXd& coeffs, int cell, int q) {
  if (cell < 0 || cell >= hd.n_cells()) throw std::out_of_range("evaluate: cell index");
  const CellEvalTable& t = hd.tables[cell];
  if (q < 0 || q >= t.n_q) throw std::out_of_range("evaluate: quadrature index");
  EvalResult r;
  const auto& dofs = hd.dof_map.cell_dofs[cell];
  for (int i = 0; i < t.n_local; ++i) {
    const int g = dofs[i];
    if (g < 0) continue;
    const double c = coeffs(g);
    r.value += c * t.pi_at(i, q);
    r.gradient += c * t.grad_at(i, q);
    r.hessian += c * t.hess_at(i, q);
  }
  return r;
}

EvalResult evaluate_local(const HessianDiscretisation& hd, const Eigen::VectorXd& local_coeffs,
                          int cell, int q) {
  const CellEvalTable& t = hd.tables[cell];
  EvalResult r;
  for (int i = 0; i < t.n_local; ++i) {
    const double c = local_coeffs(i);
    r.value += c * t.pi_at(i, q);
    r.gradient += c * t.grad_at(i, q);
    r.hessian += c * t.hess_at(i, q);
  }
  return r;
}

double verify_tables(const HessianDiscretisation& hd, double fd_step) {
  if (hd.method == Method::GradientRecovery) return 0.0;
  double worst = 0.0;
  Eigen::VectorXd vp, vm;
  std::vector<Vec2> gp, gm;
  std::vector<Mat2> hp, hm;
  Eigen::VectorXd dummy;
  for (int cell = 0; cell < hd.n_cells(); ++cell) {
    const LocalBasis& basis = hd.local_basis[cell];
    const CellEvalTable& t = hd.tables[cell];
    const double h = fd_step * basis.scale;
    for (int q = 0; q < t.n_q; ++q) {
      const Vec2 x = hd.quad[cell].points[q];
      for (int dir = 0; dir < 2; ++dir) {
        Vec2 dx = Vec2::Zero();
        dx(dir) = h;
        basis.eval_all(hd.method, x + dx, vp, gp, hp);
        basis.eval_all(hd.method, x - dx, vm, gm, hm);
        for (int i = 0; i < t.n_local; ++i) {
          const double fd_g = (vp(i) - vm(i)) / (2 * h);
          const double scale_g = std::max(1.0, std::abs(t.grad_at(i, q)(dir)));
          worst = std::max(worst, std::abs(fd_g - t.grad_at(i, q)(dir)) / scale_g);
          for (int dir2 = 0; dir2 < 2; ++dir2) {
            const double fd_h = (gp[i](dir2) - gm[i](dir2)) / (2 * h);
            const double scale_h = std::max(1.0, std::abs(t.hess_at(i, q)(dir2, dir)));
            worst = std::max(worst, std::abs(fd_h - t.hess_at(i, q)(dir2, dir)) / scale_h);
          }
        }
      }
    }
  }
  return worst;
}

}  // namespace hdm
