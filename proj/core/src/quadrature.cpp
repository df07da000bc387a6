#include "hdm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hdm {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n over [-1,1], then shift to [0,1]
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pm = (n == 1) ? 1.0 : p0;
      pp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = 0.5 * (1.0 + x);
    weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
}

QuadratureRule rule_for(CellKind kind, int degree) {
  if (degree < 0 || degree > 12)
    throw std::invalid_argument("rule_for: unsupported degree " + std::to_string(degree));
  QuadratureRule rule;
  rule.kind = kind;
  rule.degree = degree;
  if (kind == CellKind::Rectangle) {
    const int n = degree / 2 + 1;
    std::vector<double> x, w;
    gauss_legendre_01(n, x, w);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rule.points.emplace_back(x[i], x[j]);
        rule.weights.push_back(w[i] * w[j]);
      }
    return rule;
  }
  // Duffy map (u, v) -> (u, v(1-u)): the Jacobian (1-u) raises the u-degree
  // of a total-degree-d integrand to d+1.
  const int nu = (degree + 1) / 2 + 1;
  const int nv = degree / 2 + 1;
  std::vector<double> xu, wu, xv, wv;
  gauss_legendre_01(nu, xu, wu);
  gauss_legendre_01(nv, xv, wv);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      rule.points.emplace_back(xu[i], xv[j] * (1.0 - xu[i]));
      rule.weights.push_back(wu[i] * wv[j] * (1.0 - xu[i]));
    }
  return rule;
}

MappedQuadrature map_to_cell(const QuadratureRule& rule, const Mesh& mesh, const Cell& cell) {
  if ((cell.kind == CellKind::Triangle) != (rule.kind == CellKind::Triangle))
    throw std::invalid_argument("map_to_cell: rule/cell kind mismatch");
  MappedQuadrature out;
  out.points.reserve(rule.size());
  out.weights.reserve(rule.size());
  if (cell.kind == CellKind::Triangle) {
    const Vec2 a = mesh.vertex(cell.vertex_ids[0]);
    const Vec2 b = mesh.vertex(cell.vertex_ids[1]);
    const Vec2 c = mesh.vertex(cell.vertex_ids[2]);
    const double detJ = 2.0 * cell.area;  // reference measure 1/2
    for (int q = 0; q < rule.size(); ++q) {
      const Vec2& r = rule.points[q];
      out.points.push_back(a + r.x() * (b - a) + r.y() * (c - a));
      out.weights.push_back(rule.weights[q] * detJ);
    }
  } else {
    const Vec2 a = mesh.vertex(cell.vertex_ids[0]);
    const Vec2 b = mesh.vertex(cell.vertex_ids[1]);
    const Vec2 d = mesh.vertex(cell.vertex_ids[3]);
    for (int q = 0; q < rule.size(); ++q) {
      const Vec2& r = rule.points[q];
      out.points.push_back(a + r.x() * (b - a) + r.y() * (d - a));
      out.weights.push_back(rule.weights[q] * cell.area);
    }
  }
  return out;
}

}  // namespace hdm
