#include "hdm/problems.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace hdm {

std::string to_string(ProblemType p) { return p == ProblemType::NavierStokes ? "ns" : "vk"; }

ProblemDefinition ns_problem() {
  ProblemDefinition p;
  p.type = ProblemType::NavierStokes;
  p.k = 1;
  p.a_kernel = [](const HessBlock& xi, const HessBlock& chi) {
    return a_kernel_eval(ProblemType::NavierStokes, xi, chi);
  };
  p.b_kernel = [](const HessBlock& xi, const GradBlock& phi, const GradBlock& theta) {
    return b_kernel_eval(ProblemType::NavierStokes, xi, phi, theta);
  };
  return p;
}

ProblemDefinition vk_problem() {
  ProblemDefinition p;
  p.type = ProblemType::VonKarman;
  p.k = 2;
  p.a_kernel = [](const HessBlock& xi, const HessBlock& chi) {
    return a_kernel_eval(ProblemType::VonKarman, xi, chi);
  };
  p.b_kernel = [](const HessBlock& xi, const GradBlock& phi, const GradBlock& theta) {
    return b_kernel_eval(ProblemType::VonKarman, xi, phi, theta);
  };
  return p;
}

// ---------------------------------------------------------------------------
// Square domain
// ---------------------------------------------------------------------------

ScalarField make_scalar_field(std::string name, const Poly2& p) {
  ScalarField f;
  f.name = std::move(name);
  auto px = p.dx(), py = p.dy();
  auto pxx = px.dx(), pxy = px.dy(), pyy = py.dy();
  auto pxxx = pxx.dx(), pxxy = pxx.dy(), pxyy = pxy.dy(), pyyy = pyy.dy();
  f.value = [p](const Vec2& x) { return p(x); };
  f.gradient = [px, py](const Vec2& x) { return Vec2(px(x), py(x)); };
  f.hessian = [pxx, pxy, pyy](const Vec2& x) {
    Mat2 h;
    h << pxx(x), pxy(x), pxy(x), pyy(x);
    return h;
  };
  f.third = [pxxx, pxxy, pxyy, pyyy](const Vec2& x) {
    return std::array<double, 4>{pxxx(x), pxxy(x), pxyy(x), pyyy(x)};
  };
  return f;
}

VectorField make_vector_field(std::string name, const Poly2& p1, const Poly2& p2) {
  VectorField f;
  f.name = std::move(name);
  auto div = p1.dx() + p2.dy();
  f.value = [p1, p2](const Vec2& x) { return Vec2(p1(x), p2(x)); };
  f.divergence = [div](const Vec2& x) { return div(x); };
  return f;
}

MatrixField make_matrix_field(std::string name, const Poly2& a11, const Poly2& a12,
                              const Poly2& a21, const Poly2& a22) {
  MatrixField f;
  f.name = std::move(name);
  auto d1 = a11.dx() + a12.dy();
  auto d2 = a21.dx() + a22.dy();
  auto hc = a11.dx().dx() + a12.dx().dy() + a21.dx().dy() + a22.dy().dy();
  auto b11x = a11.dx(), b12x = a12.dx(), b21x = a21.dx(), b22x = a22.dx();
  auto b11y = a11.dy(), b12y = a12.dy(), b21y = a21.dy(), b22y = a22.dy();
  f.value = [a11, a12, a21, a22](const Vec2& x) {
    Mat2 m;
    m << a11(x), a12(x), a21(x), a22(x);
    return m;
  };
  f.divergence = [d1, d2](const Vec2& x) { return Vec2(d1(x), d2(x)); };
  f.hess_contract = [hc](const Vec2& x) { return hc(x); };
  f.dx = [b11x, b12x, b21x, b22x](const Vec2& x) {
    Mat2 m;
    m << b11x(x), b12x(x), b21x(x), b22x(x);
    return m;
  };
  f.dy = [b11y, b12y, b21y, b22y](const Vec2& x) {
    Mat2 m;
    m << b11y(x), b12y(x), b21y(x), b22y(x);
    return m;
  };
  return f;
}

VectorField divergence_of(std::string name, const Poly2& a11, const Poly2& a12,
                          const Poly2& a21, const Poly2& a22) {
  return make_vector_field(std::move(name), a11.dx() + a12.dy(), a21.dx() + a22.dy());
}

namespace {

Poly2 square_bubble() {
  // t^2 (1-t)^2 = t^2 - 2 t^3 + t^4 in each variable
  const std::vector<double> c = {0.0, 0.0, 1.0, -2.0, 1.0};
  return Poly2::in_x(c) * Poly2::in_y(c);
}

Poly2 vk_bracket(const Poly2& a, const Poly2& b) {
  // [a,b] = a_xx b_yy + a_yy b_xx - 2 a_xy b_xy
  return a.dx().dx() * b.dy().dy() + a.dy().dy() * b.dx().dx() -
         2.0 * (a.dx().dy() * b.dx().dy());
}

}  // namespace

ExactSolution square_exact(ProblemType problem) {
  const Poly2 u = square_bubble();
  ExactSolution ex;
  if (problem == ProblemType::NavierStokes) {
    ex.k = 1;
    ex.components.push_back(make_scalar_field("u", u));
    // f = lap^2 u - (lap u)_x u_y + (lap u)_y u_x
    const Poly2 lap = u.laplacian();
    const Poly2 f = u.bilaplacian() - lap.dx() * u.dy() + lap.dy() * u.dx();
    ex.loads.push_back([f](const Vec2& x) { return f(x); });
    return ex;
  }
  ex.k = 2;
  ex.components.push_back(make_scalar_field("u", u));
  ex.components.push_back(make_scalar_field("v", u));
  const Poly2 br = vk_bracket(u, u);  // [u,u] = [u,v] since u = v
  const Poly2 f = u.bilaplacian() - br;
  const Poly2 two_g = 2.0 * u.bilaplacian() + br;  // 2 (lap^2 v + [u,u]/2)
  ex.loads.push_back([f](const Vec2& x) { return f(x); });
  ex.loads.push_back([two_g](const Vec2& x) { return two_g(x); });
  return ex;
}

// ---------------------------------------------------------------------------
// L-shape singular solution
// ---------------------------------------------------------------------------

double lshape_gamma() { return 0.54448373678246393; }

namespace {

struct PolarTerm {
  double c;
  double mu;  ///< power of r
  double nu;  ///< angular frequency
  bool is_cos;
};

using PolarSum = std::vector<PolarTerm>;

PolarSum d_x(const PolarSum& s) {
  PolarSum out;
  out.reserve(2 * s.size());
  for (const auto& t : s) {
    const double p = 0.5 * (t.mu + t.nu), q = 0.5 * (t.mu - t.nu);
    if (t.is_cos) {
      out.push_back({t.c * p, t.mu - 1, t.nu - 1, true});
      out.push_back({t.c * q, t.mu - 1, t.nu + 1, true});
    } else {
      out.push_back({t.c * p, t.mu - 1, t.nu - 1, false});
      out.push_back({t.c * q, t.mu - 1, t.nu + 1, false});
    }
  }
  return out;
}

PolarSum d_y(const PolarSum& s) {
  PolarSum out;
  out.reserve(2 * s.size());
  for (const auto& t : s) {
    const double p = 0.5 * (t.mu + t.nu), q = 0.5 * (t.mu - t.nu);
    if (t.is_cos) {
      out.push_back({-t.c * p, t.mu - 1, t.nu - 1, false});
      out.push_back({t.c * q, t.mu - 1, t.nu + 1, false});
    } else {
      out.push_back({t.c * p, t.mu - 1, t.nu - 1, true});
      out.push_back({-t.c * q, t.mu - 1, t.nu + 1, true});
    }
  }
  return out;
}

double eval(const PolarSum& s, double r, double theta) {
  double acc = 0.0;
  for (const auto& t : s) {
    const double ang = t.nu * theta;
    acc += t.c * std::pow(r, t.mu) * (t.is_cos ? std::cos(ang) : std::sin(ang));
  }
  return acc;
}

// Precomputed partials up to total order 4 of P(x,y) * S(r,theta), where P is
// polynomial and S the corner-singular part.
class LshapeSolution {
 public:
  LshapeSolution() {
    const double g = lshape_gamma();
    const double w = 1.5 * M_PI;
    const double A = std::sin((g - 1) * w) / (g - 1) - std::sin((g + 1) * w) / (g + 1);
    const double C = std::cos((g - 1) * w) - std::cos((g + 1) * w);
    PolarSum s = {{A, 1 + g, g - 1, true},
                  {-A, 1 + g, g + 1, true},
                  {-C / (g - 1), 1 + g, g - 1, false},
                  {C / (g + 1), 1 + g, g + 1, false}};
    const std::vector<double> quart = {1.0, 0.0, -2.0, 0.0, 1.0};  // (t^2-1)^2
    const Poly2 P = Poly2::in_x(quart) * Poly2::in_y(quart);
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 4; ++b) {
        PolarSum sd = s;
        Poly2 pd = P;
        for (int i = 0; i < a; ++i) {
          sd = d_x(sd);
          pd = pd.dx();
        }
        for (int j = 0; j < b; ++j) {
          sd = d_y(sd);
          pd = pd.dy();
        }
        S_[a][b] = std::move(sd);
        P_[a][b] = std::move(pd);
      }
    }
    for (int n = 0; n <= 4; ++n) {
      binom_[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
    }
  }

  double partial(int a, int b, const Vec2& x) const {
    const double r = x.norm();
    if (r < 1e-13) throw std::domain_error("L-shape exact solution evaluated at the re-entrant corner");
    double theta = std::atan2(x.y(), x.x());
    if (theta < -1e-12) theta += 2.0 * M_PI;
    double acc = 0.0;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j)
        acc += binom_[a][i] * binom_[b][j] * P_[i][j](x) * eval(S_[a - i][b - j], r, theta);
    return acc;
  }

 private:
  PolarSum S_[5][5];
  Poly2 P_[5][5];
  double binom_[5][5] = {};
};

const LshapeSolution& lshape_solution() {
  static const LshapeSolution sol;
  return sol;
}

ScalarField lshape_field(std::string name) {
  ScalarField f;
  f.name = std::move(name);
  const auto& sol = lshape_solution();
  f.value = [&sol](const Vec2& x) { return sol.partial(0, 0, x); };
  f.gradient = [&sol](const Vec2& x) { return Vec2(sol.partial(1, 0, x), sol.partial(0, 1, x)); };
  f.hessian = [&sol](const Vec2& x) {
    Mat2 h;
    const double uxy = sol.partial(1, 1, x);
    h << sol.partial(2, 0, x), uxy, uxy, sol.partial(0, 2, x);
    return h;
  };
  f.third = [&sol](const Vec2& x) {
    return std::array<double, 4>{sol.partial(3, 0, x), sol.partial(2, 1, x),
                                 sol.partial(1, 2, x), sol.partial(0, 3, x)};
  };
  return f;
}

}  // namespace

ExactSolution lshape_exact() {
  ExactSolution ex;
  ex.k = 2;
  ex.components.push_back(lshape_field("u"));
  ex.components.push_back(lshape_field("v"));
  const auto& sol = lshape_solution();
  auto bilap = [&sol](const Vec2& x) {
    return sol.partial(4, 0, x) + 2.0 * sol.partial(2, 2, x) + sol.partial(0, 4, x);
  };
  auto bracket_uu = [&sol](const Vec2& x) {
    const double uxx = sol.partial(2, 0, x), uyy = sol.partial(0, 2, x), uxy = sol.partial(1, 1, x);
    return 2.0 * (uxx * uyy - uxy * uxy);
  };
  // u = v: f = lap^2 u - [u,u], second-block load 2g = 2 lap^2 v + [u,u]
  ex.loads.push_back([bilap, bracket_uu](const Vec2& x) { return bilap(x) - bracket_uu(x); });
  ex.loads.push_back([bilap, bracket_uu](const Vec2& x) { return 2.0 * bilap(x) + bracket_uu(x); });
  return ex;
}

}  // namespace hdm
