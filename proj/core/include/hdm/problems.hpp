// The two applications driving the solver: the stream-function form of the
// 2D Navier-Stokes equations (k=1) and the von Karman plate equations in
// their vector form (k=2), with manufactured exact solutions and loads.

#ifndef HDM_PROBLEMS_HPP
#define HDM_PROBLEMS_HPP

#include <array>
#include <functional>
#include <vector>

#include "hdm/fields.hpp"
#include "hdm/mesh.hpp"

namespace hdm {

enum class ProblemType { NavierStokes, VonKarman };

std::string to_string(ProblemType p);

/// 2x2 cofactor matrix: cof([[a,b],[c,d]]) = [[d,-c],[-b,a]].
inline Mat2 cofactor(const Mat2& m) {
  Mat2 c;
  c << m(1, 1), -m(1, 0), -m(0, 1), m(0, 0);
  return c;
}

/// Quarter-turn rotation (-t2, t1).
inline Vec2 rot_quarter(const Vec2& t) { return Vec2(-t.y(), t.x()); }

using HessBlock = std::array<Mat2, 2>;  ///< per-component hessians, first k entries valid
using GradBlock = std::array<Vec2, 2>;  ///< per-component gradients

/// Pointwise density of the bilinear form: NS is the Frobenius product, vK is
/// block-diagonal with the second block doubled.
inline double a_kernel_eval(ProblemType t, const HessBlock& xi, const HessBlock& chi) {
  if (t == ProblemType::NavierStokes) return xi[0].cwiseProduct(chi[0]).sum();
  return xi[0].cwiseProduct(chi[0]).sum() + 2.0 * xi[1].cwiseProduct(chi[1]).sum();
}

/// Pointwise density of the trilinear form.  NS: tr(xi) phi . rot(theta);
/// vK: cof(xi_1) theta_1 . phi_2 - cof(xi_1) phi_1 . theta_2.
inline double b_kernel_eval(ProblemType t, const HessBlock& xi, const GradBlock& phi,
                            const GradBlock& theta) {
  if (t == ProblemType::NavierStokes)
    return xi[0].trace() * phi[0].dot(rot_quarter(theta[0]));
  const Mat2 c = cofactor(xi[0]);
  return (c * theta[0]).dot(phi[1]) - (c * phi[0]).dot(theta[1]);
}

struct ProblemDefinition {
  ProblemType type = ProblemType::NavierStokes;
  int k = 1;
  std::function<double(const HessBlock&, const HessBlock&)> a_kernel;
  std::function<double(const HessBlock&, const GradBlock&, const GradBlock&)> b_kernel;
};

ProblemDefinition ns_problem();
ProblemDefinition vk_problem();

/// Exact solution with per-component derivative evaluators and the discrete
/// load densities.  For vK the second load carries the manufactured
/// g = lap^2 v + [u,u]/2, doubled to match the vector form's second block.
struct ExactSolution {
  int k = 1;
  std::vector<ScalarField> components;
  std::vector<std::function<double(const Vec2&)>> loads;
};

/// u (= v for vK) = x^2 y^2 (1-x)^2 (1-y)^2 on the unit square; loads in
/// closed polynomial form.
ExactSolution square_exact(ProblemType problem);

/// The L-shape corner-singular solution u = v =
/// (x^2-1)^2 (y^2-1)^2 r^{1+gamma} g_{gamma,omega}(theta), vK loads included.
/// Evaluators throw std::domain_error at the re-entrant corner r = 0.
ExactSolution lshape_exact();

/// The singular exponent: root of sin^2(gamma w) = gamma^2 sin^2(w), w = 3pi/2.
double lshape_gamma();

}  // namespace hdm

#endif
