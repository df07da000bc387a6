// Callable scalar/vector/matrix fields with the derivative data the property
// measures and error norms consume.

#ifndef HDM_FIELDS_HPP
#define HDM_FIELDS_HPP

#include <array>
#include <functional>
#include <string>

#include "hdm/poly.hpp"

namespace hdm {

struct ScalarField {
  std::string name;
  std::function<double(const Vec2&)> value;
  std::function<Vec2(const Vec2&)> gradient;
  std::function<Mat2(const Vec2&)> hessian;
  /// third partials (xxx, xxy, xyy, yyy); may be empty when not needed
  std::function<std::array<double, 4>(const Vec2&)> third;
};

struct VectorField {
  std::string name;
  std::function<Vec2(const Vec2&)> value;
  std::function<double(const Vec2&)> divergence;
};

struct MatrixField {
  std::string name;
  std::function<Mat2(const Vec2&)> value;
  std::function<Vec2(const Vec2&)> divergence;      ///< row-wise divergence
  std::function<double(const Vec2&)> hess_contract; ///< sum_ij d_ij xi_ij
  std::function<Mat2(const Vec2&)> dx;              ///< entrywise d/dx
  std::function<Mat2(const Vec2&)> dy;
};

ScalarField make_scalar_field(std::string name, const Poly2& p);
VectorField make_vector_field(std::string name, const Poly2& p1, const Poly2& p2);
MatrixField make_matrix_field(std::string name, const Poly2& a11, const Poly2& a12,
                              const Poly2& a21, const Poly2& a22);
/// The vector field div(xi) of a polynomial matrix field, with its divergence.
VectorField divergence_of(std::string name, const Poly2& a11, const Poly2& a12,
                          const Poly2& a21, const Poly2& a22);

}  // namespace hdm

#endif
