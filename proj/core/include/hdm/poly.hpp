// Dense bivariate polynomials with exact arithmetic derivatives; used to
// build manufactured solutions, loads and the analytic test fields.

#ifndef HDM_POLY_HPP
#define HDM_POLY_HPP

#include <cassert>
#include <vector>

#include "hdm/mesh.hpp"

namespace hdm {

class Poly2 {
 public:
  Poly2() : nx_(1), ny_(1), c_(1, 0.0) {}
  Poly2(int nx, int ny) : nx_(nx), ny_(ny), c_(static_cast<std::size_t>(nx) * ny, 0.0) {}

  static Poly2 monomial(int i, int j, double a = 1.0) {
    Poly2 p(i + 1, j + 1);
    p.at(i, j) = a;
    return p;
  }

  /// 1D polynomial in x (coeffs low-to-high) promoted to 2D.
  static Poly2 in_x(const std::vector<double>& coeffs) {
    Poly2 p(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.at(static_cast<int>(i), 0) = coeffs[i];
    return p;
  }
  static Poly2 in_y(const std::vector<double>& coeffs) {
    Poly2 p(1, static_cast<int>(coeffs.size()));
    for (std::size_t j = 0; j < coeffs.size(); ++j) p.at(0, static_cast<int>(j)) = coeffs[j];
    return p;
  }

  double& at(int i, int j) { return c_[static_cast<std::size_t>(j) * nx_ + i]; }
  double at(int i, int j) const { return c_[static_cast<std::size_t>(j) * nx_ + i]; }
  int deg_x() const { return nx_ - 1; }
  int deg_y() const { return ny_ - 1; }

  double operator()(double x, double y) const {
    // Horner in y of Horner-in-x rows
    double acc = 0.0;
    for (int j = ny_ - 1; j >= 0; --j) {
      double row = 0.0;
      for (int i = nx_ - 1; i >= 0; --i) row = row * x + at(i, j);
      acc = acc * y + row;
    }
    return acc;
  }
  double operator()(const Vec2& p) const { return (*this)(p.x(), p.y()); }

  Poly2 dx() const {
    if (nx_ == 1) return Poly2();
    Poly2 p(nx_ - 1, ny_);
    for (int j = 0; j < ny_; ++j)
      for (int i = 1; i < nx_; ++i) p.at(i - 1, j) = i * at(i, j);
    return p;
  }
  Poly2 dy() const {
    if (ny_ == 1) return Poly2();
    Poly2 p(nx_, ny_ - 1);
    for (int j = 1; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) p.at(i, j - 1) = j * at(i, j);
    return p;
  }

  Poly2 operator+(const Poly2& o) const {
    Poly2 p(std::max(nx_, o.nx_), std::max(ny_, o.ny_));
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) p.at(i, j) += at(i, j);
    for (int j = 0; j < o.ny_; ++j)
      for (int i = 0; i < o.nx_; ++i) p.at(i, j) += o.at(i, j);
    return p;
  }
  Poly2 operator-(const Poly2& o) const { return *this + (o * -1.0); }
  Poly2 operator*(double s) const {
    Poly2 p = *this;
    for (auto& v : p.c_) v *= s;
    return p;
  }
  Poly2 operator*(const Poly2& o) const {
    Poly2 p(nx_ + o.nx_ - 1, ny_ + o.ny_ - 1);
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) {
        const double a = at(i, j);
        if (a == 0.0) continue;
        for (int l = 0; l < o.ny_; ++l)
          for (int k = 0; k < o.nx_; ++k) p.at(i + k, j + l) += a * o.at(k, l);
      }
    return p;
  }

  Poly2 laplacian() const { return dx().dx() + dy().dy(); }
  Poly2 bilaplacian() const { return laplacian().laplacian(); }

 private:
  int nx_, ny_;
  std::vector<double> c_;
};

inline Poly2 operator*(double s, const Poly2& p) { return p * s; }

}  // namespace hdm

#endif
