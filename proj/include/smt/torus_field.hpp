#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "smt/errors.hpp"

namespace smt {

// Scalar field on the uniform periodic grid over [0,1)^2, one value per grid
// point x_ij = (i/n, j/n), row-major.  n must be a power of two, at least 64.
class TorusField {
 public:
  explicit TorusField(std::size_t n) : n_(n), v_(n * n, 0.0) {
    require(n >= 64 && (n & (n - 1)) == 0, errc::invalid_input,
            "TorusField: n must be a power of two >= 64");
  }

  template <class F>
  static TorusField sample(std::size_t n, F&& f) {
    TorusField u(n);
    const double h = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) u(i, j) = f(i * h, j * h);
    return u;
  }

  std::size_t n() const { return n_; }
  double h() const { return 1.0 / static_cast<double>(n_); }
  std::size_t size() const { return v_.size(); }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

  double& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

  double x(std::size_t i) const { return static_cast<double>(i) * h(); }
  double y(std::size_t j) const { return static_cast<double>(j) * h(); }

  double mean() const {
    double s = 0.0;
    for (double t : v_) s += t;
    return s / static_cast<double>(v_.size());
  }

  void subtract_mean() {
    const double m = mean();
    for (double& t : v_) t -= m;
  }

  // Dirichlet integral of the grid field: sum of squared forward differences,
  // which equals the quadrature of |grad u|^2 (the h^2 factors cancel).
  double dirichlet_energy() const {
    double e = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t ip = (i + 1) % n_;
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t jp = (j + 1) % n_;
        const double dx = (*this)(ip, j) - (*this)(i, j);
        const double dy = (*this)(i, jp) - (*this)(i, j);
        e += dx * dx + dy * dy;
      }
    }
    return e;
  }

  double lp_norm(double p) const {
    double s = 0.0;
    for (double t : v_) s += std::pow(std::abs(t), p);
    return std::pow(s / static_cast<double>(v_.size()), 1.0 / p);
  }

  // 5-point stencil numerator: (L u)(i,j) = 4u - u(i+1,j) - u(i-1,j)
  // - u(i,j+1) - u(i,j-1), so that -Lap_h u = n^2 L u and the Dirichlet
  // integral above is u . (L u).
  TorusField stencil_apply() const {
    TorusField out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t ip = (i + 1) % n_, im = (i + n_ - 1) % n_;
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t jp = (j + 1) % n_, jm = (j + n_ - 1) % n_;
        out(i, j) = 4.0 * (*this)(i, j) - (*this)(ip, j) - (*this)(im, j) - (*this)(i, jp) -
                    (*this)(i, jm);
      }
    }
    return out;
  }

  double dot(const TorusField& other) const {
    require(other.n_ == n_, errc::invalid_input, "TorusField: size mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < v_.size(); ++k) s += v_[k] * other.v_[k];
    return s;
  }

 private:
  std::size_t n_;
  std::vector<double> v_;
};

}  // namespace smt
