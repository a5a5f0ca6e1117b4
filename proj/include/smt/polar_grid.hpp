#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "smt/errors.hpp"

namespace smt {

// Piecewise-constant function on an n_r x n_theta polar partition of the unit
// disk; one value per cell, areas precomputed.  The outermost radial ring is
// the H^1_0 proxy and must hold zeros.
class PolarGridFunction {
 public:
  PolarGridFunction(std::size_t n_r, std::size_t n_theta)
      : n_r_(n_r), n_theta_(n_theta), values_(n_r * n_theta, 0.0) {
    require(n_r >= 4 && n_theta >= 4, errc::invalid_input, "PolarGridFunction: grid too small");
  }

  template <class F>
  static PolarGridFunction sample(std::size_t n_r, std::size_t n_theta, F&& f) {
    PolarGridFunction u(n_r, n_theta);
    for (std::size_t i = 0; i < n_r; ++i)
      for (std::size_t j = 0; j < n_theta; ++j)
        u(i, j) = (i + 1 == n_r) ? 0.0 : f(u.r_center(i), u.theta_center(j));
    return u;
  }

  std::size_t n_r() const { return n_r_; }
  std::size_t n_theta() const { return n_theta_; }
  std::size_t size() const { return values_.size(); }

  double& operator()(std::size_t i, std::size_t j) { return values_[i * n_theta_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_theta_ + j]; }
  const std::vector<double>& values() const { return values_; }

  double r_inner(std::size_t i) const { return static_cast<double>(i) / n_r_; }
  double r_outer(std::size_t i) const { return static_cast<double>(i + 1) / n_r_; }
  double r_center(std::size_t i) const { return (i + 0.5) / n_r_; }
  double theta_center(std::size_t j) const { return 2.0 * M_PI * (j + 0.5) / n_theta_; }

  double cell_area(std::size_t i) const {
    const double ro = r_outer(i), ri = r_inner(i);
    return M_PI * (ro * ro - ri * ri) / n_theta_;
  }

  // Exact integral of |x|^{2 alpha} over a cell in ring i.
  double cell_weight(std::size_t i, double alpha) const {
    const double p = 2.0 * (1.0 + alpha);
    return M_PI / ((1.0 + alpha) * n_theta_) * (std::pow(r_outer(i), p) - std::pow(r_inner(i), p));
  }

  void check_valid() const {
    for (double v : values_)
      require(std::isfinite(v), errc::invalid_input, "PolarGridFunction: non-finite value");
    for (std::size_t j = 0; j < n_theta_; ++j)
      require((*this)(n_r_ - 1, j) == 0.0, errc::invalid_input,
              "PolarGridFunction: boundary ring must vanish");
  }

  double lp_norm(double p) const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_r_; ++i) {
      const double a = cell_area(i);
      for (std::size_t j = 0; j < n_theta_; ++j) s += a * std::pow(std::abs((*this)(i, j)), p);
    }
    return std::pow(s, 1.0 / p);
  }

  double integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_r_; ++i) {
      const double a = cell_area(i);
      for (std::size_t j = 0; j < n_theta_; ++j) s += a * (*this)(i, j);
    }
    return s;
  }

  // Two-point-difference Dirichlet energy with metric factors:
  //   sum over radial edges   (du/dr)^2 * r_edge * dtheta * dr
  // + sum over angular edges  (du/(r dtheta))^2 * r_center * dtheta * dr.
  // The zero boundary ring supplies the H^1_0 boundary condition.
  double dirichlet_energy() const {
    const double dr = 1.0 / n_r_;
    const double dth = 2.0 * M_PI / n_theta_;
    double e = 0.0;
    for (std::size_t i = 0; i + 1 < n_r_; ++i) {
      const double redge = r_outer(i);
      for (std::size_t j = 0; j < n_theta_; ++j) {
        const double du = (*this)(i + 1, j) - (*this)(i, j);
        e += (du / dr) * (du / dr) * redge * dth * dr;
      }
    }
    for (std::size_t i = 0; i < n_r_; ++i) {
      const double rc = r_center(i);
      for (std::size_t j = 0; j < n_theta_; ++j) {
        const double du = (*this)(i, (j + 1) % n_theta_) - (*this)(i, j);
        e += (du / (rc * dth)) * (du / (rc * dth)) * rc * dth * dr;
      }
    }
    return e;
  }

 private:
  std::size_t n_r_, n_theta_;
  std::vector<double> values_;
};

}  // namespace smt
