#pragma once

#include <cmath>
#include <vector>

#include "smt/conical_weight.hpp"
#include "smt/errors.hpp"
#include "smt/quadrature.hpp"
#include "smt/torus_field.hpp"

namespace smt {

// Per-cell integrals of the conical weight h = V prod d(., p_i)^{2 a_i} on
// the torus grid.  Cells within 3h of a singular point integrate the local
// singular factor by sub-cell quadrature (exact polar octant rule on the cell
// containing the point, tensor Gauss-Legendre nearby); elsewhere the midpoint
// value is used.  Stored as logs: the weights enter exponential integrals.
class TorusWeightTable {
 public:
  TorusWeightTable(const ConicalWeight& weight, std::size_t n) : n_(n), logw_(n * n) {
    const double h = 1.0 / static_cast<double>(n);
    const double log_h2 = 2.0 * std::log(h);
    for (const auto& p : weight.points()) {
      require(std::abs(p.x * n - std::llround(p.x * n)) < 1e-9 &&
                  std::abs(p.y * n - std::llround(p.y * n)) < 1e-9,
              errc::geometry, "TorusWeightTable: singular points must be grid points");
    }
    for (std::size_t i = 0; i < n_; ++i) {
      const double x = i * h;
      for (std::size_t j = 0; j < n_; ++j) {
        const double y = j * h;
        double nearest = 2.0;
        const SingularPoint* near_p = nullptr;
        for (const auto& p : weight.points()) {
          const double d = torus_distance(x, y, p.x, p.y);
          if (d < nearest) {
            nearest = d;
            near_p = &p;
          }
        }
        double logw;
        if (near_p == nullptr || nearest > 3.0 * h) {
          logw = log_h2 + std::log(weight.h_torus(x, y));
        } else {
          // smooth rest of the weight, with the local singular factor removed
          double smooth = weight.V_at(x, y);
          for (const auto& p : weight.points())
            if (&p != near_p)
              smooth *= std::pow(torus_distance(x, y, p.x, p.y), 2.0 * p.alpha);
          const double w_sing = (nearest <= 1e-12)
                                    ? center_cell_weight(h, near_p->alpha)
                                    : offset_cell_weight(x, y, *near_p, h);
          logw = std::log(w_sing) + std::log(smooth);
        }
        logw_[i * n_ + j] = logw;
      }
    }
    LogSumExp acc;
    for (double lw : logw_) acc.add(lw);
    log_area_ = acc.log();
  }

  std::size_t n() const { return n_; }
  double log_weight(std::size_t i, std::size_t j) const { return logw_[i * n_ + j]; }
  double weight(std::size_t i, std::size_t j) const { return std::exp(logw_[i * n_ + j]); }
  double area() const { return std::exp(log_area_); }  // weighted surface area
  double log_area() const { return log_area_; }

 private:
  // integral of |x - c|^{2 alpha} over the square cell centred at c: in polar
  // coordinates 8 * int_0^{pi/4} rho(phi)^{2(1+alpha)} / (2(1+alpha)) dphi
  // with rho = (h/2)/cos(phi); Gauss-Legendre in phi.
  static double center_cell_weight(double h, double alpha) {
    const double p = 2.0 * (1.0 + alpha);
    double integral = 0.0;
    const double a = 0.0, b = M_PI / 4.0;
    for (int rep = 0; rep < 2; ++rep) {
      // two panels for a little extra accuracy near phi = pi/4
      const double lo = a + rep * (b - a) / 2.0, hi = lo + (b - a) / 2.0;
      const double m2 = 0.5 * (lo + hi), h2 = 0.5 * (hi - lo);
      for (std::size_t k = 0; k < 8; ++k) {
        const double phi = m2 + h2 * GaussLegendre8::nodes[k];
        const double rho = 0.5 * h / std::cos(phi);
        integral += GaussLegendre8::weights[k] * h2 * std::pow(rho, p);
      }
    }
    return 8.0 * integral / p;
  }

  // Tensor Gauss-Legendre integral of d(., p)^{2 alpha} over the cell centred
  // at (x, y); the integrand is smooth there (the cell excludes p).
  static double offset_cell_weight(double x, double y, const SingularPoint& p, double h) {
    double acc = 0.0;
    for (std::size_t a = 0; a < 8; ++a) {
      const double qx = x + 0.5 * h * GaussLegendre8::nodes[a];
      for (std::size_t b = 0; b < 8; ++b) {
        const double qy = y + 0.5 * h * GaussLegendre8::nodes[b];
        acc += GaussLegendre8::weights[a] * GaussLegendre8::weights[b] *
               std::pow(torus_distance(qx, qy, p.x, p.y), 2.0 * p.alpha);
      }
    }
    return acc * 0.25 * h * h;
  }

  std::size_t n_;
  std::vector<double> logw_;
  double log_area_ = 0.0;
};

// integral over the torus of h e^{beta u^2 (1 + lambda ||u||_q^2)}.
inline ExpIntegral surface_functional(const TorusField& u, const FunctionalParams& params,
                                      const TorusWeightTable& table) {
  params.check();
  require(table.n() == u.n(), errc::invalid_input, "surface_functional: grid mismatch");
  double coeff = params.beta;
  if (params.lambda > 0.0) {
    const double qn = u.lp_norm(params.q);
    coeff = params.beta * (1.0 + params.lambda * qn * qn);
  }
  LogSumExp acc;
  for (std::size_t i = 0; i < u.n(); ++i)
    for (std::size_t j = 0; j < u.n(); ++j)
      acc.add(table.log_weight(i, j) + coeff * u(i, j) * u(i, j));
  return ExpIntegral::from_log(acc.log());
}

inline ExpIntegral surface_functional(const TorusField& u, const FunctionalParams& params) {
  TorusWeightTable table(params.weight, u.n());
  return surface_functional(u, params, table);
}

}  // namespace smt
