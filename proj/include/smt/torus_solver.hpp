#pragma once

#include <cmath>
#include <vector>

#include "smt/errors.hpp"
#include "smt/torus_fft.hpp"
#include "smt/torus_field.hpp"

namespace smt {

struct TorusRayleighResult {
  double value;
  TorusField minimizer;  // normalized to unit q-norm, mean zero
  std::size_t iterations;
  double residual;
};

// Infimum of |grad u|^2 / ||u||_q^2 over mean-zero torus fields.  For q = 2
// the minimum is the lowest nonzero symbol of the discrete Laplacian,
// 4 n^2 sin^2(pi/n) ~ 4 pi^2.
inline TorusRayleighResult lambda_q_torus(double q, std::size_t n,
                                          std::size_t max_iterations = 20000,
                                          double residual_tol = 1e-11) {
  require(q > 1.0, errc::invalid_input, "lambda_q_torus: q must exceed 1");
  SpectralPoisson poisson(n);
  const double cell = 1.0 / static_cast<double>(n * n);

  TorusField u = TorusField::sample(n, [](double x, double y) {
    return std::cos(2.0 * M_PI * x) + std::cos(2.0 * M_PI * y) +
           0.3 * std::cos(2.0 * M_PI * (x + y));
  });
  u.subtract_mean();

  auto qnorm_pow = [&](const TorusField& v) {
    double s = 0.0;
    for (double t : v.values()) s += std::pow(std::abs(t), q);
    return s * cell;
  };
  auto normalize = [&](TorusField& v) {
    const double nq = std::pow(qnorm_pow(v), 1.0 / q);
    require(nq > 0.0, errc::degenerate_input, "lambda_q_torus: degenerate iterate");
    for (double& t : v.values()) t /= nq;
  };
  normalize(u);

  double R = u.dirichlet_energy();
  double sigma = 0.25;
  double residual = 0.0;
  bool converged = false;
  std::size_t it = 0;

  auto gradient = [&](const TorusField& v, double Rv) {
    TorusField g = v.stencil_apply();
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double t = v.values()[k];
      g.values()[k] = 2.0 * g.values()[k] -
                      Rv * (2.0 / q) * cell * q * std::pow(std::abs(t), q - 1.0) *
                          (t >= 0.0 ? 1.0 : -1.0);
    }
    g.subtract_mean();
    return g;
  };

  for (; it < max_iterations; ++it) {
    TorusField g = gradient(u, R);
    residual = poisson.dual_norm(g);
    if (residual <= residual_tol * std::max(1.0, R)) {
      converged = true;
      break;
    }
    TorusField d = poisson.solve_mean_zero(g);
    bool accepted = false;
    for (int halving = 0; halving < 40 && !accepted; ++halving) {
      TorusField trial(n);
      for (std::size_t k = 0; k < trial.size(); ++k)
        trial.values()[k] = u.values()[k] - sigma * d.values()[k];
      trial.subtract_mean();
      normalize(trial);
      const double Rt = trial.dirichlet_energy();
      if (Rt < R) {
        u = std::move(trial);
        R = Rt;
        sigma *= 1.25;
        accepted = true;
      } else {
        sigma *= 0.5;
      }
    }
    if (!accepted) break;
  }
  // Inverse-iteration polish: the natural fixed point u ~ K^{-1}|u|^{q-2}u
  // sharpens the minimizer beyond the floor where the line search can still
  // certify descent.
  for (int k = 0; k < 400; ++k) {
    TorusField rhs(n);
    for (std::size_t m = 0; m < rhs.size(); ++m) {
      const double t = u.values()[m];
      rhs.values()[m] = std::pow(std::abs(t), q - 1.0) * (t >= 0.0 ? 1.0 : -1.0);
    }
    rhs.subtract_mean();
    TorusField next = poisson.solve_mean_zero(rhs);
    normalize(next);
    if (next.dot(u) < 0.0)
      for (double& t : next.values()) t = -t;
    const double Rn = next.dirichlet_energy();
    if (Rn > R * (1.0 + 1e-11)) break;
    double change = 0.0;
    for (std::size_t m = 0; m < next.size(); ++m)
      change = std::max(change, std::abs(next.values()[m] - u.values()[m]));
    u = std::move(next);
    R = Rn;
    if (change < 1e-14) break;
  }
  residual = poisson.dual_norm(gradient(u, R));
  if (!converged && residual > 1e-7 * std::max(1.0, R))
    fail(errc::convergence, "lambda_q_torus: no convergence after " + std::to_string(it) +
                                " iterations, residual " + std::to_string(residual));
  return TorusRayleighResult{R, std::move(u), it, residual};
}

}  // namespace smt
