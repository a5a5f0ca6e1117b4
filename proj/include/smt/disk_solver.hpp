#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "smt/conical_weight.hpp"
#include "smt/errors.hpp"
#include "smt/quadrature.hpp"
#include "smt/radial_function.hpp"

namespace smt {

// Nodal machinery on the log-radial grid.  Vectors hold all node values
// u_0..u_N; the interpolant is constant on the innermost cell (u_0 is slaved
// to u_1) and u_N = 0 is the Dirichlet condition, enforced by projection.
class DiskStiffness {
 public:
  explicit DiskStiffness(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    const std::size_t N = nodes_.size() - 1;
    require(N >= 8, errc::invalid_input, "DiskStiffness: need at least 8 cells");
    w_.assign(N, 0.0);
    for (std::size_t c = 1; c < N; ++c)
      w_[c] = 2.0 * M_PI / (std::log(nodes_[c + 1]) - std::log(nodes_[c]));
  }

  const std::vector<double>& nodes() const { return nodes_; }
  std::size_t n_nodes() const { return nodes_.size(); }

  void project(std::vector<double>& u) const {
    u[0] = u[1];
    u.back() = 0.0;
  }

  // E(u) = sum_c w_c (u_{c+1} - u_c)^2 = integral |grad u|^2.
  double energy(const std::vector<double>& u) const {
    double e = 0.0;
    for (std::size_t c = 1; c + 1 < nodes_.size(); ++c) {
      const double du = u[c + 1] - u[c];
      e += w_[c] * du * du;
    }
    return e;
  }

  // out = K u with E(u) = u^T K u (so grad E = 2 K u); Dirichlet row dropped.
  std::vector<double> apply(const std::vector<double>& u) const {
    const std::size_t N = nodes_.size() - 1;
    std::vector<double> out(u.size(), 0.0);
    for (std::size_t c = 1; c < N; ++c) {
      const double du = u[c + 1] - u[c];
      out[c] -= w_[c] * du;
      if (c + 1 < N) out[c + 1] += w_[c] * du;
    }
    return out;
  }

  // Solves K x = rhs on the free nodes 1..N-1 (tridiagonal Thomas sweep);
  // rhs entries at nodes 0 and N are ignored, x_0 := x_1, x_N := 0.
  std::vector<double> solve(const std::vector<double>& rhs) const {
    const std::size_t N = nodes_.size() - 1;
    const std::size_t m = N - 1;  // unknowns u_1..u_{N-1}
    std::vector<double> diag(m), upper(m, 0.0), b(m);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t node = i + 1;
      double d = w_[node];  // cell to the right
      if (node >= 2) d += w_[node - 1];
      diag[i] = d;
      if (node + 1 <= N - 1) upper[i] = -w_[node];
      b[i] = rhs[node];
    }
    for (std::size_t i = 1; i < m; ++i) {
      const double f = upper[i - 1] / diag[i - 1];
      diag[i] -= f * upper[i - 1];
      b[i] -= f * b[i - 1];
    }
    std::vector<double> x(nodes_.size(), 0.0);
    x[m] = b[m - 1] / diag[m - 1];
    for (std::size_t i = m - 1; i-- > 0;) x[i + 1] = (b[i] - upper[i] * x[i + 2]) / diag[i];
    x[0] = x[1];
    x.back() = 0.0;
    return x;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> w_;
};

// Gauss-Legendre table for integrals against |x|^{2 alpha} V(|x|) dx, with
// each quadrature point tied to the pair of nodes its cell interpolates.
struct DiskQuadrature {
  struct Point {
    std::size_t left;   // node index c (value weight 1-theta)
    std::size_t right;  // node index c+1 (value weight theta)
    double theta;
    double log_weight;  // log of (measure weight x V factor)
  };
  std::vector<Point> points;

  template <class U>
  double value_at(const U& u, const Point& p) const {
    return u[p.left] * (1.0 - p.theta) + u[p.right] * p.theta;
  }
};

inline DiskQuadrature build_disk_quadrature(const std::vector<double>& nodes, double alpha,
                                            const std::function<double(double)>& V = {}) {
  require(alpha > -1.0, errc::invalid_order, "build_disk_quadrature: alpha must exceed -1");
  const double p = 1.0 + alpha;
  DiskQuadrature q;
  q.points.reserve(8 * (nodes.size() - 1));
  const double log_front = std::log(2.0 * M_PI / p);
  for (std::size_t c = 0; c + 1 < nodes.size(); ++c) {
    const double a = std::pow(nodes[c], p), b = std::pow(nodes[c + 1], p);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double t0 = c == 0 ? 0.0 : std::log(nodes[c]);
    const double dt = c == 0 ? 1.0 : std::log(nodes[c + 1]) - std::log(nodes[c]);
    for (std::size_t j = 0; j < 8; ++j) {
      const double s = mid + half * GaussLegendre8::nodes[j];
      const double r = std::pow(s, 1.0 / p);
      DiskQuadrature::Point pt;
      pt.left = c == 0 ? 1 : c;
      pt.right = c + 1;
      pt.theta = c == 0 ? 0.0 : (std::log(r) - t0) / dt;
      pt.log_weight = log_front + std::log(GaussLegendre8::weights[j] * half) + std::log(s) +
                      (V ? std::log(V(r)) : 0.0);
      q.points.push_back(pt);
    }
  }
  return q;
}

// ||u||_q^q against the plain measure and its nodal gradient.
inline double disk_qnorm_pow(const DiskQuadrature& quad, const std::vector<double>& u, double q) {
  double s = 0.0;
  for (const auto& p : quad.points) s += std::exp(p.log_weight) * std::pow(std::abs(quad.value_at(u, p)), q);
  return s;
}

inline std::vector<double> disk_qnorm_pow_gradient(const DiskQuadrature& quad,
                                                   const std::vector<double>& u, double q) {
  std::vector<double> g(u.size(), 0.0);
  for (const auto& p : quad.points) {
    const double v = quad.value_at(u, p);
    const double d = std::exp(p.log_weight) * q * std::pow(std::abs(v), q - 1.0) *
                     (v >= 0.0 ? 1.0 : -1.0);
    g[p.left] += d * (1.0 - p.theta);
    g[p.right] += d * p.theta;
  }
  g[1] += g[0];  // node 0 is slaved to node 1
  g[0] = 0.0;
  g.back() = 0.0;
  return g;
}

struct DescentOptions {
  std::size_t max_iterations = 10000;
  double residual_tol = 1e-10;
  double rel_change_tol = 1e-12;
};

struct RayleighResult {
  double value = 0.0;
  RadialFunction minimizer;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Infimum of |grad u|_2^2 / ||u||_q^2 over radial H^1_0 profiles, by
// stiffness-preconditioned descent on the unit ||.||_q sphere with step
// halving on increase.  For q = 2 this is the first Dirichlet eigenvalue of
// the disk, attained on the radial Bessel mode.
inline RayleighResult lambda_q_disk(double q, std::size_t cells = 256, double eps_min = 1e-8,
                                    DescentOptions opts = {}) {
  require(q > 1.0, errc::invalid_input, "lambda_q_disk: q must exceed 1");
  DiskStiffness K(geometric_grid(cells, eps_min));
  const auto& nodes = K.nodes();
  auto quad = build_disk_quadrature(nodes, 0.0);

  std::vector<double> u(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) u[i] = 1.0 - nodes[i] * nodes[i];
  K.project(u);
  auto normalize = [&](std::vector<double>& v) {
    const double nq = std::pow(disk_qnorm_pow(quad, v, q), 1.0 / q);
    require(nq > 0.0, errc::degenerate_input, "lambda_q_disk: degenerate iterate");
    for (double& x : v) x /= nq;
  };
  normalize(u);

  double R = K.energy(u);
  double sigma = 0.5;
  double residual = 0.0;
  bool converged = false;
  std::size_t it = 0;
  auto dual_residual = [&]() {
    auto Ku = K.apply(u);
    auto dN = disk_qnorm_pow_gradient(quad, u, q);  // gradient of ||u||_q^q
    // gradient of the quotient at unit q-norm: 2 K u - R (2/q) dN
    std::vector<double> g(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) g[i] = 2.0 * Ku[i] - R * (2.0 / q) * dN[i];
    g[0] = 0.0;
    g.back() = 0.0;
    auto d = K.solve(g);
    double g_dual = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) g_dual += g[i] * d[i];
    return std::make_pair(std::sqrt(std::max(0.0, g_dual)), std::move(d));
  };
  for (; it < opts.max_iterations; ++it) {
    auto [res_now, d] = dual_residual();
    residual = res_now;
    if (residual <= opts.residual_tol * std::max(1.0, R)) {
      converged = true;
      break;
    }
    bool accepted = false;
    for (int halving = 0; halving < 40 && !accepted; ++halving) {
      std::vector<double> trial(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] - sigma * d[i];
      K.project(trial);
      normalize(trial);
      const double Rt = K.energy(trial);
      if (Rt < R) {
        u = std::move(trial);
        R = Rt;
        sigma *= 1.25;
        accepted = true;
      } else {
        sigma *= 0.5;
      }
    }
    if (!accepted) break;  // numerical floor reached
  }
  // Inverse-iteration polish: the fixed point u ~ K^{-1}|u|^{q-2}u sharpens
  // the minimizer past the certification floor of the line search.
  for (int k = 0; k < 400; ++k) {
    std::vector<double> rhs = disk_qnorm_pow_gradient(quad, u, q);
    auto next = K.solve(rhs);
    normalize(next);
    double flip = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) flip += next[i] * u[i];
    if (flip < 0.0)
      for (double& t : next) t = -t;
    const double Rn = K.energy(next);
    if (Rn > R * (1.0 + 1e-11)) break;
    double change = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
      change = std::max(change, std::abs(next[i] - u[i]));
    u = std::move(next);
    R = Rn;
    if (change < 1e-14) break;
  }
  residual = dual_residual().first;
  if (!converged && residual > 1e-6 * std::max(1.0, R))
    fail(errc::convergence, "lambda_q_disk: no convergence after " + std::to_string(it) +
                                " iterations, residual " + std::to_string(residual));
  return RayleighResult{R, RadialFunction(nodes, u), it, residual};
}

}  // namespace smt
