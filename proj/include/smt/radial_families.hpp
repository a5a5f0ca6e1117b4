#pragma once

#include <cmath>
#include <vector>

#include "smt/errors.hpp"
#include "smt/radial_function.hpp"

namespace smt {

// Truncated-logarithm profile with unit Dirichlet energy concentrating at the
// origin: constant sqrt(log(1/rho)/(2 pi)) on [0, rho], then log(1/r) scaled
// to reach 0 at r = 1.  rho is inserted as a node, which makes the piecewise
// log-linear representation exact.
inline RadialFunction moser_function(double rho, std::size_t cells = 512, double eps_min = 1e-8) {
  require(rho > 0.0 && rho < 1.0, errc::invalid_input, "moser_function: rho must be in (0,1)");
  const double T = std::log(1.0 / rho);
  const double peak = std::sqrt(T / (2.0 * M_PI));
  auto nodes = insert_nodes(geometric_grid(cells, std::min(eps_min, rho * 1e-3)),
                            std::vector<double>{rho});
  return RadialFunction::sample(std::move(nodes), [&](double r) {
    if (r <= rho) return peak;
    return std::log(1.0 / r) / std::sqrt(2.0 * M_PI * T);
  });
}

// Sharpness family for the singular Onofri inequality:
//   u(r) = -2 log(1 + (r/eps)^{2(1+alpha)}) + L   on [0, gamma*eps],
//   u(r) = -4 (1+alpha) log r                     on [gamma*eps, 1],
// with L chosen so the two pieces match and u(1) = 0.
inline RadialFunction onofri_sharpness_family(double eps, double alpha, double gamma,
                                              std::size_t cells = 2048, double eps_min = 1e-8) {
  require(eps > 0.0 && eps < 1.0, errc::invalid_input, "onofri_sharpness_family: eps in (0,1)");
  require(gamma > 1.0, errc::invalid_input, "onofri_sharpness_family: gamma must exceed 1");
  require(alpha > -1.0, errc::invalid_order, "onofri_sharpness_family: alpha must exceed -1");
  require(eps * gamma < 1.0, errc::geometry, "onofri_sharpness_family: eps*gamma must be below 1");
  const double b = 2.0 * (1.0 + alpha);
  const double gb = std::pow(gamma, b);
  const double L = 2.0 * std::log((1.0 + gb) / gb) - 2.0 * b * std::log(eps);
  auto nodes = insert_nodes(geometric_grid(cells, std::min(eps_min, eps * 1e-3)),
                            std::vector<double>{eps, gamma * eps});
  return RadialFunction::sample(std::move(nodes), [&](double r) {
    if (r <= gamma * eps) return -2.0 * std::log1p(std::pow(r / eps, b)) + L;
    return -2.0 * b * std::log(r);
  });
}

// Disk analogue of the calibrated bubble-plus-Green-tail family: the Green
// function of the unit disk at the origin is -(log r)/(2 pi) with vanishing
// Robin constant, so the profile is the bubble core matched to a pure log
// tail.  Returned with unit Dirichlet energy; the normalizer c^2 = e0 is the
// closed-form energy of the unnormalized profile.
struct DiskBubbleFamily {
  RadialFunction u;
  double c_eps;
  double L_eps;
  double gamma_eps;
};

inline DiskBubbleFamily disk_bubble_family(double eps, double alpha, std::size_t cells = 4096) {
  require(eps > 0.0 && eps <= 0.05, errc::invalid_input, "disk_bubble_family: bad eps");
  require(alpha > -1.0 && alpha <= 0.0, errc::invalid_order,
          "disk_bubble_family: alpha must be in (-1, 0]");
  const double b = 2.0 * (1.0 + alpha);
  const double bb = 4.0 * M_PI * (1.0 + alpha);
  const double gamma = std::pow(std::abs(std::log(eps)), 1.0 / (1.0 + alpha));
  const double core = gamma * eps;
  require(core < 0.5, errc::geometry, "disk_bubble_family: bubble does not fit the disk");
  const double Y = std::pow(gamma, b);
  const double e0 = (std::log1p(Y) - 1.0 + 1.0 / (1.0 + Y)) / bb - std::log(core) / (2.0 * M_PI);
  const double c = std::sqrt(e0);
  const double M = std::log1p(1.0 / Y) - b * std::log(eps);
  const double L = bb * e0 - M;
  auto nodes = insert_nodes(geometric_grid(cells, std::min(1e-8, eps * 1e-3)),
                            std::vector<double>{eps, core});
  auto u = RadialFunction::sample(std::move(nodes), [&](double r) {
    if (r <= core) return c - (std::log1p(std::pow(r / eps, b)) + L) / (bb * c);
    return -std::log(r) / (2.0 * M_PI * c);
  });
  // exact unit energy at the discrete level
  std::vector<double> vals = u.values();
  const double scale = 1.0 / std::sqrt(u.dirichlet_energy());
  for (double& v : vals) v *= scale;
  return DiskBubbleFamily{RadialFunction(u.nodes(), std::move(vals)), c, L, gamma};
}

// lhs = u(r)^2 and rhs = -(1/2pi) (1 - |grad u|^2 mass inside D_r) log r.
// For decreasing profiles in the unit Dirichlet ball, lhs <= rhs.
inline std::pair<double, double> radial_decay_bound(const RadialFunction& u, double r) {
  require(r > 0.0 && r < 1.0, errc::invalid_input, "radial_decay_bound: r must be in (0,1)");
  require(u.decreasing(), errc::monotonicity, "radial_decay_bound: u must be radially decreasing");
  const double v = u(r);
  const double inner = u.dirichlet_energy(r);
  return {v * v, -(1.0 - inner) * std::log(r) / (2.0 * M_PI)};
}

}  // namespace smt
