#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "smt/errors.hpp"
#include "smt/quadrature.hpp"
#include "smt/radial_function.hpp"

namespace smt {

// Per-cell Gauss-Legendre quadrature of 2*pi * integral f(r) r^{2a+1} dr over
// [r_lo, r_hi], after the substitution s = r^{1+a} which turns the measure
// into (2*pi/(1+a)) s ds and removes the endpoint singularity.  `nodes` must
// be an increasing radius list whose cells resolve f.
template <class F>
double radial_integral(std::span<const double> nodes, double alpha, double r_lo, double r_hi,
                       F&& f) {
  require(alpha > -1.0, errc::invalid_order, "radial_integral: alpha must exceed -1");
  require(r_hi > r_lo && r_lo >= 0.0, errc::invalid_input, "radial_integral: bad interval");
  const double p = 1.0 + alpha;
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < nodes.size(); ++c) {
    const double lo = std::max(nodes[c], r_lo);
    const double hi = std::min(nodes[c + 1], r_hi);
    if (hi <= lo) continue;
    const double a = std::pow(lo, p), b = std::pow(hi, p);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t j = 0; j < 8; ++j) {
      const double s = mid + half * GaussLegendre8::nodes[j];
      const double r = std::pow(s, 1.0 / p);
      total += GaussLegendre8::weights[j] * half * s * f(r);
    }
  }
  return 2.0 * M_PI / p * total;
}

// Same quadrature for 2*pi * integral exp(logf(r)) r^{2a+1} dr, accumulated
// in log space so that super-exponential integrands cannot overflow.
template <class LogF>
ExpIntegral radial_exp_integral(std::span<const double> nodes, double alpha, double r_lo,
                                double r_hi, LogF&& logf) {
  require(alpha > -1.0, errc::invalid_order, "radial_exp_integral: alpha must exceed -1");
  require(r_hi > r_lo && r_lo >= 0.0, errc::invalid_input, "radial_exp_integral: bad interval");
  const double p = 1.0 + alpha;
  LogSumExp acc;
  for (std::size_t c = 0; c + 1 < nodes.size(); ++c) {
    const double lo = std::max(nodes[c], r_lo);
    const double hi = std::min(nodes[c + 1], r_hi);
    if (hi <= lo) continue;
    const double a = std::pow(lo, p), b = std::pow(hi, p);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t j = 0; j < 8; ++j) {
      const double s = mid + half * GaussLegendre8::nodes[j];
      const double r = std::pow(s, 1.0 / p);
      acc.add(std::log(GaussLegendre8::weights[j] * half) + std::log(s) + logf(r));
    }
  }
  if (acc.empty()) return ExpIntegral{};
  return ExpIntegral::from_log(acc.log() + std::log(2.0 * M_PI / p));
}

// integral over D_delta of |x|^{2 alpha} exp(quad u^2 + lin u) dx.
inline ExpIntegral weighted_exp_integral(const RadialFunction& u, double alpha, double quad,
                                         double lin, double delta = 1.0) {
  require(delta > 0.0 && delta <= 1.0, errc::invalid_input,
          "weighted_exp_integral: delta must be in (0,1]");
  return radial_exp_integral(u.nodes(), alpha, 0.0, delta, [&](double r) {
    const double v = u(r);
    return quad * v * v + lin * v;
  });
}

// Annulus variant, integral over r_lo <= |x| <= r_hi.
inline ExpIntegral weighted_exp_annulus(const RadialFunction& u, double alpha, double quad,
                                        double lin, double r_lo, double r_hi) {
  return radial_exp_integral(u.nodes(), alpha, r_lo, r_hi, [&](double r) {
    const double v = u(r);
    return quad * v * v + lin * v;
  });
}

// L^q norm of u over the unit disk, q >= 1.
inline double radial_q_norm(const RadialFunction& u, double q) {
  require(q >= 1.0, errc::invalid_input, "radial_q_norm: q must be >= 1");
  const double nq =
      radial_integral(u.nodes(), 0.0, 0.0, 1.0, [&](double r) { return std::pow(std::abs(u(r)), q); });
  return std::pow(nq, 1.0 / q);
}

}  // namespace smt
