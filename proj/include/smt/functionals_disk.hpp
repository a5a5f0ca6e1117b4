#pragma once

#include <cmath>
#include <utility>

#include "smt/conical_weight.hpp"
#include "smt/errors.hpp"
#include "smt/polar_grid.hpp"
#include "smt/radial_function.hpp"
#include "smt/radial_integrals.hpp"
#include "smt/rearrangement.hpp"

namespace smt {

// integral over D of h e^{beta u^2 (1 + lambda ||u||_q^2)} dx for radial u,
// h = V(|x|) |x|^{2 alpha}.  The q-norm is taken in the plain metric.
inline ExpIntegral mt_functional_disk(const RadialFunction& u, const FunctionalParams& params) {
  params.check();
  params.weight.require_disk_mode();
  const double alpha = params.weight.disk_order();
  double coeff = params.beta;
  if (params.lambda > 0.0) {
    const double qn = radial_q_norm(u, params.q);
    coeff = params.beta * (1.0 + params.lambda * qn * qn);
  }
  return radial_exp_integral(u.nodes(), alpha, 0.0, 1.0, [&](double r) {
    const double v = u(r);
    return coeff * v * v + std::log(params.weight.V_radial(r));
  });
}

// Onofri deficit of a radial profile:
//   (1/(16 pi (1+alpha))) |grad u|_2^2 + 1 - log((1+alpha)/pi int |x|^{2a} e^u).
// Nonnegative for every H^1_0 profile; any order alpha > -1 is admissible in
// the radial case.
inline double onofri_deficit(const RadialFunction& u, double alpha) {
  require(alpha > -1.0, errc::invalid_order, "onofri_deficit: alpha must exceed -1");
  const double energy = u.dirichlet_energy();
  const auto I = radial_exp_integral(u.nodes(), alpha, 0.0, 1.0, [&](double r) { return u(r); });
  return energy / (16.0 * M_PI * (1.0 + alpha)) + 1.0 -
         (std::log((1.0 + alpha) / M_PI) + I.log_value);
}

// Non-radial variant: reduce to the radial case by symmetric decreasing
// rearrangement (which can only decrease the deficit) and use the discrete
// polar Dirichlet energy of the input.  Restricted to alpha <= 0, where the
// rearrangement comparison for the singular integral holds.
inline double onofri_deficit(const PolarGridFunction& u, double alpha) {
  require(alpha > -1.0, errc::invalid_order, "onofri_deficit: alpha must exceed -1");
  require(alpha <= 0.0, errc::unsupported,
          "onofri_deficit: positive orders require radial input");
  const double energy = u.dirichlet_energy();
  const auto star = decreasing_rearrangement(u);
  const auto I = star.weighted_exp_integral(alpha);
  return energy / (16.0 * M_PI * (1.0 + alpha)) + 1.0 -
         (std::log((1.0 + alpha) / M_PI) + I.log_value);
}

// Scaled singular Onofri bound:
//   integral over D_delta of |x|^{2a} e^{c u} <= pi e^{1 + c^2 tau /(16 pi (1+a))}
//                                               delta^{2(1+a)} / (1+a)
// for u supported in D_delta with Dirichlet energy at most tau.
inline double scaled_onofri_bound(double delta, double tau, double c, double alpha) {
  require(delta > 0.0 && tau > 0.0, errc::invalid_input,
          "scaled_onofri_bound: delta and tau must be positive");
  require(alpha > -1.0 && alpha <= 0.0, errc::invalid_order,
          "scaled_onofri_bound: alpha must be in (-1, 0]");
  return M_PI / (1.0 + alpha) *
         std::exp(1.0 + c * c * tau / (16.0 * M_PI * (1.0 + alpha))) *
         std::pow(delta, 2.0 * (1.0 + alpha));
}

// Check mode: evaluates both sides for a profile supported in D_delta.
inline std::pair<double, double> scaled_onofri_check(const RadialFunction& u, double delta,
                                                     double tau, double c, double alpha) {
  const double bound = scaled_onofri_bound(delta, tau, c, alpha);
  for (std::size_t i = 0; i < u.nodes().size(); ++i)
    if (u.nodes()[i] >= delta * (1.0 + 1e-12))
      require(std::abs(u.values()[i]) < 1e-12, errc::invalid_input,
              "scaled_onofri_check: u must be supported in D_delta");
  require(u.dirichlet_energy() <= tau * (1.0 + 1e-9), errc::invalid_input,
          "scaled_onofri_check: energy exceeds tau");
  const auto I = radial_exp_integral(u.nodes(), alpha, 0.0, delta,
                                     [&](double r) { return c * u(r); });
  return {I.value, bound};
}

}  // namespace smt
