#pragma once

#include <cmath>
#include <vector>

#include "smt/errors.hpp"
#include "smt/radial_function.hpp"

namespace smt {

// v(r) = sqrt(1+alpha) u(r^{1/(1+alpha)}).  Nodes are mapped to r^{1+alpha},
// under which the piecewise log-linear structure is preserved exactly; the
// Dirichlet energy is invariant and the weighted exponential integral picks
// up the factor 1/(1+alpha):
//   integral |x|^{2a} e^{4 pi (1+a) u^2} = 1/(1+a) integral e^{4 pi v^2}.
inline RadialFunction power_change_of_variables(const RadialFunction& u, double alpha) {
  require(alpha > -1.0, errc::invalid_order, "power_change_of_variables: alpha must exceed -1");
  const double p = 1.0 + alpha;
  const double scale = std::sqrt(p);
  std::vector<double> nodes(u.nodes().size()), values(u.values().size());
  nodes[0] = 0.0;
  values[0] = scale * u.values()[0];
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    nodes[i] = std::pow(u.nodes()[i], p);
    values[i] = scale * u.values()[i];
  }
  return RadialFunction(std::move(nodes), std::move(values));
}

// v(r) = u(r^{1/(1+alpha)}) without amplitude scaling; transports the
// first-power exponential integral:
//   integral e^v = (1+a) integral |x|^{2a} e^u.
inline RadialFunction exp_change_of_variables(const RadialFunction& u, double alpha) {
  require(alpha > -1.0, errc::invalid_order, "exp_change_of_variables: alpha must exceed -1");
  const double p = 1.0 + alpha;
  std::vector<double> nodes(u.nodes().size());
  nodes[0] = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) nodes[i] = std::pow(u.nodes()[i], p);
  return RadialFunction(std::move(nodes), std::vector<double>(u.values()));
}

}  // namespace smt
