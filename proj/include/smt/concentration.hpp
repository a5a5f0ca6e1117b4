#pragma once

#include <cmath>
#include <cstddef>

#include "smt/errors.hpp"
#include "smt/radial_function.hpp"
#include "smt/radial_integrals.hpp"

namespace smt {

struct ConcentrationReport {
  double delta = 0.0;        // selected radius
  double tau = 0.0;          // Dirichlet mass inside D_delta
  double tail_integral = 0;  // integral of e^{4 pi u^2} over D \ D_delta
  bool fallback_used = false;
};

// Critical-growth comparison function: 1/(r^2 log^2 r) for r <= 1/e, else e^2.
// Integrable on the disk and bounded below by e^2.
inline double concentration_majorant(double r) {
  if (r <= 0.0) return std::numeric_limits<double>::infinity();
  if (r <= std::exp(-1.0)) {
    const double l = std::log(r);
    return 1.0 / (r * r * l * l);
  }
  return std::exp(2.0);
}

// Smallest grid node delta such that e^{4 pi u^2} <= f on every node of
// [delta, 1], f the majorant above.  If the domination holds on the whole
// grid the infimum is 0 and the caller-supplied fallback radius is returned
// instead.  Reports the inner Dirichlet mass and the dominated tail integral.
inline ConcentrationReport select_concentration_radius(const RadialFunction& u, double fallback) {
  require(fallback > 0.0 && fallback < 1.0, errc::invalid_input,
          "select_concentration_radius: fallback must be in (0,1)");
  require(u.decreasing(), errc::monotonicity,
          "select_concentration_radius: u must be radially decreasing");
  require(u.dirichlet_energy() <= 1.0 + 1e-9, errc::invalid_input,
          "select_concentration_radius: Dirichlet energy must be at most 1");

  const auto& nodes = u.nodes();
  const auto& values = u.values();
  // Scan outward-in: find the innermost node from which domination holds.
  std::size_t first_ok = nodes.size();  // sentinel: never dominated
  for (std::size_t i = nodes.size(); i-- > 1;) {
    const double lhs = std::exp(4.0 * M_PI * values[i] * values[i]);
    if (lhs <= concentration_majorant(nodes[i]))
      first_ok = i;
    else
      break;
  }

  ConcentrationReport rep;
  if (first_ok == 1) {
    rep.delta = fallback;
    rep.fallback_used = true;
  } else if (first_ok == nodes.size()) {
    rep.delta = 1.0 - 1e-12;  // no domination anywhere; degenerate report
    rep.fallback_used = false;
  } else {
    rep.delta = nodes[first_ok];
  }
  rep.tau = u.dirichlet_energy(rep.delta);
  rep.tail_integral = weighted_exp_annulus(u, 0.0, 4.0 * M_PI, 0.0, rep.delta, 1.0).value;
  return rep;
}

}  // namespace smt
