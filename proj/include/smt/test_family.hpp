#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "smt/conical_weight.hpp"
#include "smt/errors.hpp"
#include "smt/torus_functional.hpp"
#include "smt/torus_green.hpp"
#include "smt/torus_solver.hpp"

namespace smt {

// Calibrated bubble-plus-Green-tail family concentrating at a point p of the
// torus:
//   w = c - (log(1 + (r/eps)^{2(1+ab)}) + L)/(bb c)   on r <= gamma eps,
//   w = (G - eta xi)/c                                on the gluing annulus,
//   w = G/c                                           outside,
// with gamma = |log eps|^{1/(1+ab)}, xi the regular remainder of G, and
// (c, L) solved so that the pieces match exactly and the normalized field has
// unit Dirichlet energy up to discretization.
struct TestFamilySpec {
  std::array<double, 2> p{0.0, 0.0};
  double eps = 1e-2;
  double lambda = 0.0;
  double q = 2.0;
};

struct TestFamilyResult {
  TorusField w;
  TorusField u;  // mean-zero, unit discrete Dirichlet energy
  double c_eps = 0.0;
  double L_eps = 0.0;
  double gamma_eps = 0.0;
  double denominator = 0.0;             // the q-norm correction sqrt(1 + lambda |G|_q^2 / c^2)
  double pre_normalization_energy = 0;  // |grad u_pre|^2 before the exact renormalization
};

inline TestFamilyResult test_family_w(const TestFamilySpec& spec, const ConicalWeight& weight,
                                      const GreenData& green, std::size_t n) {
  require(spec.eps > 0.0 && spec.eps < 1.0, errc::invalid_input, "test_family_w: bad eps");
  require(green.p[0] == spec.p[0] && green.p[1] == spec.p[1], errc::invalid_input,
          "test_family_w: green data at a different point");
  require(green.lambda == spec.lambda && green.q == spec.q, errc::invalid_input,
          "test_family_w: green data at different coupling");
  const double ab = weight.alpha_bar();
  const double bb = weight.beta_bar();
  const double b = 2.0 * (1.0 + ab);
  const double gamma = std::pow(std::abs(std::log(spec.eps)), 1.0 / (1.0 + ab));
  const double core = gamma * spec.eps;
  require(2.0 * core < 0.25, errc::scale, "test_family_w: bubble does not fit the chart");

  const double Y = std::pow(gamma, b);
  const double A = green.robin;
  // Region energies in closed form: the bubble core plus the Green tail.
  const double region1 = (std::log1p(Y) - 1.0 + 1.0 / (1.0 + Y)) / bb;
  const double c2 = region1 - std::log(core) / (2.0 * M_PI) + A;
  require(c2 > 0.0, errc::scale, "test_family_w: calibration failed (negative c^2)");
  const double c = std::sqrt(c2);
  const double M = std::log1p(1.0 / Y) + bb * A - b * std::log(spec.eps);
  const double L = bb * c2 - M;

  const auto& G = green.field;
  TorusField w(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r = torus_distance(w.x(i), w.y(j), spec.p[0], spec.p[1]);
      if (r <= core) {
        w(i, j) = c - (std::log1p(std::pow(r / spec.eps, b)) + L) / (bb * c);
      } else if (r < 2.0 * core) {
        const double xi = G(i, j) + std::log(r) / (2.0 * M_PI) - A;
        const double s = (2.0 * core - r) / core;  // 1 at the inner edge, 0 outside
        const double eta = s * s * (3.0 - 2.0 * s);
        w(i, j) = (G(i, j) - eta * xi) / c;
      } else {
        w(i, j) = G(i, j) / c;
      }
    }
  }

  TestFamilyResult out{std::move(w), TorusField(n), c, L, gamma, 0.0, 0.0};
  out.denominator = std::sqrt(1.0 + spec.lambda * green.norm_q * green.norm_q / c2);
  TorusField u = out.w;
  u.subtract_mean();
  for (double& v : u.values()) v /= out.denominator;
  out.pre_normalization_energy = u.dirichlet_energy();
  const double s = 1.0 / std::sqrt(out.pre_normalization_energy);
  for (double& v : u.values()) v *= s;
  out.u = std::move(u);
  return out;
}

// Divergence families for the supercritical regimes.
struct SupercriticalScales {
  double t_eps = 0.0;
  double r_eps = 0.0;
};

struct SupercriticalResult {
  TorusField u;
  double value = 0.0;
  double log_value = 0.0;
  bool saturated = false;
  double t_eps = 0.0;
  double r_eps = 0.0;
  double growth_scale = 0.0;  // t^2 |log eps|
};

inline double supercritical_default_t(double eps) {
  return std::pow(std::abs(std::log(eps)), -0.25);
}
inline double supercritical_default_r(double eps) { return std::sqrt(eps); }

// Truncated-logarithm bump of unit continuum energy in the chart of radius
// delta0 at p.
inline TorusField log_bump(std::array<double, 2> p, double eps, double delta0, std::size_t n) {
  const double T = std::log(delta0 / eps);
  return TorusField::sample(n, [&](double x, double y) {
    const double r = torus_distance(x, y, p[0], p[1]);
    if (r >= delta0) return 0.0;
    if (r <= eps) return std::sqrt(T / (2.0 * M_PI));
    return std::log(delta0 / r) / std::sqrt(2.0 * M_PI * T);
  });
}

// Families witnessing blow-up of the functional: the plain concentrating bump
// for beta above the critical exponent, and the bump-plus-eigenfunction
// combination for critical beta with coupling above lambda_q.  The field is
// normalized to unit discrete energy, so its functional value is a certified
// lower bound for the supremum.
inline SupercriticalResult supercritical_family(double eps, const FunctionalParams& params,
                                                std::size_t n,
                                                std::optional<double> lambda_q_value = {},
                                                std::optional<SupercriticalScales> scales = {}) {
  params.check();
  require(eps > 0.0 && eps < 0.1, errc::invalid_input, "supercritical_family: bad eps");
  const double bb = params.weight.beta_bar();
  const double delta0 = 0.25;
  const bool beta_super = params.beta > bb * (1.0 + 1e-12);
  const bool beta_critical = std::abs(params.beta - bb) <= bb * 1e-12;

  std::array<double, 2> p{0.0, 0.0};
  const double ab = params.weight.alpha_bar();
  for (const auto& sp : params.weight.points())
    if (sp.alpha == ab) p = {sp.x, sp.y};

  TorusField w(n);
  SupercriticalResult out{TorusField(n), 0.0, 0.0, false, 0.0, 0.0, 0.0};

  if (beta_super) {
    w = log_bump(p, eps, delta0, n);
  } else {
    require(beta_critical, errc::regime,
            "supercritical_family: beta below the critical exponent");
    const double lam_q = lambda_q_value ? *lambda_q_value : lambda_q_torus(params.q, n).value;
    require(params.lambda > lam_q * (1.0 + 1e-12), errc::regime,
            params.lambda >= lam_q * (1.0 - 1e-12)
                ? "supercritical_family: lambda = lambda_q is the untested boundary"
                : "supercritical_family: lambda below lambda_q is subcritical");
    const double t = scales ? scales->t_eps : supercritical_default_t(eps);
    const double r_eps = scales ? scales->r_eps : supercritical_default_r(eps);
    require(2.0 * r_eps < delta0, errc::scale, "supercritical_family: cutoff exceeds the chart");
    out.t_eps = t;
    out.r_eps = r_eps;
    auto u0 = lambda_q_torus(params.q, n).minimizer;
    auto bump = log_bump(p, eps, delta0, n);
    w = TorusField::sample(n, [&](double x, double y) {
      const double r = torus_distance(x, y, p[0], p[1]);
      double eta = 0.0;
      if (r <= r_eps)
        eta = 1.0;
      else if (r < 2.0 * r_eps) {
        const double s = (2.0 * r_eps - r) / r_eps;
        eta = s * s * (3.0 - 2.0 * s);
      }
      const std::size_t i = static_cast<std::size_t>(std::llround(x * n)) % n;
      const std::size_t j = static_cast<std::size_t>(std::llround(y * n)) % n;
      return bump(i, j) * eta + t * u0(i, j);
    });
  }

  w.subtract_mean();
  const double e = w.dirichlet_energy();
  require(e > 0.0, errc::degenerate_input, "supercritical_family: degenerate field");
  for (double& v : w.values()) v /= std::sqrt(e);
  out.u = std::move(w);
  auto I = surface_functional(out.u, params);
  out.value = I.value;
  out.log_value = I.log_value;
  out.saturated = I.saturated;
  out.growth_scale = (out.t_eps > 0.0 ? out.t_eps * out.t_eps : 1.0) * std::abs(std::log(eps));
  return out;
}

}  // namespace smt
