#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "smt/conical_weight.hpp"
#include "smt/errors.hpp"
#include "smt/torus_fft.hpp"
#include "smt/torus_field.hpp"
#include "smt/torus_solver.hpp"

namespace smt {

// Modified Green function of the torus with its extracted Robin constant:
//   -Lap G = delta_p + lambda ||G||_q^{2-q} |G|^{q-2} G - mean correction,
//   mean(G) = 0,
// and near p:  G(x) = -(1/2pi) log|x - p| + A + O(|x-p|^2).
struct GreenData {
  TorusField field;
  std::array<double, 2> p;
  double lambda = 0.0;
  double q = 2.0;
  double robin = 0.0;
  double norm_q = 0.0;
  double fit_r1 = 0.0;
  double fit_r2 = 0.0;
  double fit_residual = 0.0;
};

struct GreenOptions {
  double fit_r1_cells = 4.0;  // annulus radii in grid cells
  double fit_r2_cells = 8.0;
  double fixed_point_tol = 1e-10;
  std::size_t max_fixed_point = 500;
};

// Least-squares fit of G(x) + (1/2pi) log|x-p| over the grid points of the
// annulus r1 <= |x-p| <= r2; returns the constant and the RMS fit residual.
inline std::pair<double, double> robin_constant(const TorusField& G, std::array<double, 2> p,
                                                double r1, double r2) {
  const std::size_t n = G.n();
  const double h = G.h();
  require(r1 >= 4.0 * h - 1e-12, errc::geometry, "robin_constant: annulus starts below 4h");
  require(r2 > r1 && r2 < 0.5, errc::geometry, "robin_constant: bad annulus");
  std::vector<double> samples;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = torus_distance(G.x(i), G.y(j), p[0], p[1]);
      if (d >= r1 && d <= r2) samples.push_back(G(i, j) + std::log(d) / (2.0 * M_PI));
    }
  }
  require(samples.size() >= 8, errc::geometry, "robin_constant: too few annulus points");
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double rms = 0.0;
  for (double s : samples) rms += (s - mean) * (s - mean);
  rms = std::sqrt(rms / static_cast<double>(samples.size()));
  return {mean, rms};
}

inline GreenData green_function(std::array<double, 2> p, double lambda, double q, std::size_t n,
                                GreenOptions opts = {}) {
  require(q > 1.0, errc::invalid_input, "green_function: q must exceed 1");
  require(lambda >= 0.0, errc::invalid_input, "green_function: lambda must be nonnegative");
  SpectralPoisson poisson(n);
  const double nn = static_cast<double>(n);
  const std::size_t ip = static_cast<std::size_t>(std::llround(p[0] * nn)) % n;
  const std::size_t jp = static_cast<std::size_t>(std::llround(p[1] * nn)) % n;
  require(std::abs(p[0] * nn - std::llround(p[0] * nn)) < 1e-9 &&
              std::abs(p[1] * nn - std::llround(p[1] * nn)) < 1e-9,
          errc::geometry, "green_function: source must be a grid point");

  // Discrete Dirac minus its mean: 1/h^2 at the source, -1 elsewhere is
  // folded in by subtracting the exact mean 1.
  TorusField dirac(n);
  dirac(ip, jp) = nn * nn;
  for (double& v : dirac.values()) v -= 1.0;

  TorusField G(n);
  if (lambda == 0.0) {
    G = poisson.solve_mean_zero(dirac);
  } else if (q == 2.0) {
    require(lambda < poisson.lowest_symbol(), errc::regime,
            "green_function: lambda must be below lambda_q");
    G = poisson.solve_helmholtz(dirac, lambda);
  } else {
    const double lam_q = lambda_q_torus(q, n).value;
    require(lambda < lam_q * (1.0 - 1e-9), errc::regime,
            "green_function: lambda must be below lambda_q");
    G = poisson.solve_mean_zero(dirac);
    bool done = false;
    for (std::size_t it = 0; it < opts.max_fixed_point && !done; ++it) {
      const double nq = G.lp_norm(q);
      TorusField rhs = dirac;
      const double coeff = lambda * std::pow(nq, 2.0 - q);
      for (std::size_t k = 0; k < rhs.size(); ++k) {
        const double g = G.values()[k];
        rhs.values()[k] += coeff * std::pow(std::abs(g), q - 1.0) * (g >= 0.0 ? 1.0 : -1.0);
      }
      TorusField next = poisson.solve_mean_zero(rhs);
      double diff = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < next.size(); ++k) {
        next.values()[k] = 0.5 * G.values()[k] + 0.5 * next.values()[k];
        diff = std::max(diff, std::abs(next.values()[k] - G.values()[k]));
        scale = std::max(scale, std::abs(next.values()[k]));
      }
      done = diff <= opts.fixed_point_tol * std::max(1.0, scale);
      G = std::move(next);
    }
    require(done, errc::convergence, "green_function: fixed point did not converge");
  }

  GreenData data{std::move(G), p, lambda, q, 0.0, 0.0, 0.0, 0.0, 0.0};
  data.fit_r1 = opts.fit_r1_cells / nn;
  data.fit_r2 = opts.fit_r2_cells / nn;
  auto [A, rms] = robin_constant(data.field, p, data.fit_r1, data.fit_r2);
  data.robin = A;
  data.fit_residual = rms;
  data.norm_q = data.field.lp_norm(q);
  return data;
}

// lhs: grid quadrature of the Dirichlet integral outside the delta-disk at p
//      (forward-difference contributions weighted by the fraction of the edge
//      outside the disk);
// rhs: -(1/2pi) log delta + A + lambda ||G||_q^2.
inline std::pair<double, double> annulus_energy_check(const GreenData& green, double delta) {
  const auto& G = green.field;
  const std::size_t n = G.n();
  const double h = G.h();
  require(delta > 8.0 * h && delta < 0.25, errc::geometry,
          "annulus_energy_check: delta out of range");
  auto outside_fraction = [&](double cx, double cy, bool xdir) {
    int out = 0;
    for (int s = 0; s < 4; ++s) {
      const double t = (s + 0.5) / 4.0 - 0.5;
      const double px = cx + (xdir ? t * h : 0.0);
      const double py = cy + (xdir ? 0.0 : t * h);
      if (torus_distance(px, py, green.p[0], green.p[1]) >= delta) ++out;
    }
    return out / 4.0;
  };
  double lhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ipp = (i + 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jpp = (j + 1) % n;
      const double dx = G(ipp, j) - G(i, j);
      const double dy = G(i, jpp) - G(i, j);
      const double fx = outside_fraction(G.x(i) + 0.5 * h, G.y(j), true);
      const double fy = outside_fraction(G.x(i), G.y(j) + 0.5 * h, false);
      lhs += fx * dx * dx + fy * dy * dy;
    }
  }
  const double rhs = -std::log(delta) / (2.0 * M_PI) + green.robin +
                     green.lambda * green.norm_q * green.norm_q;
  return {lhs, rhs};
}

}  // namespace smt
