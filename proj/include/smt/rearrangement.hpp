#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "smt/errors.hpp"
#include "smt/polar_grid.hpp"
#include "smt/quadrature.hpp"
#include "smt/radial_function.hpp"

namespace smt {

// Radially decreasing piecewise-constant profile on the unit disk, the value
// v_k held on the open ring (rho_{k-1}, rho_k].  This is the natural output
// type of cell-level symmetric decreasing rearrangement: measure bookkeeping
// is exact here, whereas the log-linear RadialFunction model cannot represent
// steps.  `sampled` converts to a RadialFunction when a Dirichlet energy is
// needed.
class StepProfile {
 public:
  StepProfile(std::vector<double> radii, std::vector<double> values)
      : radii_(std::move(radii)), values_(std::move(values)) {
    require(radii_.size() == values_.size(), errc::invalid_input, "StepProfile: size mismatch");
    require(!radii_.empty() && std::abs(radii_.back() - 1.0) < 1e-12, errc::invalid_input,
            "StepProfile: rings must end at radius 1");
    for (std::size_t k = 1; k < values_.size(); ++k)
      require(values_[k] <= values_[k - 1] + 1e-12, errc::invalid_input,
              "StepProfile: values must be decreasing");
  }

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& values() const { return values_; }

  double operator()(double r) const {
    auto it = std::lower_bound(radii_.begin(), radii_.end(), r);
    if (it == radii_.end()) return values_.back();
    return values_[static_cast<std::size_t>(it - radii_.begin())];
  }

  // Measure of the super-level set {u > t}; exact ring sums.
  double level_measure(double t) const {
    double prev = 0.0, m = 0.0;
    for (std::size_t k = 0; k < radii_.size(); ++k) {
      if (values_[k] > t) m += M_PI * (radii_[k] * radii_[k] - prev * prev);
      prev = radii_[k];
    }
    return m;
  }

  double lp_norm(double p) const {
    double prev = 0.0, s = 0.0;
    for (std::size_t k = 0; k < radii_.size(); ++k) {
      s += std::pow(std::abs(values_[k]), p) * M_PI * (radii_[k] * radii_[k] - prev * prev);
      prev = radii_[k];
    }
    return std::pow(s, 1.0 / p);
  }

  // integral of |x|^{2 alpha} e^{u} dx, exact per ring, log-space accumulated.
  ExpIntegral weighted_exp_integral(double alpha) const {
    require(alpha > -1.0, errc::invalid_order, "StepProfile: alpha must exceed -1");
    const double p = 2.0 * (1.0 + alpha);
    LogSumExp acc;
    double prev = 0.0;
    for (std::size_t k = 0; k < radii_.size(); ++k) {
      const double ring = std::pow(radii_[k], p) - std::pow(prev, p);
      if (ring > 0.0)
        acc.add(values_[k] + std::log(M_PI / (1.0 + alpha)) + std::log(ring));
      prev = radii_[k];
    }
    return ExpIntegral::from_log(acc.log());
  }

  // Piecewise log-linear sampling onto a radius grid; requires a vanishing
  // outermost value (inherited from the zero boundary ring of the input).
  RadialFunction sampled(std::vector<double> nodes) const {
    return RadialFunction::sample(std::move(nodes), [&](double r) { return (*this)(r); });
  }

 private:
  std::vector<double> radii_;
  std::vector<double> values_;
};

// Core of the rearrangement: sort cell values in decreasing order (ties broken
// by cell index, so the output is deterministic) and invert cumulative area.
inline StepProfile decreasing_rearrangement(const PolarGridFunction& u) {
  u.check_valid();
  const std::size_t n = u.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& vals = u.values();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  std::vector<double> radii(n), values(n);
  double area = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t cell = order[k];
    area += u.cell_area(cell / u.n_theta());
    radii[k] = std::sqrt(area / M_PI);
    values[k] = vals[cell];
  }
  radii.back() = 1.0;
  return StepProfile(std::move(radii), std::move(values));
}

// Symmetric decreasing rearrangement of a nonnegative cell function.
inline StepProfile rearrange(const PolarGridFunction& u) {
  for (double v : u.values())
    require(v >= 0.0, errc::invalid_input, "rearrange: values must be nonnegative");
  return decreasing_rearrangement(u);
}

// lhs = integral u* v* (exact on the merged ring partition),
// rhs = integral u v (cell sums).  For nonnegative inputs lhs >= rhs.
inline std::pair<double, double> hardy_littlewood_check(const PolarGridFunction& u,
                                                        const PolarGridFunction& v) {
  require(u.n_r() == v.n_r() && u.n_theta() == v.n_theta(), errc::invalid_input,
          "hardy_littlewood_check: mismatched grids");
  for (std::size_t i = 0; i < u.size(); ++i) {
    require(u.values()[i] >= 0.0 && v.values()[i] >= 0.0, errc::invalid_input,
            "hardy_littlewood_check: values must be nonnegative");
  }
  auto us = rearrange(u);
  auto vs = rearrange(v);

  double lhs = 0.0, prev = 0.0;
  std::size_t a = 0, b = 0;
  while (a < us.radii().size() && b < vs.radii().size()) {
    const double r = std::min(us.radii()[a], vs.radii()[b]);
    lhs += us.values()[a] * vs.values()[b] * M_PI * (r * r - prev * prev);
    prev = r;
    if (us.radii()[a] <= r) ++a;
    if (b < vs.radii().size() && vs.radii()[b] <= r) ++b;
  }

  double rhs = 0.0;
  for (std::size_t i = 0; i < u.n_r(); ++i) {
    const double area = u.cell_area(i);
    for (std::size_t j = 0; j < u.n_theta(); ++j) rhs += area * u(i, j) * v(i, j);
  }
  return {lhs, rhs};
}

// lhs = integral |x|^{2 alpha} e^{u*}, rhs = integral |x|^{2 alpha} e^{u};
// the rearranged side dominates for alpha <= 0 (and fails for alpha > 0,
// which is rejected).
inline std::pair<double, double> singular_exp_monotonicity_check(const PolarGridFunction& u,
                                                                 double alpha) {
  require(alpha > -1.0 && alpha <= 0.0, errc::unsupported,
          "singular_exp_monotonicity_check: alpha must be in (-1, 0]");
  auto us = decreasing_rearrangement(u);
  const double lhs = us.weighted_exp_integral(alpha).value;
  double rhs = 0.0;
  for (std::size_t i = 0; i < u.n_r(); ++i) {
    const double w = u.cell_weight(i, alpha);
    for (std::size_t j = 0; j < u.n_theta(); ++j) rhs += w * std::exp(u(i, j));
  }
  return {lhs, rhs};
}

}  // namespace smt
