#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smt/errors.hpp"

namespace smt {

// Geometric grid 0 = r_0 < eps_min = r_1 < ... < r_{cells} = 1, equally
// spaced in log r between eps_min and 1.  All radial profiles of interest
// vary on log-radius scales, so this is the default node layout.
inline std::vector<double> geometric_grid(std::size_t cells, double eps_min = 1e-8) {
  require(cells >= 8, errc::invalid_input, "geometric_grid: need at least 8 cells");
  require(eps_min > 0.0 && eps_min < 0.5, errc::invalid_input, "geometric_grid: eps_min out of range");
  std::vector<double> nodes(cells + 1);
  nodes[0] = 0.0;
  const double lo = std::log(eps_min);
  const std::size_t m = cells - 1;  // log-spaced intervals between eps_min and 1
  for (std::size_t i = 0; i <= m; ++i)
    nodes[i + 1] = std::exp(lo * (1.0 - static_cast<double>(i) / static_cast<double>(m)));
  nodes[cells] = 1.0;
  return nodes;
}

// Inserts extra radii into a node list, dropping near-duplicates.
inline std::vector<double> insert_nodes(std::vector<double> nodes, std::span<const double> extra) {
  for (double r : extra) {
    if (r <= 0.0 || r >= 1.0) continue;
    nodes.push_back(r);
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> out;
  out.reserve(nodes.size());
  for (double r : nodes) {
    if (!out.empty() && r - out.back() < 1e-13 * std::max(1.0, r)) continue;
    out.push_back(r);
  }
  return out;
}

// A radially symmetric member of H^1_0 of the unit disk, sampled at nodes
// 0 = r_0 < r_1 < ... < r_N = 1.  The interpolation rule is piecewise linear
// in log r on (0, 1] and constant (= u(r_1)) on [0, r_1]; the innermost cell
// therefore carries no Dirichlet energy.
class RadialFunction {
 public:
  RadialFunction(std::vector<double> nodes, std::vector<double> values)
      : nodes_(std::move(nodes)), values_(std::move(values)) {
    validate();
    log_nodes_.resize(nodes_.size());
    log_nodes_[0] = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < nodes_.size(); ++i) log_nodes_[i] = std::log(nodes_[i]);
  }

  template <class F>
  static RadialFunction sample(std::vector<double> nodes, F&& f) {
    std::vector<double> values(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
    return RadialFunction(std::move(nodes), std::move(values));
  }

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& log_nodes() const { return log_nodes_; }
  std::size_t cells() const { return nodes_.size() - 1; }

  double operator()(double r) const {
    if (r <= nodes_[1]) return values_[1];
    if (r >= 1.0) return values_.back();
    const std::size_t c = cell_of(r);
    const double t = std::log(r);
    return values_[c] + slope(c) * (t - log_nodes_[c]);
  }

  // Index of the cell [r_c, r_{c+1}) containing r.
  std::size_t cell_of(double r) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    std::size_t c = static_cast<std::size_t>(it - nodes_.begin());
    if (c == 0) return 0;
    if (c > nodes_.size() - 1) return nodes_.size() - 2;
    return c - 1;
  }

  // du/d(log r) on cell c; zero on the constant innermost cell.
  double slope(std::size_t c) const {
    if (c == 0) return 0.0;
    return (values_[c + 1] - values_[c]) / (log_nodes_[c + 1] - log_nodes_[c]);
  }

  // 2*pi * integral of u'(r)^2 r dr over the disk of radius `radius`; exact
  // for the interpolant (each cell contributes (du)^2 / d(log r)).
  double dirichlet_energy(double radius = 1.0) const {
    double e = 0.0;
    for (std::size_t c = 1; c + 1 < nodes_.size(); ++c) {
      if (nodes_[c] >= radius) break;
      const double dt_full = log_nodes_[c + 1] - log_nodes_[c];
      const double du = values_[c + 1] - values_[c];
      if (nodes_[c + 1] <= radius) {
        e += du * du / dt_full;
      } else {
        const double dt_part = std::log(radius) - log_nodes_[c];
        const double s = du / dt_full;
        e += s * s * dt_part;
        break;
      }
    }
    return 2.0 * M_PI * e;
  }

  bool decreasing(double tol = 1e-12) const {
    for (std::size_t i = 1; i + 1 < values_.size(); ++i)
      if (values_[i + 1] > values_[i] + tol) return false;
    return true;
  }

  // v(r) = u(r / delta) for r <= delta, 0 outside: the profile compressed
  // into the disk of radius delta (support nodes are rescaled exactly).
  RadialFunction compressed(double delta) const {
    require(delta > 0.0 && delta < 1.0, errc::invalid_input, "compressed: delta must be in (0,1)");
    std::vector<double> n, v;
    n.reserve(nodes_.size() + 2);
    v.reserve(nodes_.size() + 2);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      n.push_back(nodes_[i] * delta);
      v.push_back(values_[i]);
    }
    n.push_back(1.0);
    v.push_back(0.0);
    return RadialFunction(std::move(n), std::move(v));
  }

 private:
  void validate() {
    require(nodes_.size() == values_.size(), errc::invalid_input, "RadialFunction: size mismatch");
    require(nodes_.size() >= 9, errc::invalid_input, "RadialFunction: need at least 8 cells");
    require(nodes_.front() == 0.0, errc::invalid_input, "RadialFunction: first node must be 0");
    require(std::abs(nodes_.back() - 1.0) < 1e-12, errc::invalid_input,
            "RadialFunction: last node must be 1");
    nodes_.back() = 1.0;
    for (std::size_t i = 1; i < nodes_.size(); ++i)
      require(nodes_[i] > nodes_[i - 1], errc::invalid_input,
              "RadialFunction: nodes must be strictly increasing");
    for (double v : values_)
      require(std::isfinite(v), errc::invalid_input, "RadialFunction: non-finite value");
    require(std::abs(values_.back()) < 1e-8, errc::invalid_input,
            "RadialFunction: boundary value must vanish (H^1_0)");
    values_.back() = 0.0;
    values_.front() = values_[1];  // interpolant is constant on [0, r_1]
  }

  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> log_nodes_;
};

}  // namespace smt
