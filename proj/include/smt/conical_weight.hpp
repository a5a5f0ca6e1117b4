#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "smt/errors.hpp"

namespace smt {

inline double torus_min_image(double d) { return d - std::round(d); }

inline double torus_distance(double x0, double y0, double x1, double y1) {
  const double dx = torus_min_image(x1 - x0);
  const double dy = torus_min_image(y1 - y0);
  return std::sqrt(dx * dx + dy * dy);
}

struct SingularPoint {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;  // conical order, > -1
};

// Weight h(x) = V(x) * prod_i d(x, p_i)^{2 alpha_i} with a smooth positive
// factor V.  Distances are toroidal on the flat unit torus; the disk
// functionals use the single-point-at-origin instance, where the distance is
// just |x|.
class ConicalWeight {
 public:
  ConicalWeight() = default;

  ConicalWeight(std::vector<SingularPoint> points, std::function<double(double, double)> V = {})
      : points_(std::move(points)), V_(std::move(V)) {
    for (const auto& p : points_)
      require(p.alpha > -1.0, errc::invalid_order, "ConicalWeight: orders must exceed -1");
  }

  const std::vector<SingularPoint>& points() const { return points_; }
  bool has_smooth_factor() const { return static_cast<bool>(V_); }

  double alpha_bar() const {
    double a = 0.0;
    for (const auto& p : points_) a = std::min(a, p.alpha);
    return a;
  }

  double beta_bar() const { return 4.0 * M_PI * (1.0 + alpha_bar()); }

  double V_at(double x, double y) const { return V_ ? V_(x, y) : 1.0; }

  // Full weight at a regular point (diverges/vanishes at the p_i).
  double h_torus(double x, double y) const {
    double h = V_at(x, y);
    for (const auto& p : points_)
      h *= std::pow(torus_distance(x, y, p.x, p.y), 2.0 * p.alpha);
    return h;
  }

  // K(p) = lim h / d(., p)^{2 alpha(p)}: the weight with the local singular
  // factor removed.  At regular points this is just h.
  double K_torus(double x, double y) const {
    double k = V_at(x, y);
    for (const auto& p : points_) {
      const double d = torus_distance(x, y, p.x, p.y);
      if (d > 1e-12) k *= std::pow(d, 2.0 * p.alpha);
    }
    return k;
  }

  // Order alpha(x): the conical order at singular points, zero elsewhere.
  double order_at(double x, double y) const {
    for (const auto& p : points_)
      if (torus_distance(x, y, p.x, p.y) <= 1e-12) return p.alpha;
    return 0.0;
  }

  // Disk mode: at most one singular point, located at the origin.
  void require_disk_mode() const {
    require(points_.size() <= 1, errc::unsupported,
            "disk mode supports a single singular point");
    if (!points_.empty())
      require(points_[0].x == 0.0 && points_[0].y == 0.0, errc::unsupported,
              "disk mode requires the singular point at the origin");
  }

  double disk_order() const {
    require_disk_mode();
    return points_.empty() ? 0.0 : points_[0].alpha;
  }

  // Smooth factor along a radius (disk weights are radial).
  double V_radial(double r) const { return V_at(r, 0.0); }

 private:
  std::vector<SingularPoint> points_;
  std::function<double(double, double)> V_;
};

struct FunctionalParams {
  double beta = 4.0 * M_PI;  // exponent coefficient, >= 0
  double lambda = 0.0;       // coupling of the q-norm improvement, >= 0
  double q = 2.0;            // norm index, > 1
  ConicalWeight weight;

  void check() const {
    require(beta >= 0.0, errc::invalid_input, "FunctionalParams: beta must be nonnegative");
    require(lambda >= 0.0, errc::invalid_input, "FunctionalParams: lambda must be nonnegative");
    require(q > 1.0, errc::invalid_input, "FunctionalParams: q must exceed 1");
  }
};

}  // namespace smt
