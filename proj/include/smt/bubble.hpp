#pragma once

#include <cmath>
#include <vector>

#include "smt/errors.hpp"
#include "smt/radial_integrals.hpp"

namespace smt {

// Entire radial solutions of the Liouville-type equations that appear as
// blow-up limit profiles.
//
//  * liouville(alpha, alpha_bar, V0):
//      eta(r) = -(1/bb) log(1 + lam r^{2(1+alpha)}),  bb = 4 pi (1+alpha_bar),
//      lam = bb V0 / (4 (1+alpha)^2), normalized so eta(0) = 0.  Satisfies
//      -Lap eta = V0 |x|^{2 alpha} e^{2 bb eta} with total mass
//      (1+alpha)/(1+alpha_bar).
//  * stereographic():
//      u0(r) = log(4 / (1+r^2)^2), the conformal factor of the stereographic
//      chart, satisfying -Lap u0 = 2 e^{u0}.
class BubbleProfile {
 public:
  static BubbleProfile liouville(double alpha, double alpha_bar, double v0) {
    require(alpha > -1.0, errc::invalid_order, "BubbleProfile: alpha must exceed -1");
    require(alpha_bar > -1.0 && alpha_bar <= 0.0, errc::invalid_order,
            "BubbleProfile: alpha_bar must be in (-1, 0]");
    require(v0 > 0.0, errc::invalid_input, "BubbleProfile: amplitude must be positive");
    BubbleProfile b;
    b.alpha_ = alpha;
    b.beta_bar_ = 4.0 * M_PI * (1.0 + alpha_bar);
    b.v0_ = v0;
    b.lambda_ = b.beta_bar_ * v0 / (4.0 * (1.0 + alpha) * (1.0 + alpha));
    b.stereographic_ = false;
    return b;
  }

  static BubbleProfile stereographic() {
    BubbleProfile b;
    b.stereographic_ = true;
    return b;
  }

  bool is_stereographic() const { return stereographic_; }
  double order() const { return alpha_; }
  double amplitude() const { return v0_; }
  double beta_bar() const { return beta_bar_; }

  double operator()(double r) const {
    if (stereographic_) return std::log(4.0) - 2.0 * std::log1p(r * r);
    return -std::log1p(lambda_ * std::pow(r, 2.0 * (1.0 + alpha_))) / beta_bar_;
  }

  double slope(double r) const {
    if (stereographic_) return -4.0 * r / (1.0 + r * r);
    const double b = 2.0 * (1.0 + alpha_);
    const double y = lambda_ * std::pow(r, b);
    if (r == 0.0) return 0.0;
    return -(b / beta_bar_) * y / (r * (1.0 + y));
  }

  // Right-hand side of the defining equation at radius r:
  // V0 r^{2 alpha} e^{2 bb eta} in the Liouville case, 2 e^{u0} otherwise.
  double equation_rhs(double r) const {
    if (stereographic_) return 2.0 * std::exp((*this)(r));
    const double y = lambda_ * std::pow(r, 2.0 * (1.0 + alpha_));
    return v0_ * std::pow(r, 2.0 * alpha_) / ((1.0 + y) * (1.0 + y));
  }

  // Quadrature of the mass integral over D_R.
  double mass(double R, std::size_t cells = 1024) const {
    require(!stereographic_, errc::unsupported, "mass: Liouville profile only");
    auto nodes = scaled_grid(R, cells);
    const double b = 2.0 * (1.0 + alpha_);
    return radial_integral(nodes, alpha_, 0.0, R, [&](double r) {
      const double y = lambda_ * std::pow(r, b);
      return v0_ / ((1.0 + y) * (1.0 + y));
    });
  }

  // Closed-form tail of the mass integral over |x| > R.
  double mass_tail(double R) const {
    require(!stereographic_, errc::unsupported, "mass_tail: Liouville profile only");
    const double b = 2.0 * (1.0 + alpha_);
    return M_PI * v0_ / ((1.0 + alpha_) * lambda_) / (1.0 + lambda_ * std::pow(R, b));
  }

  double total_mass() const {
    require(!stereographic_, errc::unsupported, "total_mass: Liouville profile only");
    return M_PI * v0_ / ((1.0 + alpha_) * lambda_);
  }

  // Quadrature of the Dirichlet integral over D_R.
  double gradient_energy(double R, std::size_t cells = 1024) const {
    auto nodes = scaled_grid(R, cells);
    return radial_integral(nodes, 0.0, 0.0, R, [&](double r) {
      const double s = slope(r);
      return s * s;
    });
  }

  // Quadrature of integral of u * e^{u} over D_R (stereographic mode).
  double self_weighted_integral(double R, std::size_t cells = 2048) const {
    require(stereographic_, errc::unsupported, "self_weighted_integral: stereographic only");
    auto nodes = scaled_grid(R, cells);
    return radial_integral(nodes, 0.0, 0.0, R,
                           [&](double r) { return (*this)(r)*std::exp((*this)(r)); });
  }

  // Closed-form tail of integral of u0 e^{u0} over |x| > R.
  double self_weighted_tail(double R) const {
    require(stereographic_, errc::unsupported, "self_weighted_tail: stereographic only");
    const double Z = 1.0 + R * R;
    // integral over the plane equals 4 pi (log 4 - 2); the truncated part is
    // 4 pi [log4 (1 - 1/Z) - 2 + 2 (1 + log Z)/Z].
    const double full = 4.0 * M_PI * (std::log(4.0) - 2.0);
    const double trunc =
        4.0 * M_PI * (std::log(4.0) * (1.0 - 1.0 / Z) - 2.0 + 2.0 * (1.0 + std::log(Z)) / Z);
    return full - trunc;
  }

 private:
  static std::vector<double> scaled_grid(double R, std::size_t cells) {
    require(R > 0.0, errc::invalid_input, "BubbleProfile: radius must be positive");
    auto nodes = geometric_grid(cells, 1e-10);
    for (double& r : nodes) r *= R;
    return nodes;
  }

  double alpha_ = 0.0;
  double beta_bar_ = 4.0 * M_PI;
  double v0_ = 1.0;
  double lambda_ = 0.0;
  bool stereographic_ = false;
};

inline BubbleProfile bubble_profile(double alpha, double alpha_bar, double v0) {
  return BubbleProfile::liouville(alpha, alpha_bar, v0);
}

}  // namespace smt
