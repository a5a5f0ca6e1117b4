#pragma once

#include <cmath>
#include <utility>

// Independent lattice-sum oracle for the Green function of the flat unit
// torus, -Lap G = delta_0 - 1 with zero mean.  Separating one coordinate
// gives the 1D-resummed series (exponentially convergent away from y = 0):
//
//   G(x,y) = y^2/2 - |y|/2 + 1/12
//          + sum_{m>=1} cos(2 pi m x) (e^{-2 pi m |y|} + e^{-2 pi m (1-|y|)})
//                        / (2 pi m (1 - e^{-2 pi m}))
//
// and the Robin constant (the constant term of G + log r / (2 pi) at 0):
//
//   A = 1/12 - log(2 pi)/(2 pi) + (1/pi) sum_{m>=1} e^{-2 pi m}
//                                          / (m (1 - e^{-2 pi m})).
namespace oracle {

inline double torus_green(double x, double y) {
  x -= std::round(x);
  y -= std::round(y);
  if (std::abs(y) < std::abs(x)) std::swap(x, y);
  const double ay = std::abs(y);
  double g = 0.5 * y * y - 0.5 * ay + 1.0 / 12.0;
  for (int m = 1; m < 200000; ++m) {
    const double decay = std::exp(-2.0 * M_PI * m * ay) + std::exp(-2.0 * M_PI * m * (1.0 - ay));
    const double term =
        std::cos(2.0 * M_PI * m * x) * decay / (2.0 * M_PI * m * (1.0 - std::exp(-2.0 * M_PI * m)));
    g += term;
    if (decay / m < 1e-17) break;
  }
  return g;
}

inline double torus_robin_constant() {
  double s = 0.0;
  for (int m = 1; m < 64; ++m) {
    const double q = std::exp(-2.0 * M_PI * m);
    s += q / (m * (1.0 - q));
  }
  return 1.0 / 12.0 - std::log(2.0 * M_PI) / (2.0 * M_PI) + s / M_PI;
}

}  // namespace oracle
