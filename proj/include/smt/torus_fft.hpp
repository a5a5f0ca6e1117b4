#pragma once

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <vector>

#include "smt/errors.hpp"
#include "smt/torus_field.hpp"

namespace smt {

namespace detail {
inline std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

// Spectral inverse of the periodic 5-point Laplacian, exact for the discrete
// operator.  One instance owns its FFTW buffers and plans; instances are not
// thread-safe, create one per thread.
class SpectralPoisson {
 public:
  explicit SpectralPoisson(std::size_t n) : n_(n) {
    require(n >= 8 && (n & (n - 1)) == 0, errc::invalid_input,
            "SpectralPoisson: n must be a power of two");
    real_ = fftw_alloc_real(n_ * n_);
    spec_ = fftw_alloc_complex(n_ * (n_ / 2 + 1));
    {
      std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
      fwd_ = fftw_plan_dft_r2c_2d(static_cast<int>(n_), static_cast<int>(n_), real_, spec_,
                                  FFTW_ESTIMATE);
      bwd_ = fftw_plan_dft_c2r_2d(static_cast<int>(n_), static_cast<int>(n_), spec_, real_,
                                  FFTW_ESTIMATE);
    }
    symbol_.resize(n_ * (n_ / 2 + 1));
    const double nn = static_cast<double>(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const double sk = std::sin(M_PI * static_cast<double>(k) / nn);
      for (std::size_t l = 0; l <= n_ / 2; ++l) {
        const double sl = std::sin(M_PI * static_cast<double>(l) / nn);
        symbol_[k * (n_ / 2 + 1) + l] = 4.0 * nn * nn * (sk * sk + sl * sl);
      }
    }
  }

  ~SpectralPoisson() {
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_free(real_);
    fftw_free(spec_);
  }

  SpectralPoisson(const SpectralPoisson&) = delete;
  SpectralPoisson& operator=(const SpectralPoisson&) = delete;

  std::size_t n() const { return n_; }

  // Smallest nonzero eigenvalue of -Lap_h: the discrete symbol at the first
  // Fourier mode, 4 n^2 sin^2(pi/n) -> 4 pi^2.
  double lowest_symbol() const {
    const double s = std::sin(M_PI / static_cast<double>(n_));
    return 4.0 * static_cast<double>(n_ * n_) * s * s;
  }

  // Mean-zero solution of -Lap_h u = f - mean(f).
  TorusField solve_mean_zero(const TorusField& f) const { return solve_shifted(f, 0.0); }

  // Mean-zero solution of (-Lap_h - lambda) u = f - mean(f), lambda below the
  // lowest symbol.
  TorusField solve_helmholtz(const TorusField& f, double lambda) const {
    require(lambda < lowest_symbol(), errc::regime,
            "SpectralPoisson: lambda must lie below the first eigenvalue");
    return solve_shifted(f, lambda);
  }

  // Dual seminorm sqrt(rho^T L^+ rho) of a residual against the stencil form
  // E(u) = u . (L u); the mean component is projected out.
  double dual_norm(const TorusField& rho) const {
    require(rho.n() == n_, errc::invalid_input, "SpectralPoisson: size mismatch");
    for (std::size_t k = 0; k < n_ * n_; ++k) real_[k] = rho.values()[k];
    fftw_execute(fwd_);
    const double h2 = 1.0 / static_cast<double>(n_ * n_);
    double acc = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t l = 0; l <= n_ / 2; ++l) {
        if (k == 0 && l == 0) continue;
        const double lkl = symbol_[k * (n_ / 2 + 1) + l] * h2;  // eigenvalue of L
        const auto& c = spec_[k * (n_ / 2 + 1) + l];
        const double mag2 = c[0] * c[0] + c[1] * c[1];
        const double mult = (l == 0 || l == n_ / 2) ? 1.0 : 2.0;
        acc += mult * mag2 / lkl;
      }
    }
    // Parseval: rho^T L^+ rho = (1/n^2) sum |hat rho|^2 / l(k)
    return std::sqrt(acc) / static_cast<double>(n_);
  }

 private:
  TorusField solve_shifted(const TorusField& f, double lambda) const {
    require(f.n() == n_, errc::invalid_input, "SpectralPoisson: size mismatch");
    for (std::size_t k = 0; k < n_ * n_; ++k) real_[k] = f.values()[k];
    fftw_execute(fwd_);
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t l = 0; l <= n_ / 2; ++l) {
        auto& c = spec_[k * (n_ / 2 + 1) + l];
        if (k == 0 && l == 0) {
          c[0] = c[1] = 0.0;
          continue;
        }
        const double d = symbol_[k * (n_ / 2 + 1) + l] - lambda;
        c[0] /= d;
        c[1] /= d;
      }
    }
    fftw_execute(bwd_);
    TorusField u(n_);
    const double scale = 1.0 / static_cast<double>(n_ * n_);
    for (std::size_t k = 0; k < n_ * n_; ++k) u.values()[k] = real_[k] * scale;
    return u;
  }

  std::size_t n_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan fwd_;
  fftw_plan bwd_;
  std::vector<double> symbol_;
};

}  // namespace smt
