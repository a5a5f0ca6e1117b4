#pragma once

#include <array>
#include <cmath>
#include <limits>

namespace smt {

// 8-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre8 {
  static constexpr std::array<double, 8> nodes = {
      -0.9602898564975362316835609, -0.7966664774136267395915539,
      -0.5255324099163289858177390, -0.1834346424956498049394761,
      0.1834346424956498049394761,  0.5255324099163289858177390,
      0.7966664774136267395915539,  0.9602898564975362316835609};
  static constexpr std::array<double, 8> weights = {
      0.1012285362903762591525314, 0.2223810344533744705443560,
      0.3137066458778872873379622, 0.3626837833783619829651504,
      0.3626837833783619829651504, 0.3137066458778872873379622,
      0.2223810344533744705443560, 0.1012285362903762591525314};
};

// Streaming log-sum-exp of positive contributions given by their logarithms.
class LogSumExp {
 public:
  void add(double log_term) {
    if (std::isinf(log_term) && log_term < 0) return;
    if (max_ == -std::numeric_limits<double>::infinity()) {
      max_ = log_term;
      sum_ = 1.0;
    } else if (log_term <= max_) {
      sum_ += std::exp(log_term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }

  bool empty() const { return max_ == -std::numeric_limits<double>::infinity(); }

  double log() const {
    if (empty()) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

// Value of an exponential-type integral accumulated in log space.  When the
// linear-scale value exceeds the double range, `value` is +inf and the
// saturation flag is set; `log_value` stays finite and usable.
struct ExpIntegral {
  double value = 0.0;
  double log_value = -std::numeric_limits<double>::infinity();
  bool saturated = false;

  static ExpIntegral from_log(double log_value) {
    ExpIntegral r;
    r.log_value = log_value;
    if (log_value > 700.0) {
      r.value = std::numeric_limits<double>::infinity();
      r.saturated = true;
    } else {
      r.value = std::exp(log_value);
    }
    return r;
  }
};

}  // namespace smt
