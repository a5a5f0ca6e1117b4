#pragma once

#include <stdexcept>
#include <string>

namespace smt {

enum class errc {
  invalid_input,
  invalid_order,
  monotonicity,
  geometry,
  regime,
  convergence,
  degenerate_input,
  scale,
  unsupported,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid_input";
    case errc::invalid_order: return "invalid_order";
    case errc::monotonicity: return "monotonicity";
    case errc::geometry: return "geometry";
    case errc::regime: return "regime";
    case errc::convergence: return "convergence";
    case errc::degenerate_input: return "degenerate_input";
    case errc::scale: return "scale";
    case errc::unsupported: return "unsupported";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace smt
