#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "smt/errors.hpp"
#include "smt/polar_grid.hpp"
#include "smt/radial_function.hpp"
#include "smt/torus_green.hpp"

namespace smt {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_csv(const RadialFunction& u) {
  std::ostringstream out;
  out << "r,u\n";
  for (std::size_t i = 0; i < u.nodes().size(); ++i)
    out << format_double(u.nodes()[i]) << ',' << format_double(u.values()[i]) << '\n';
  return out.str();
}

inline RadialFunction radial_from_csv(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), errc::invalid_input, "radial csv: empty");
  require(line == "r,u" || line == "r,u\r", errc::invalid_input, "radial csv: bad header");
  std::vector<double> r, u;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    require(comma != std::string::npos, errc::invalid_input, "radial csv: bad row");
    r.push_back(std::stod(line.substr(0, comma)));
    u.push_back(std::stod(line.substr(comma + 1)));
  }
  return RadialFunction(std::move(r), std::move(u));
}

inline std::string to_csv(const PolarGridFunction& u) {
  std::ostringstream out;
  out << "i_r,i_theta,value\n";
  for (std::size_t i = 0; i < u.n_r(); ++i)
    for (std::size_t j = 0; j < u.n_theta(); ++j)
      out << i << ',' << j << ',' << format_double(u(i, j)) << '\n';
  return out.str();
}

// Flat binary layout: 8-byte little-endian point count per side, then n^2
// IEEE doubles row-major.
inline void save_binary(const TorusField& u, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), errc::invalid_input, "save_binary: cannot open " + path);
  const std::uint64_t n = u.n();
  out.write(reinterpret_cast<const char*>(&n), 8);
  out.write(reinterpret_cast<const char*>(u.values().data()),
            static_cast<std::streamsize>(sizeof(double) * u.values().size()));
}

inline TorusField load_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), errc::invalid_input, "load_binary: cannot open " + path);
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), 8);
  TorusField u(static_cast<std::size_t>(n));
  in.read(reinterpret_cast<char*>(u.values().data()),
          static_cast<std::streamsize>(sizeof(double) * u.values().size()));
  require(static_cast<bool>(in), errc::invalid_input, "load_binary: truncated field file");
  return u;
}

inline std::string to_csv(const TorusField& u) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (std::size_t i = 0; i < u.n(); ++i)
    for (std::size_t j = 0; j < u.n(); ++j)
      out << i << ',' << j << ',' << format_double(u(i, j)) << '\n';
  return out.str();
}

inline nlohmann::json green_report(const GreenData& g) {
  return nlohmann::json{{"p", {g.p[0], g.p[1]}},
                        {"lambda", g.lambda},
                        {"q", g.q},
                        {"A", g.robin},
                        {"norm_q", g.norm_q},
                        {"fit_residual", g.fit_residual},
                        {"fit_annulus", {g.fit_r1, g.fit_r2}},
                        {"n", g.field.n()}};
}

}  // namespace smt
